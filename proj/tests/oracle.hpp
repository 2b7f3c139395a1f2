#pragma once

// Brute-force reference computations used only by the tests. Everything here
// enumerates tuples or subsets directly and shares no code with the library's
// DP / convolution / elimination paths.

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using sumprod::BigInt;
using sumprod::FinSet;
using sumprod::Op;
using sumprod::Rat;

inline std::vector<Rat> elems(const FinSet& s) { return {s.begin(), s.end()}; }

inline FinSet to_finset(const std::set<Rat>& s) { return FinSet(std::vector<Rat>(s.begin(), s.end())); }

inline Rat apply(Op op, const Rat& x, const Rat& y) { return op == Op::sum ? Rat(x + y) : Rat(x * y); }

/// Calls f with every ordered h-tuple of indices into a set of size n.
inline void for_each_tuple(std::size_t n, unsigned h, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (n == 0) return;
  std::vector<std::size_t> idx(h, 0);
  while (true) {
    f(idx);
    unsigned pos = 0;
    while (pos < h && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == h) return;
  }
}

/// Calls f with every subset (as a bitmask) of an n-element ground set.
inline void for_each_mask(std::size_t n, const std::function<void(std::uint64_t)>& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) f(mask);
}

/// Every subset of {lo..hi} with size in [min_size, max_size], as long vectors in
/// increasing order (lexicographic).
inline std::vector<std::vector<long>> subsets(long lo, long hi, std::size_t min_size, std::size_t max_size) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long next) {
    if (cur.size() >= min_size) out.push_back(cur);
    if (cur.size() == max_size) return;
    for (long v = next; v <= hi; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

inline FinSet ints(const std::vector<long>& v) { return FinSet::from_integers(v); }

inline FinSet combine(const FinSet& a, const FinSet& b, Op op) {
  std::set<Rat> out;
  for (const Rat& x : a)
    for (const Rat& y : b) out.insert(apply(op, x, y));
  return to_finset(out);
}

inline FinSet iterate(const FinSet& a, unsigned h, Op op) {
  std::set<Rat> out;
  const auto v = elems(a);
  for_each_tuple(v.size(), h, [&](const std::vector<std::size_t>& idx) {
    Rat acc = op == Op::sum ? Rat(0) : Rat(1);
    for (auto i : idx) acc = apply(op, acc, v[i]);
    out.insert(acc);
  });
  return to_finset(out);
}

inline FinSet simple(const FinSet& a, Op op) {
  std::set<Rat> out;
  const auto v = elems(a);
  for_each_mask(v.size(), [&](std::uint64_t mask) {
    Rat acc = op == Op::sum ? Rat(0) : Rat(1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask >> i & 1U) acc = apply(op, acc, v[i]);
    out.insert(acc);
  });
  return to_finset(out);
}

inline FinSet box(const FinSet& a, unsigned h) {
  std::set<Rat> out;
  const auto v = elems(a);
  // coefficient vectors in {0..h}^k via the tuple walker over h+1 "digits"
  for_each_tuple(h + 1, static_cast<unsigned>(v.size()), [&](const std::vector<std::size_t>& coef) {
    Rat acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += Rat(static_cast<long>(coef[i])) * v[i];
    out.insert(acc);
  });
  if (v.empty()) out.insert(Rat(0));
  return to_finset(out);
}

inline FinSet sum_diff(const FinSet& n, unsigned h, unsigned l) {
  std::set<Rat> out;
  const auto v = elems(n);
  for_each_tuple(v.size(), h + l, [&](const std::vector<std::size_t>& idx) {
    Rat acc = 0;
    for (unsigned i = 0; i < h + l; ++i) acc += i < h ? v[idx[i]] : Rat(-v[idx[i]]);
    out.insert(acc);
  });
  return to_finset(out);
}

/// Gamma_{h,A}(n) by walking all ordered h-tuples.
inline std::map<Rat, BigInt> rep_counts(const FinSet& a, unsigned h) {
  std::map<Rat, BigInt> counts;
  const auto v = elems(a);
  for_each_tuple(v.size(), h, [&](const std::vector<std::size_t>& idx) {
    Rat acc = 0;
    for (auto i : idx) acc += v[i];
    counts[acc] += 1;
  });
  return counts;
}

inline BigInt energy(const FinSet& a, unsigned h) {
  BigInt e = 0;
  for (const auto& [value, c] : rep_counts(a, h)) e += c * c;
  return e;
}

inline Rat weighted_energy(const FinSet& a, const std::vector<Rat>& d, unsigned h) {
  std::map<Rat, Rat> coef;
  const auto v = elems(a);
  for_each_tuple(v.size(), h, [&](const std::vector<std::size_t>& idx) {
    Rat sum = 0;
    Rat weight = 1;
    for (auto i : idx) {
      sum += v[i];
      weight *= d[i];
    }
    coef[sum] += weight;
  });
  Rat e = 0;
  for (const auto& [value, c] : coef) e += c * c;
  return e;
}

/// Quadruples (n1, n2, n3, n4) with n1 - n2 + n3 - n4 = 0.
inline BigInt quadruples(const FinSet& a) {
  BigInt count = 0;
  const auto v = elems(a);
  for_each_tuple(v.size(), 4, [&](const std::vector<std::size_t>& i) {
    if (v[i[0]] - v[i[1]] + v[i[2]] - v[i[3]] == 0) count += 1;
  });
  return count;
}

/// Exponent of each prime in a positive integer by trial division.
inline std::map<long, long> factor_small(long n) {
  std::map<long, long> f;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

/// Rank of integer vectors by textbook rational Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rat>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

/// Multiplicative dimension of a set of positive integers.
inline std::size_t mult_dim(const std::vector<long>& a) {
  std::set<long> primes;
  std::vector<std::map<long, long>> fs;
  for (long x : a) {
    fs.push_back(factor_small(x));
    for (auto& [p, e] : fs.back()) primes.insert(p);
  }
  std::vector<std::vector<Rat>> diffs;
  for (std::size_t i = 1; i < a.size(); ++i) {
    std::vector<Rat> row;
    for (long p : primes) {
      const long ei = fs[i].count(p) ? fs[i].at(p) : 0;
      const long e0 = fs[0].count(p) ? fs[0].at(p) : 0;
      row.emplace_back(ei - e0);
    }
    diffs.push_back(row);
  }
  return rank(diffs);
}

inline long f_value(const std::vector<long>& a) {
  std::set<long> sums, prods;
  for (long x : a)
    for (long y : a) {
      sums.insert(x + y);
      prods.insert(x * y);
    }
  std::set<long> uni = sums;
  uni.insert(prods.begin(), prods.end());
  return static_cast<long>(uni.size());
}

inline long g_value(const std::vector<long>& a) {
  std::set<long> sums;
  std::set<BigInt> prods;
  for_each_mask(a.size(), [&](std::uint64_t mask) {
    long s = 0;
    BigInt p = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1U) {
        s += a[i];
        p *= a[i];
      }
    sums.insert(s);
    prods.insert(p);
  });
  return static_cast<long>(sums.size() + prods.size());
}

}  // namespace oracle
