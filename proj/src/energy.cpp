#include "sumprod/energy.hpp"

#include "sumprod/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <unordered_map>

namespace sumprod {

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 v) {
  BigInt out(static_cast<std::uint64_t>(v >> 64));
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

BigInt to_big(std::uint64_t v) { return BigInt(v); }
const BigInt& to_big(const BigInt& v) { return v; }

// a_i = values[i] / scale + offset, with integers values[i] >= 0 and values[0] = 0.
struct Scaled {
  BigInt scale{1};
  Rat offset{0};
  std::vector<BigInt> values;
  BigInt max_value{0};
};

Scaled scale_set(const FinSet& a) {
  Scaled s;
  if (a.empty()) return s;
  for (const Rat& x : a) s.scale = boost::multiprecision::lcm(s.scale, denominator_of(x));
  s.offset = a.min();
  s.values.reserve(a.size());
  for (const Rat& x : a) s.values.push_back(numerator_of((x - s.offset) * s.scale));
  s.max_value = s.values.back();
  return s;
}

void check_distinct(std::uint64_t distinct, const Limits& limits) {
  if (distinct > limits.size_cap)
    throw CapExceeded("representation counts: more than " + std::to_string(limits.size_cap) + " distinct sums");
}

constexpr std::uint64_t kKeyLimit = std::uint64_t{1} << 62;

template <class C>
C times(const C& c, const C& w, bool unit) {
  return unit ? c : C(c * w);
}

// Calls visit(key, coefficient) for every nonzero coefficient of
// (sum_i w_i x^{v_i})^h, keys ascending. Keys are std::uint64_t when the
// largest sum fits, BigInt otherwise.
template <class C, class Visit>
void convolve(const Scaled& s, const std::vector<C>& w, bool unit, unsigned h, const Limits& limits, Visit&& visit) {
  if (s.values.empty()) return;
  const BigInt top = s.max_value * h;
  const std::size_t k = s.values.size();

  if (top < kKeyLimit && top + 1 <= limits.dense_range) {
    std::vector<std::uint64_t> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = s.values[i].convert_to<std::uint64_t>();
    const std::uint64_t maxv = v.back();
    std::vector<C> cur(maxv + 1, C(0));
    for (std::size_t i = 0; i < k; ++i) cur[v[i]] = w[i];
    for (unsigned step = 2; step <= h; ++step) {
      std::vector<std::uint64_t> nz;
      for (std::uint64_t j = 0; j < cur.size(); ++j)
        if (cur[j] != 0) nz.push_back(j);
      std::vector<C> next(maxv * step + 1, C(0));
      for (std::uint64_t j : nz)
        for (std::size_t i = 0; i < k; ++i) next[j + v[i]] += times(cur[j], w[i], unit);
      cur = std::move(next);
      std::uint64_t distinct = 0;
      for (const C& c : cur) distinct += c != 0;
      check_distinct(distinct, limits);
    }
    for (std::uint64_t j = 0; j < cur.size(); ++j)
      if (cur[j] != 0) visit(j, cur[j]);
    return;
  }

  auto sparse = [&](auto key_tag) {
    using Key = decltype(key_tag);
    std::vector<Key> v(k);
    for (std::size_t i = 0; i < k; ++i) {
      if constexpr (std::is_same_v<Key, BigInt>) v[i] = s.values[i];
      else v[i] = s.values[i].template convert_to<std::uint64_t>();
    }
    std::map<Key, C> cur;
    for (std::size_t i = 0; i < k; ++i) cur.emplace(v[i], w[i]);
    for (unsigned step = 2; step <= h; ++step) {
      std::map<Key, C> next;
      for (const auto& [key, c] : cur)
        for (std::size_t i = 0; i < k; ++i) {
          next[key + v[i]] += times(c, w[i], unit);
          if (next.size() > limits.size_cap) check_distinct(next.size(), limits);
        }
      cur = std::move(next);
    }
    for (const auto& [key, c] : cur) visit(key, c);
  };
  if (top < kKeyLimit) sparse(std::uint64_t{0});
  else sparse(BigInt(0));
}

// True when every coefficient of the h-th power fits comfortably in 64 bits.
bool small_counts(std::size_t k, unsigned h) { return pow(BigInt(k), h) < kKeyLimit; }

template <class C>
BigInt sum_of_squares(const Scaled& s, const std::vector<C>& w, bool unit, unsigned h, const Limits& limits) {
  if constexpr (std::is_same_v<C, std::uint64_t>) {
    u128 total = 0;
    convolve(s, w, unit, h, limits, [&](const auto&, std::uint64_t c) { total += static_cast<u128>(c) * c; });
    return to_big(total);
  } else {
    BigInt total = 0;
    convolve(s, w, unit, h, limits, [&](const auto&, const BigInt& c) { total += c * c; });
    return total;
  }
}

BigInt energy_by_enumeration(const Scaled& s, unsigned h, const Limits& limits) {
  const std::size_t k = s.values.size();
  if (k == 0) return 0;
  if (pow(BigInt(k), h) > limits.enumerate_budget)
    throw CapExceeded("energy: " + std::to_string(k) + "^" + std::to_string(h) +
                      " tuples exceed the enumeration budget of " + std::to_string(limits.enumerate_budget));
  std::vector<std::size_t> idx(h, 0);
  BigInt total = 0;
  auto walk = [&](auto key_tag) {
    using Key = decltype(key_tag);
    std::vector<Key> v(k);
    for (std::size_t i = 0; i < k; ++i) {
      if constexpr (std::is_same_v<Key, BigInt>) v[i] = s.values[i];
      else v[i] = s.values[i].template convert_to<std::uint64_t>();
    }
    std::map<Key, std::uint64_t> counts;
    while (true) {
      Key sum = 0;
      for (std::size_t i : idx) sum += v[i];
      ++counts[sum];
      std::size_t pos = 0;
      while (pos < h && ++idx[pos] == k) idx[pos++] = 0;
      if (pos == h) break;
    }
    for (const auto& [key, c] : counts) total += BigInt(c) * c;
  };
  if (s.max_value * h < kKeyLimit) walk(std::uint64_t{0});
  else walk(BigInt(0));
  return total;
}

void require_h(unsigned h, const char* what) {
  if (h == 0) throw DomainError(std::string(what) + ": h must be at least 1");
}

void require_positive_integers(const FinSet& a, const char* what) {
  for (const Rat& x : a)
    if (!is_integer(x) || x <= 0) throw DomainError(std::string(what) + ": elements must be positive integers");
}

std::string layer_key(const std::vector<std::uint64_t>& key) {
  std::string out = "E(";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + std::to_string(key[i]);
  return out + ")";
}

}  // namespace

BigInt RepCounts::total() const {
  BigInt t = 0;
  for (const auto& [n, c] : counts) t += c;
  return t;
}

void check_weights(const FinSet& a, const WeightVector& d) {
  if (d.size() != a.size())
    throw DomainError("weights: expected " + std::to_string(a.size()) + " weights, got " + std::to_string(d.size()));
  bool positive = false;
  for (const Rat& x : d) {
    if (x < 0) throw DomainError("weights: negative weight " + to_string(x));
    positive = positive || x > 0;
  }
  if (!positive) throw DomainError("weights: at least one weight must be positive");
}

BigInt energy_constant(unsigned h) { return BigInt(2) * h * h - h; }

RepCounts rep_counts(const FinSet& a, unsigned h, const Limits& limits) {
  require_h(h, "rep_counts");
  RepCounts out;
  out.h = h;
  out.base = a;
  const Scaled s = scale_set(a);
  const Rat shift = s.offset * h;
  auto record = [&](const auto& key, const auto& c) {
    out.counts.emplace(Rat(to_big(key)) / s.scale + shift, to_big(c));
  };
  if (small_counts(a.size(), h)) {
    const std::vector<std::uint64_t> w(a.size(), 1);
    convolve(s, w, true, h, limits, record);
  } else {
    const std::vector<BigInt> w(a.size(), BigInt(1));
    convolve(s, w, true, h, limits, record);
  }
  return out;
}

BigInt energy(const FinSet& a, unsigned h, EnergyPath path, const Limits& limits) {
  require_h(h, "energy");
  const Scaled s = scale_set(a);
  if (path == EnergyPath::enumerate) return energy_by_enumeration(s, h, limits);
  if (small_counts(a.size(), h)) return sum_of_squares(s, std::vector<std::uint64_t>(a.size(), 1), true, h, limits);
  return sum_of_squares(s, std::vector<BigInt>(a.size(), BigInt(1)), true, h, limits);
}

Rat weighted_energy(const FinSet& a, const WeightVector& d, unsigned h, const Limits& limits) {
  require_h(h, "weighted_energy");
  check_weights(a, d);
  // Drop zero weights and clear the remaining denominators.
  std::vector<Rat> support;
  std::vector<Rat> kept;
  BigInt den = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (d[i] == 0) continue;
    support.push_back(a[i]);
    kept.push_back(d[i]);
    den = boost::multiprecision::lcm(den, denominator_of(d[i]));
  }
  std::vector<BigInt> w;
  w.reserve(kept.size());
  for (const Rat& x : kept) w.push_back(numerator_of(x * den));
  const Scaled s = scale_set(FinSet::from_sorted_unique(std::move(support)));
  const BigInt total = sum_of_squares(s, w, false, h, limits);
  return Rat(total) / Rat(pow(den, 2 * static_cast<std::uint64_t>(h)));
}

long double quadrature_energy(const FinSet& a, const WeightVector& d, unsigned h) {
  require_h(h, "quadrature_energy");
  require_positive_integers(a, "quadrature_energy");
  check_weights(a, d);
  if (a.max() > Rat(1'000'000'000)) throw DomainError("quadrature_energy: elements too large for sampling");
  std::vector<std::uint64_t> freq;
  std::vector<long double> weight;
  for (std::size_t i = 0; i < a.size(); ++i) {
    freq.push_back(numerator_of(a[i]).convert_to<std::uint64_t>());
    weight.push_back(d[i].convert_to<long double>());
  }
  const std::uint64_t m = 2 * static_cast<std::uint64_t>(h) * freq.back() + 1;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  long double sum = 0;
  for (std::uint64_t t = 0; t < m; ++t) {
    std::complex<long double> s = 0;
    for (std::size_t i = 0; i < freq.size(); ++i) {
      // reduce a*t mod m first so the angle stays accurate
      const auto r = static_cast<long double>(static_cast<std::uint64_t>((static_cast<u128>(freq[i]) * t) % m));
      s += weight[i] * std::polar(1.0L, two_pi * r / static_cast<long double>(m));
    }
    sum += std::pow(std::norm(s), static_cast<long double>(h));
  }
  return sum / static_cast<long double>(m);
}

LayerDecomposition layer_partition(const FinSet& a, const std::vector<BigInt>& primes) {
  require_positive_integers(a, "layer_partition");
  std::set<BigInt> seen;
  for (const BigInt& p : primes) {
    if (p < 2 || !is_probable_prime(p)) throw DomainError("layer_partition: " + p.str() + " is not prime");
    if (!seen.insert(p).second) throw DomainError("layer_partition: prime " + p.str() + " listed twice");
  }
  LayerDecomposition out;
  out.primes = primes;
  std::map<std::vector<std::uint64_t>, std::vector<Rat>> groups;
  for (const Rat& x : a) {
    std::vector<std::uint64_t> key;
    for (const BigInt& p : primes) key.push_back(valuation(numerator_of(x), p));
    groups[key].push_back(x);
  }
  for (auto& [key, elems] : groups) out.layers.emplace(key, FinSet::from_sorted_unique(std::move(elems)));
  return out;
}

Verdict layer_inequality_check(const FinSet& a, const std::vector<BigInt>& primes, unsigned h, const Limits& limits) {
  require_h(h, "layer_inequality_check");
  const LayerDecomposition parts = layer_partition(a, primes);
  const BigInt whole = energy(a, h, EnergyPath::convolve, limits);
  const BigInt c = energy_constant(h);
  Interval layer_sum;
  std::vector<std::pair<std::string, BigInt>> per_layer;
  for (const auto& [key, layer] : parts.layers) {
    const BigInt e = energy(layer, h, EnergyPath::convolve, limits);
    layer_sum = layer_sum + root(Interval(e), h);
    per_layer.emplace_back(layer_key(key), e);
  }
  const BigInt ct = pow(c, primes.size());
  Verdict v;
  if (h == 1) {
    // no roots: both sides are integers
    BigInt total = 0;
    for (const auto& entry : per_layer) total += entry.second;
    v = make_verdict("layers", whole, Relation::less_equal, BigInt(ct * total));
  } else {
    v = make_verdict("layers", root(Interval(whole), h), Relation::less_equal, Interval(ct) * layer_sum, true,
                     Rat(1, 1'000'000'000));
  }
  v.with("h", h).with("t", primes.size()).with("c_h", c).with("energy", whole).with("layers", parts.layers.size());
  for (const auto& [key, e] : per_layer) v.with(key, e);
  return v;
}

Verdict tail_monotonicity_check(const FinSet& a, const BigInt& p, long j, unsigned h, const Limits& limits) {
  require_h(h, "tail_monotonicity_check");
  const LayerDecomposition parts = layer_partition(a, {p});
  std::vector<Rat> tail;
  for (const auto& [key, layer] : parts.layers)
    if (j <= 0 || key[0] >= static_cast<std::uint64_t>(j))
      tail.insert(tail.end(), layer.begin(), layer.end());
  const FinSet tail_set(std::move(tail));
  const BigInt whole = energy(a, h, EnergyPath::convolve, limits);
  const BigInt part = energy(tail_set, h, EnergyPath::convolve, limits);
  Verdict v = make_verdict("tail", whole, Relation::greater_equal, part);
  v.with("p", p).with("j", j).with("h", h).with("tail_size", tail_set.size());
  return v;
}

}  // namespace sumprod
