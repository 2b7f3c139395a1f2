#include "sumprod/arith.hpp"

#include <gmp.h>

#include <algorithm>
#include <iterator>
#include <limits>
#include <map>
#include <string>

namespace sumprod {

namespace {

using BigRow = std::vector<BigInt>;

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void make_primitive(BigRow& row) {
  BigInt g = 0;
  for (const BigInt& x : row)
    if (x != 0) g = boost::multiprecision::gcd(g, abs_value(x));
  if (g > 1)
    for (BigInt& x : row) x /= g;
}

bool is_zero(const BigRow& row) {
  return std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x == 0; });
}

// Incremental row echelon basis, fraction-free: rows stay integral and primitive.
class Echelon {
 public:
  // Returns true when `v` was independent of the rows so far (and keeps it).
  bool insert(BigRow v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = lead_[k];
      if (v[c] == 0) continue;
      const BigInt a = rows_[k][c];
      const BigInt b = v[c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * rows_[k][j];
      make_primitive(v);
    }
    if (is_zero(v)) return false;
    const auto lead = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; }) - v.begin();
    lead_.push_back(static_cast<std::size_t>(lead));
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<BigRow> rows_;
  std::vector<std::size_t> lead_;
};

BigRow to_big(const ExponentRow& row) { return BigRow(row.begin(), row.end()); }

// Left-to-right pivot columns of a full-row-rank matrix: the lexicographically
// first set of columns whose square submatrix is nonsingular.
std::vector<std::size_t> pivot_columns(std::vector<BigRow> m) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const BigInt a = m[r][c];
      const BigInt b = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
      make_primitive(m[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

BigInt apply_step(const BigInt& x, const BigInt& c, const BigInt& n) {
  BigInt y = x * x + c;
  return y % n;
}

// Pollard-Brent; returns a nontrivial factor of composite odd n.
BigInt pollard_brent(const BigInt& n, std::uint64_t& remaining) {
  auto spend = [&](std::uint64_t steps) {
    if (steps > remaining) throw CapExceeded("factorize: Pollard rho budget exhausted on " + n.str());
    remaining -= steps;
  };
  for (unsigned long c_seed = 1;; ++c_seed) {
    const BigInt c(c_seed);
    BigInt y = 2 + c_seed;
    BigInt x, ys;
    BigInt g = 1;
    BigInt q = 1;
    const std::uint64_t block = 128;
    std::uint64_t r = 1;
    do {
      x = y;
      spend(r);
      for (std::uint64_t i = 0; i < r; ++i) y = apply_step(y, c, n);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(block, r - k);
        spend(steps);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = apply_step(y, c, n);
          q = (q * abs_value(BigInt(x - y))) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += block;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        spend(1);
        ys = apply_step(ys, c, n);
        g = boost::multiprecision::gcd(abs_value(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::int64_t sign, std::map<BigInt, std::int64_t>& exps, const Limits& limits) {
  for (const auto& [p, e] : factorize(n, limits)) exps[p] += sign * static_cast<std::int64_t>(e);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.backend().data(), 30) != 0;
}

std::vector<std::pair<BigInt, std::uint64_t>> factorize(const BigInt& n_in, const Limits& limits) {
  if (n_in < 1) throw DomainError("factorize: argument must be positive, got " + n_in.str());
  std::map<BigInt, std::uint64_t> found;
  BigInt n = n_in;

  std::uint64_t d = 2;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t m = n.convert_to<std::uint64_t>();
    for (; d <= limits.trial_division_bound; d += (d == 2 ? 1 : 2)) {
      if (static_cast<unsigned __int128>(d) * d > m) break;
      while (m % d == 0) {
        ++found[BigInt(d)];
        m /= d;
      }
    }
    n = m;
  } else {
    for (; d <= limits.trial_division_bound; d += (d == 2 ? 1 : 2)) {
      if (BigInt(d) * d > n) break;
      while (n % d == 0) {
        ++found[BigInt(d)];
        n /= d;
      }
    }
  }
  if (n > 1) {
    if (BigInt(d) * d > n) {
      ++found[n];
    } else {
      std::uint64_t remaining = limits.rho_iterations;
      std::vector<BigInt> pending{n};
      while (!pending.empty()) {
        BigInt m = std::move(pending.back());
        pending.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
          ++found[m];
          continue;
        }
        const BigInt f = pollard_brent(m, remaining);
        pending.push_back(f);
        pending.push_back(m / f);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<long> first_primes(std::size_t count) {
  std::size_t limit = 16;
  while (true) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<long> primes;
    for (std::size_t i = 2; i <= limit && primes.size() < count; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<long>(i));
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    if (primes.size() >= count) return primes;
    limit *= 2;
  }
}

std::uint64_t valuation(BigInt n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of 0");
  if (p < 2) throw DomainError("valuation base must be at least 2");
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Rat ExponentMatrix::reconstruct(std::size_t row) const {
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::int64_t e = rows[row][i];
    if (e > 0) num *= pow(primes[i], static_cast<std::uint64_t>(e));
    if (e < 0) den *= pow(primes[i], static_cast<std::uint64_t>(-e));
  }
  return Rat(num, den);
}

ExponentMatrix exponent_matrix(const FinSet& a, const Limits& limits) {
  if (!a.all_positive()) throw DomainError("exponent_matrix: every element must be positive");
  std::vector<std::map<BigInt, std::int64_t>> per_element;
  per_element.reserve(a.size());
  std::map<BigInt, std::size_t> prime_index;
  for (const Rat& q : a) {
    std::map<BigInt, std::int64_t> exps;
    factor_into(numerator_of(q), +1, exps, limits);
    factor_into(denominator_of(q), -1, exps, limits);
    for (const auto& [p, e] : exps) prime_index.emplace(p, 0);
    per_element.push_back(std::move(exps));
  }

  ExponentMatrix m;
  m.source = a;
  for (auto& [p, idx] : prime_index) {
    idx = m.primes.size();
    m.primes.push_back(p);
  }
  for (const auto& exps : per_element) {
    ExponentRow row(m.primes.size(), 0);
    for (const auto& [p, e] : exps) row[prime_index.at(p)] = e;
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::size_t integer_rank(const std::vector<ExponentRow>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(to_big(r));
  return e.rank();
}

MultDim mult_dim(const ExponentMatrix& matrix) {
  MultDim out;
  out.primes = matrix.primes;
  if (matrix.rows.empty()) return out;
  out.basepoint = 0;
  const ExponentRow& base = matrix.rows[out.basepoint];
  Echelon echelon;
  std::vector<BigRow> basis_big;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    if (i == out.basepoint) continue;
    ExponentRow diff(base.size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = matrix.rows[i][j] - base[j];
    if (echelon.insert(to_big(diff))) {
      basis_big.push_back(to_big(diff));
      out.basis.push_back(std::move(diff));
    }
  }
  out.dimension = out.basis.size();
  out.projection = pivot_columns(std::move(basis_big));
  return out;
}

MultDim mult_dim(const FinSet& a, const Limits& limits) { return mult_dim(exponent_matrix(a, limits)); }

BigInt vector_simple_sum_count(const ExponentMatrix& matrix, const Limits& limits) {
  const std::size_t width = matrix.primes.size();
  std::vector<ExponentRow> frontier{ExponentRow(width, 0)};
  for (const ExponentRow& row : matrix.rows) {
    // Adding a fixed vector preserves lexicographic order, so the shifted
    // frontier is already sorted and a linear merge suffices.
    std::vector<ExponentRow> moved = frontier;
    for (ExponentRow& v : moved)
      for (std::size_t j = 0; j < width; ++j) v[j] += row[j];
    std::vector<ExponentRow> merged;
    merged.reserve(frontier.size() + moved.size());
    std::set_union(frontier.begin(), frontier.end(), moved.begin(), moved.end(), std::back_inserter(merged));
    frontier = std::move(merged);
    if (frontier.size() > limits.size_cap)
      throw CapExceeded("vector_simple_sum_count: more than " + std::to_string(limits.size_cap) + " distinct vectors");
  }
  return BigInt(frontier.size());
}

BigInt vector_simple_sum_count(const FinSet& a, const Limits& limits) {
  return vector_simple_sum_count(exponent_matrix(a, limits), limits);
}

}  // namespace sumprod
