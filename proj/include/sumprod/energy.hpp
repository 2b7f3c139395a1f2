#pragma once

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"
#include "sumprod/verdict.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sumprod {

/// Gamma_{h,A}(n): the number of ordered h-tuples of A summing to n.
struct RepCounts {
  unsigned h = 1;
  FinSet base;
  std::map<Rat, BigInt> counts;

  /// Sum of all counts, |A|^h.
  BigInt total() const;
};

/// One nonnegative weight per element of a set, in set order.
using WeightVector = std::vector<Rat>;

/// Throws DomainError unless `d` has one nonnegative entry per element and
/// at least one positive entry.
void check_weights(const FinSet& a, const WeightVector& d);

enum class EnergyPath { enumerate, convolve };

/// 2h^2 - h.
BigInt energy_constant(unsigned h);

/// Representation counts by repeated sparse (or dense, when the value range
/// is small) polynomial multiplication after clearing denominators.
RepCounts rep_counts(const FinSet& a, unsigned h, const Limits& limits = default_limits());

/// E_h(A) = sum over n of Gamma_{h,A}(n)^2. The enumerate path walks all
/// |A|^h tuples and refuses when that exceeds limits.enumerate_budget.
BigInt energy(const FinSet& a, unsigned h, EnergyPath path = EnergyPath::convolve,
              const Limits& limits = default_limits());

/// sum over n of (sum over a_1+...+a_h = n of d_{a_1}...d_{a_h})^2, exactly.
Rat weighted_energy(const FinSet& a, const WeightVector& d, unsigned h, const Limits& limits = default_limits());

/// Mean of |sum d_a e(a x)|^{2h} over 2h*max(A)+1 equally spaced points of
/// [0,1). The integrand has degree below the point count, so this equals
/// weighted_energy up to floating-point rounding. Requires positive integers.
long double quadrature_energy(const FinSet& a, const WeightVector& d, unsigned h);

/// Elements grouped by their tuple of p-adic valuations.
struct LayerDecomposition {
  std::vector<BigInt> primes;
  std::map<std::vector<std::uint64_t>, FinSet> layers;
};

/// Requires positive integer elements and distinct primes.
LayerDecomposition layer_partition(const FinSet& a, const std::vector<BigInt>& primes);

/// E_h(A)^{1/h} <= c_h^t * sum over layers of E_h(layer)^{1/h}, with roots
/// evaluated in interval arithmetic and an absolute guard band of 1e-9.
Verdict layer_inequality_check(const FinSet& a, const std::vector<BigInt>& primes, unsigned h,
                               const Limits& limits = default_limits());

/// E_h(A) >= E_h(A_{>=j}), where A_{>=j} keeps the elements with v_p(a) >= j.
Verdict tail_monotonicity_check(const FinSet& a, const BigInt& p, long j, unsigned h,
                                const Limits& limits = default_limits());

}  // namespace sumprod
