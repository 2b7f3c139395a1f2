#pragma once

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sumprod {

using ExponentRow = std::vector<std::int64_t>;

/// Prime factorization of n >= 1, ascending primes.
///
/// Trial division up to limits.trial_division_bound, then Miller-Rabin plus
/// Pollard-Brent rho with limits.rho_iterations total steps. Running out of
/// steps throws CapExceeded rather than returning a partial answer.
std::vector<std::pair<BigInt, std::uint64_t>> factorize(const BigInt& n, const Limits& limits = default_limits());

bool is_probable_prime(const BigInt& n);

/// The first `count` primes, by sieve.
std::vector<long> first_primes(std::size_t count);

/// Largest e with p^e | n (n != 0, p >= 2).
std::uint64_t valuation(BigInt n, const BigInt& p);

/// The exponent map: one signed exponent vector per element over a shared prime list.
struct ExponentMatrix {
  std::vector<BigInt> primes;
  std::vector<ExponentRow> rows;  // rows[i] belongs to source[i]
  FinSet source;

  /// Product of primes^row, i.e. the original element.
  Rat reconstruct(std::size_t row) const;
};

ExponentMatrix exponent_matrix(const FinSet& a, const Limits& limits = default_limits());

struct MultDim {
  std::size_t dimension = 0;
  std::size_t basepoint = 0;             // row of the smallest element
  std::vector<ExponentRow> basis;        // independent row differences from the basepoint
  std::vector<std::size_t> projection;   // prime indices; projecting onto them is injective on the rows
  std::vector<BigInt> primes;
};

/// Multiplicative dimension: affine rank of the exponent rows, exact.
MultDim mult_dim(const FinSet& a, const Limits& limits = default_limits());
MultDim mult_dim(const ExponentMatrix& matrix);

/// Rank of integer vectors by fraction-free elimination.
std::size_t integer_rank(const std::vector<ExponentRow>& rows);

/// Number of distinct sums of sub-collections of exponent rows. Equals
/// |simple_closure(A, product)| because the exponent map turns products into sums.
BigInt vector_simple_sum_count(const FinSet& a, const Limits& limits = default_limits());
BigInt vector_simple_sum_count(const ExponentMatrix& matrix, const Limits& limits = default_limits());

}  // namespace sumprod
