#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumprod {

using BigInt = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

enum class Op { sum, product };

const char* to_string(Op op);
Op parse_op(const std::string& text);

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (set files, progression files, graph files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition failed (zero in a product, q = 0, bad index...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap, enumeration budget, or factorization budget was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Work caps shared by all modules.
///
/// The process-wide defaults come from `default_limits()`, which honours the
/// SUMPROD_BUDGET environment variable (it replaces size_cap, enumerate_budget
/// and node_budget).
struct Limits {
  std::uint64_t size_cap = 10'000'000;          // distinct elements in any result
  std::uint64_t enumerate_budget = 100'000'000; // |A|^h tuples on enumerate paths
  std::uint64_t node_budget = 50'000'000;       // evaluated leaves in search_min
  std::uint64_t trial_division_bound = 1'000'000;
  std::uint64_t rho_iterations = 2'000'000;
  std::uint64_t dense_range = std::uint64_t{1} << 24;  // dense convolution threshold

  Limits with_budget(std::uint64_t budget) const;
};

const Limits& default_limits();

std::string to_string(const BigInt& value);
/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rat& value);

inline BigInt numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return denominator_of(q) == 1; }

BigInt pow(const BigInt& base, std::uint64_t exponent);
Rat pow(const Rat& base, std::uint64_t exponent);

}  // namespace sumprod
