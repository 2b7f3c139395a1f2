#pragma once

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"
#include "sumprod/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumprod {

/// {base * ratios[0]^j_0 * ... * ratios[s-1]^j_{s-1} : 0 <= j_i < lengths[i]}.
struct ProgressionDesc {
  Rat base{1};
  std::vector<Rat> ratios;
  std::vector<std::uint64_t> lengths;

  /// Throws DomainError unless base > 0, every ratio is positive and not 1,
  /// every length is at least 1, and the two lists have equal length.
  void validate() const;
  std::size_t dimension() const { return ratios.size(); }
  /// Product of the lengths.
  BigInt volume() const;
};

/// Validating constructor.
ProgressionDesc make_progression(Rat base, std::vector<Rat> ratios, std::vector<std::uint64_t> lengths);

FinSet enumerate_progression(const ProgressionDesc& p, const Limits& limits = default_limits());

/// Distinct exponent tuples give distinct values.
bool is_proper(const ProgressionDesc& p, const Limits& limits = default_limits());

struct Containment {
  bool contained = false;
  /// One entry per element of A, in set order; empty when that element is not in P.
  std::vector<std::optional<std::vector<std::uint64_t>>> tuples;
};

/// Exponent tuples placing each element of A in P, found by exact linear
/// solving on prime exponents. When the ratios are dependent the
/// lexicographically first in-range tuple is reported.
Containment contains(const ProgressionDesc& p, const FinSet& a, const Limits& limits = default_limits());

/// mult_dim(P) computed without enumerating P: the rank of the exponent
/// vectors of the ratios whose length is at least 2.
std::size_t progression_dimension(const ProgressionDesc& p, const Limits& limits = default_limits());

/// mult_dim(A) <= mult_dim(P) <= s, gated on A being contained in P.
Verdict dim_chain_check(const ProgressionDesc& p, const FinSet& a, const Limits& limits = default_limits());

/// First line `base`, then one `ratio length` line per dimension.
ProgressionDesc parse_progression(std::string_view text);
ProgressionDesc read_progression_file(const std::string& path);  // "-" reads stdin

}  // namespace sumprod
