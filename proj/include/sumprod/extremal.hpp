#pragma once

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"
#include "sumprod/verdict.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sumprod {

/// {p_1^{j_1} ... p_J^{j_J} : 0 <= j_i < J} over the first J primes; size J^J.
FinSet es_example(unsigned J, const Limits& limits = default_limits());

/// |2A cup A^2|. Requires positive integers.
BigInt f_value(const FinSet& a, const Limits& limits = default_limits());

/// |A[1]| + |A{1}|. The product term is counted on exponent vectors when the
/// elements factor within budget and by the value DP otherwise.
BigInt g_value(const FinSet& a, const Limits& limits = default_limits());

/// Both ways of counting the product term, for cross-checks.
struct GParts {
  BigInt sums;
  BigInt products_by_vectors;
  BigInt products_by_values;
};
GParts g_parts(const FinSet& a, const Limits& limits = default_limits());

enum class Objective { f, g };
const char* to_string(Objective objective);
Objective parse_objective(const std::string& text);

/// Minimum of an objective over all k-subsets of {1..N}. The minimum is over
/// that bounded universe only.
struct SearchResult {
  Objective objective = Objective::f;
  unsigned k = 0;
  long universe = 0;
  BigInt minimum;
  /// Every minimizer in [1, N], ascending lexicographic order.
  std::vector<std::vector<long>> certificates;
  /// Evaluated leaves.
  std::uint64_t nodes = 0;
  /// False when the node budget ran out; minimum and certificates then cover
  /// only the searched prefix and are not claimed optimal.
  bool complete = true;
  /// First element of the next unsearched subtree (N - k + 2 when complete).
  long next_first = 1;
};

struct SearchOptions {
  unsigned threads = 1;
  /// When nonempty, progress is saved here after every batch of subtrees and
  /// an existing file with matching parameters is resumed.
  std::string checkpoint;
};

/// Exhaustive lexicographic search with lower-bound pruning, split into one
/// subtree per first element. Each subtree prunes against the value of
/// {1..k} and its own best, so the set of evaluated leaves, and hence the
/// result, does not depend on the thread count.
SearchResult search_min(Objective objective, unsigned k, long universe, const SearchOptions& options = {},
                        const Limits& limits = default_limits());

/// Plain loop over every k-subset with no pruning and no gcd restriction.
SearchResult search_min_plain(Objective objective, unsigned k, long universe, const Limits& limits = default_limits());

std::string format_checkpoint(const SearchResult& partial);
/// Throws ParseError on a malformed file or an unknown version.
SearchResult parse_checkpoint(const std::string& text);

/// Identities and bounds of the extremal example at one J >= 2, with the
/// large-J conditions gated on ln J / ln ln J > 1/eps3.
std::vector<Verdict> verify_section3(unsigned J, const Rat& eps3, const Limits& limits = default_limits());

}  // namespace sumprod
