#pragma once

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"

namespace sumprod {

/// {a + b} or {a * b} over A x B. Products reject zero elements.
FinSet combine(const FinSet& a, const FinSet& b, Op op, const Limits& limits = default_limits());

/// h-fold sum set hA or product set A^h; iterate(A, 1, op) == A.
FinSet iterate(const FinSet& a, unsigned h, Op op, const Limits& limits = default_limits());

/// q . A for q != 0.
FinSet dilate(const Rat& q, const FinSet& a);
/// A + t.
FinSet translate(const Rat& t, const FinSet& a);
/// -A.
FinSet negate(const FinSet& a);

/// Simple sum A[1] (op = sum) or simple product A{1} (op = product).
///
/// Both include the empty selection, so 0 is in A[1] and 1 is in A{1}.
/// Built by a frontier DP over distinct partial values, one pass per element;
/// integer sums use a dense bit table.
FinSet simple_closure(const FinSet& a, Op op, const Limits& limits = default_limits());

/// B[h] = { sum e_i x_i : e_i in {0..h} }.
FinSet box_sum(const FinSet& a, unsigned h, const Limits& limits = default_limits());

/// hN - lN. 0N is {0}; requires h + l >= 1.
FinSet sum_diff(const FinSet& n, unsigned h, unsigned l, const Limits& limits = default_limits());

/// Restricted sum/product set over the edges of `g`; `a` must be g's ground set.
FinSet restricted_combine(const FinSet& a, const PairGraph& g, Op op);

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
bool is_subset(const FinSet& sub, const FinSet& super);

}  // namespace sumprod
