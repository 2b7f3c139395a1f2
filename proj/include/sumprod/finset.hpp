#pragma once

#include "sumprod/core.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sumprod {

/// Immutable finite set of rationals, stored strictly increasing.
class FinSet {
 public:
  using const_iterator = std::vector<Rat>::const_iterator;

  FinSet() = default;
  /// Sorts and drops duplicates.
  explicit FinSet(std::vector<Rat> values);
  FinSet(std::initializer_list<Rat> values);

  /// Trusts the caller: `values` must already be strictly increasing.
  static FinSet from_sorted_unique(std::vector<Rat> values);
  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static FinSet interval(long lo, long hi);
  static FinSet from_integers(std::span<const long> values);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Rat& operator[](std::size_t i) const { return elements_[i]; }
  const Rat& min() const { return elements_.front(); }
  const Rat& max() const { return elements_.back(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  std::span<const Rat> elements() const { return elements_; }

  /// Every element is > 0. The empty set counts as positive.
  bool all_positive() const { return positive_; }
  bool all_nonzero() const;
  bool all_integer() const { return integral_; }

  bool contains(const Rat& value) const;
  std::optional<std::size_t> index_of(const Rat& value) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.elements_ == b.elements_; }

 private:
  void classify();

  std::vector<Rat> elements_;
  bool positive_ = true;
  bool integral_ = true;
};

/// Integer view of a set when every element is an integer of magnitude at most
/// `bound`; used by the dense fast paths.
std::optional<std::vector<std::int64_t>> small_integers(const FinSet& set,
                                                        std::int64_t bound = std::int64_t{1} << 40);

/// Ordered index pairs into a ground set.
class PairGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Throws DomainError on an out-of-range index; duplicate pairs are merged.
  PairGraph(FinSet ground, std::vector<Edge> edges);

  static PairGraph full(FinSet ground);
  static PairGraph diagonal(FinSet ground);
  /// Edges given by element values; throws DomainError if a value is not in ground.
  static PairGraph from_elements(FinSet ground, const std::vector<std::pair<Rat, Rat>>& pairs);

  const FinSet& ground() const { return ground_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

 private:
  FinSet ground_;
  std::vector<Edge> edges_;
};

}  // namespace sumprod
