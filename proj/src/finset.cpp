#include "sumprod/finset.hpp"

#include <algorithm>

namespace sumprod {

FinSet::FinSet(std::vector<Rat> values) : elements_(std::move(values)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  classify();
}

FinSet::FinSet(std::initializer_list<Rat> values) : FinSet(std::vector<Rat>(values)) {}

FinSet FinSet::from_sorted_unique(std::vector<Rat> values) {
  FinSet out;
  out.elements_ = std::move(values);
  out.classify();
  return out;
}

FinSet FinSet::interval(long lo, long hi) {
  std::vector<Rat> values;
  for (long v = lo; v <= hi; ++v) values.emplace_back(v);
  return from_sorted_unique(std::move(values));
}

FinSet FinSet::from_integers(std::span<const long> values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return FinSet(std::move(out));
}

void FinSet::classify() {
  positive_ = std::all_of(elements_.begin(), elements_.end(), [](const Rat& q) { return q > 0; });
  integral_ = std::all_of(elements_.begin(), elements_.end(), [](const Rat& q) { return is_integer(q); });
}

bool FinSet::all_nonzero() const {
  return std::none_of(elements_.begin(), elements_.end(), [](const Rat& q) { return q == 0; });
}

bool FinSet::contains(const Rat& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::optional<std::size_t> FinSet::index_of(const Rat& value) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
  if (it == elements_.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::vector<std::int64_t>> small_integers(const FinSet& set, std::int64_t bound) {
  if (!set.all_integer()) return std::nullopt;
  if (!set.empty() && (set.min() < -bound || set.max() > bound)) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(set.size());
  for (const Rat& q : set) out.push_back(numerator_of(q).convert_to<std::int64_t>());
  return out;
}

PairGraph::PairGraph(FinSet ground, std::vector<Edge> edges)
    : ground_(std::move(ground)), edges_(std::move(edges)) {
  for (const auto& [i, j] : edges_) {
    if (i >= ground_.size() || j >= ground_.size())
      throw DomainError("pair graph edge (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of bounds for a ground set of size " + std::to_string(ground_.size()));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

PairGraph PairGraph::full(FinSet ground) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ground.size(); ++i)
    for (std::size_t j = 0; j < ground.size(); ++j) edges.emplace_back(i, j);
  return PairGraph(std::move(ground), std::move(edges));
}

PairGraph PairGraph::diagonal(FinSet ground) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ground.size(); ++i) edges.emplace_back(i, i);
  return PairGraph(std::move(ground), std::move(edges));
}

PairGraph PairGraph::from_elements(FinSet ground, const std::vector<std::pair<Rat, Rat>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto i = ground.index_of(a);
    auto j = ground.index_of(b);
    if (!i || !j)
      throw DomainError("pair (" + to_string(a) + "," + to_string(b) + ") is not in the ground set");
    edges.emplace_back(*i, *j);
  }
  return PairGraph(std::move(ground), std::move(edges));
}

}  // namespace sumprod
