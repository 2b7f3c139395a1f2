#include "sumprod/exactset.hpp"

#include "bits.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace sumprod {

namespace {

[[noreturn]] void cap_exceeded(const char* what, std::uint64_t cap) {
  throw CapExceeded(std::string(what) + ": result exceeds the size cap of " + std::to_string(cap) +
                    " elements");
}

void require_nonzero(const FinSet& a, const char* what) {
  if (!a.all_nonzero()) throw DomainError(std::string(what) + ": product requested on a set containing 0");
}

// Collects values, deduplicating in bounded batches so memory stays near the cap.
class Collector {
 public:
  Collector(const char* what, std::uint64_t cap) : what_(what), cap_(cap) {}

  void push(Rat value) {
    buffer_.push_back(std::move(value));
    if (buffer_.size() > 2 * cap_ + 1024) compact();
  }

  FinSet finish() {
    compact();
    return FinSet::from_sorted_unique(std::move(buffer_));
  }

 private:
  void compact() {
    std::sort(buffer_.begin(), buffer_.end());
    buffer_.erase(std::unique(buffer_.begin(), buffer_.end()), buffer_.end());
    if (buffer_.size() > cap_) cap_exceeded(what_, cap_);
  }

  const char* what_;
  std::uint64_t cap_;
  std::vector<Rat> buffer_;
};

FinSet from_int64(const std::vector<std::int64_t>& sorted_values) {
  std::vector<Rat> out;
  out.reserve(sorted_values.size());
  for (std::int64_t v : sorted_values) out.emplace_back(static_cast<long long>(v));
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet from_bits(const detail::Bits& bits, std::int64_t offset) {
  std::vector<Rat> out;
  out.reserve(bits.count());
  bits.for_each_set([&](std::uint64_t i) { out.emplace_back(static_cast<long long>(offset + static_cast<std::int64_t>(i))); });
  return FinSet::from_sorted_unique(std::move(out));
}

// Bit tables for subset-type DPs may be wider than the convolution threshold;
// they cost one bit per value.
std::uint64_t dense_bit_limit(const Limits& limits) {
  return std::max<std::uint64_t>(limits.dense_range, 64 * limits.size_cap);
}

FinSet combine_small_integers(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, Op op,
                              const Limits& limits) {
  if (op == Op::sum) {
    const std::uint64_t range = static_cast<std::uint64_t>((a.back() - a.front()) + (b.back() - b.front())) + 1;
    if (range <= limits.dense_range) {
      detail::Bits src(range);
      for (std::int64_t y : b) src.set(static_cast<std::uint64_t>(y - b.front()));
      detail::Bits out(range);
      for (std::int64_t x : a) out.or_shifted(src, static_cast<std::uint64_t>(x - a.front()));
      if (out.count() > limits.size_cap) cap_exceeded("combine", limits.size_cap);
      return from_bits(out, a.front() + b.front());
    }
  }
  std::vector<std::int64_t> values;
  values.reserve(a.size() * b.size());
  for (std::int64_t x : a)
    for (std::int64_t y : b) values.push_back(op == Op::sum ? x + y : x * y);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > limits.size_cap) cap_exceeded("combine", limits.size_cap);
  return from_int64(values);
}

// Union of two strictly increasing runs.
std::vector<Rat> merge_unique(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  std::vector<Rat> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// Subset sums of nonnegative small integers (a multiset) as a bit table.
detail::Bits subset_sum_bits(const std::vector<std::int64_t>& magnitudes, unsigned max_multiplicity) {
  std::uint64_t total = 0;
  for (std::int64_t m : magnitudes) total += static_cast<std::uint64_t>(m) * max_multiplicity;
  detail::Bits bits(total + 1);
  bits.set(0);
  for (std::int64_t m : magnitudes) {
    if (m == 0) continue;
    if (max_multiplicity == 1) {
      bits.or_shifted(bits, static_cast<std::uint64_t>(m));
    } else {
      detail::Bits layer = bits;
      detail::Bits acc = bits;
      for (unsigned e = 1; e <= max_multiplicity; ++e) {
        detail::Bits next(bits.size());
        next.or_shifted(layer, static_cast<std::uint64_t>(m));
        layer = std::move(next);
        acc.or_with(layer);
      }
      bits = std::move(acc);
    }
  }
  return bits;
}

// Dense path shared by simple_closure(sum) and box_sum when it applies.
std::optional<FinSet> dense_box_sum(const FinSet& a, unsigned h, const Limits& limits) {
  auto ints = small_integers(a, std::int64_t{1} << 32);
  if (!ints) return std::nullopt;
  std::int64_t offset = 0;
  std::uint64_t total = 0;
  std::vector<std::int64_t> magnitudes;
  magnitudes.reserve(ints->size());
  for (std::int64_t v : *ints) {
    if (v < 0) offset += v * static_cast<std::int64_t>(h);
    magnitudes.push_back(v < 0 ? -v : v);
    total += static_cast<std::uint64_t>(magnitudes.back()) * h;
  }
  if (total + 1 > dense_bit_limit(limits)) return std::nullopt;
  detail::Bits bits = subset_sum_bits(magnitudes, h);
  if (bits.count() > limits.size_cap) cap_exceeded(h == 1 ? "simple_closure" : "box_sum", limits.size_cap);
  return from_bits(bits, offset);
}

}  // namespace

FinSet combine(const FinSet& a, const FinSet& b, Op op, const Limits& limits) {
  if (op == Op::product) {
    require_nonzero(a, "combine");
    require_nonzero(b, "combine");
  }
  if (a.empty() || b.empty()) return FinSet{};

  const std::int64_t bound = op == Op::sum ? std::int64_t{1} << 40 : std::int64_t{1} << 31;
  auto ia = small_integers(a, bound);
  auto ib = small_integers(b, bound);
  if (ia && ib) return combine_small_integers(*ia, *ib, op, limits);

  Collector out("combine", limits.size_cap);
  for (const Rat& x : a)
    for (const Rat& y : b) out.push(op == Op::sum ? Rat(x + y) : Rat(x * y));
  return out.finish();
}

FinSet iterate(const FinSet& a, unsigned h, Op op, const Limits& limits) {
  if (h == 0) throw DomainError("iterate: h must be at least 1");
  if (op == Op::product) require_nonzero(a, "iterate");
  FinSet current = a;
  for (unsigned i = 1; i < h; ++i) current = combine(current, a, op, limits);
  return current;
}

FinSet dilate(const Rat& q, const FinSet& a) {
  if (q == 0) throw DomainError("dilate: factor must be nonzero");
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const Rat& x : a) out.emplace_back(q * x);
  if (q < 0) std::reverse(out.begin(), out.end());
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet translate(const Rat& t, const FinSet& a) {
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const Rat& x : a) out.emplace_back(x + t);
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet negate(const FinSet& a) { return dilate(Rat(-1), a); }

FinSet simple_closure(const FinSet& a, Op op, const Limits& limits) {
  if (op == Op::sum) {
    if (auto dense = dense_box_sum(a, 1, limits)) return *dense;
  } else {
    require_nonzero(a, "simple_closure");
  }

  std::vector<Rat> frontier{op == Op::sum ? Rat(0) : Rat(1)};
  for (const Rat& x : a) {
    std::vector<Rat> moved;
    moved.reserve(frontier.size());
    for (const Rat& v : frontier) moved.emplace_back(op == Op::sum ? Rat(v + x) : Rat(v * x));
    if (op == Op::product && x < 0) std::reverse(moved.begin(), moved.end());
    frontier = merge_unique(frontier, moved);
    if (frontier.size() > limits.size_cap) cap_exceeded("simple_closure", limits.size_cap);
  }
  return FinSet::from_sorted_unique(std::move(frontier));
}

FinSet box_sum(const FinSet& a, unsigned h, const Limits& limits) {
  if (h == 0) throw DomainError("box_sum: h must be at least 1");
  if (auto dense = dense_box_sum(a, h, limits)) return *dense;

  std::vector<Rat> frontier{Rat(0)};
  for (const Rat& x : a) {
    std::vector<Rat> layer = frontier;
    std::vector<Rat> acc = frontier;
    for (unsigned e = 1; e <= h; ++e) {
      for (Rat& v : layer) v += x;
      acc = merge_unique(acc, layer);
      if (acc.size() > limits.size_cap) cap_exceeded("box_sum", limits.size_cap);
    }
    frontier = std::move(acc);
  }
  return FinSet::from_sorted_unique(std::move(frontier));
}

FinSet sum_diff(const FinSet& n, unsigned h, unsigned l, const Limits& limits) {
  if (h + l == 0) throw DomainError("sum_diff: h + l must be at least 1");
  if (n.empty()) return FinSet{};
  const FinSet zero{Rat(0)};
  const FinSet plus = h == 0 ? zero : iterate(n, h, Op::sum, limits);
  const FinSet minus = l == 0 ? zero : iterate(n, l, Op::sum, limits);
  return combine(plus, negate(minus), Op::sum, limits);
}

FinSet restricted_combine(const FinSet& a, const PairGraph& g, Op op) {
  if (!(g.ground() == a)) throw DomainError("restricted_combine: graph ground set differs from A");
  if (op == Op::product) require_nonzero(a, "restricted_combine");
  std::vector<Rat> values;
  values.reserve(g.size());
  for (const auto& [i, j] : g.edges()) values.emplace_back(op == Op::sum ? Rat(a[i] + a[j]) : Rat(a[i] * a[j]));
  return FinSet(std::move(values));
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Rat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  std::vector<Rat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FinSet::from_sorted_unique(std::move(out));
}

bool is_subset(const FinSet& sub, const FinSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace sumprod
