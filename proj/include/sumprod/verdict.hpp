#pragma once

#include "sumprod/core.hpp"
#include "sumprod/interval.hpp"

#include <concepts>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sumprod {

enum class Status { holds, fails, inconclusive, hypothesis_not_met };
enum class Relation { less, less_equal, greater, greater_equal, equal };

/// An exact integer, an exact rational, or an enclosing real interval.
using Value = std::variant<BigInt, Rat, Interval>;

/// Outcome of checking one named inequality on one instance.
///
/// When hypothesis_met is false the status is always hypothesis_not_met; the
/// comparison that would have been reported is kept in the "raw" witness entry.
/// Informational verdicts are diagnostics and never count as failures.
struct Verdict {
  std::string name;
  bool hypothesis_met = true;
  Value lhs;
  Relation relation = Relation::less_equal;
  Value rhs;
  Status status = Status::inconclusive;
  std::vector<std::pair<std::string, std::string>> witness;
  bool informational = false;

  Verdict& with(std::string key, std::string value);
  Verdict& with(std::string key, const BigInt& value);
  Verdict& with(std::string key, const Rat& value);
  Verdict& with(std::string key, const char* value) { return with(std::move(key), std::string(value)); }
  Verdict& with(std::string key, bool value);
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Verdict& with(std::string key, T value) {
    return with(std::move(key), std::to_string(value));
  }
  Verdict& with(std::string key, const Interval& value);
  /// First witness entry named `key`, or "" when absent.
  std::string witness_value(const std::string& key) const;
  bool failed() const { return !informational && (status == Status::fails || status == Status::inconclusive); }
};

/// Exact comparison when both sides are exact; otherwise interval comparison.
/// Strict/non-strict relations become inconclusive when the enclosures overlap
/// or the gap is within `absolute_guard`. Equality holds when the difference
/// lies within max(absolute_guard, 2^-160 * scale).
Status evaluate(const Value& lhs, Relation relation, const Value& rhs, const Rat& absolute_guard = Rat(0));

Verdict make_verdict(std::string name, Value lhs, Relation relation, Value rhs, bool hypothesis_met = true,
                     const Rat& absolute_guard = Rat(0));

const char* to_string(Status status);
const char* to_string(Relation relation);
/// Exact values print as `p` or `p/q`; reals print `~` plus 30 significant digits.
std::string format_value(const Value& value);
/// `name status lhs rhs rel=... key=value ...`
std::string format_line(const Verdict& verdict);

Interval to_interval(const Value& value);

}  // namespace sumprod
