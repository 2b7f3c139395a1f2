#include "sumprod/verdict.hpp"

namespace sumprod {

namespace {

struct Exact {
  bool ok = false;
  Rat value;
};

Exact exact_of(const Value& v) {
  if (const auto* i = std::get_if<BigInt>(&v)) return {true, Rat(*i)};
  if (const auto* q = std::get_if<Rat>(&v)) return {true, *q};
  return {};
}

Status exact_status(const Rat& l, Relation r, const Rat& rhs) {
  bool ok = false;
  switch (r) {
    case Relation::less: ok = l < rhs; break;
    case Relation::less_equal: ok = l <= rhs; break;
    case Relation::greater: ok = l > rhs; break;
    case Relation::greater_equal: ok = l >= rhs; break;
    case Relation::equal: ok = l == rhs; break;
  }
  return ok ? Status::holds : Status::fails;
}

// Status of d < 0 (strict) or d <= 0 given an enclosure of d and a guard band.
Status sign_status(const Interval& d, bool strict, const Interval& guard, bool guarded) {
  const Interval neg_guard = -guard;
  if (guarded) {
    if (d.certainly_less(neg_guard)) return Status::holds;
    if (guard.certainly_less(d)) return Status::fails;
    return Status::inconclusive;
  }
  const Interval zero;
  if (strict) {
    if (d.certainly_less(zero)) return Status::holds;
    if (zero.certainly_less_equal(d)) return Status::fails;
  } else {
    if (d.certainly_less_equal(zero)) return Status::holds;
    if (zero.certainly_less(d)) return Status::fails;
  }
  return Status::inconclusive;
}

}  // namespace

Interval to_interval(const Value& value) {
  if (const auto* i = std::get_if<BigInt>(&value)) return Interval(*i);
  if (const auto* q = std::get_if<Rat>(&value)) return Interval(*q);
  return std::get<Interval>(value);
}

Status evaluate(const Value& lhs, Relation relation, const Value& rhs, const Rat& absolute_guard) {
  const Exact l = exact_of(lhs);
  const Exact r = exact_of(rhs);
  if (l.ok && r.ok) return exact_status(l.value, relation, r.value);

  const Interval li = to_interval(lhs);
  const Interval ri = to_interval(rhs);
  const bool guarded = absolute_guard > 0;
  const Interval guard(absolute_guard);
  switch (relation) {
    case Relation::less: return sign_status(li - ri, true, guard, guarded);
    case Relation::less_equal: return sign_status(li - ri, false, guard, guarded);
    case Relation::greater: return sign_status(ri - li, true, guard, guarded);
    case Relation::greater_equal: return sign_status(ri - li, false, guard, guarded);
    case Relation::equal: {
      Interval scale = li.magnitude();
      if (scale.certainly_less(ri.magnitude())) scale = ri.magnitude();
      if (scale.certainly_less(Interval(1L))) scale = Interval(1L);
      Interval tol = scale * Interval(Rat(1) / pow(Rat(2), 160));
      if (tol.certainly_less(guard)) tol = guard;
      const Interval d = li - ri;
      const Interval neg_tol = -tol;
      if (neg_tol.certainly_less_equal(d) && d.certainly_less_equal(tol)) return Status::holds;
      if (tol.certainly_less(d) || d.certainly_less(neg_tol)) return Status::fails;
      return Status::inconclusive;
    }
  }
  return Status::inconclusive;
}

Verdict make_verdict(std::string name, Value lhs, Relation relation, Value rhs, bool hypothesis_met,
                     const Rat& absolute_guard) {
  Verdict v;
  v.name = std::move(name);
  v.hypothesis_met = hypothesis_met;
  v.relation = relation;
  const Status raw = evaluate(lhs, relation, rhs, absolute_guard);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  if (hypothesis_met) {
    v.status = raw;
  } else {
    v.status = Status::hypothesis_not_met;
    v.with("raw", to_string(raw));
  }
  if (absolute_guard > 0) v.with("guard", absolute_guard);
  return v;
}

Verdict& Verdict::with(std::string key, std::string value) {
  witness.emplace_back(std::move(key), std::move(value));
  return *this;
}
Verdict& Verdict::with(std::string key, const BigInt& value) { return with(std::move(key), value.str()); }
Verdict& Verdict::with(std::string key, const Rat& value) { return with(std::move(key), sumprod::to_string(value)); }
Verdict& Verdict::with(std::string key, bool value) { return with(std::move(key), std::string(value ? "true" : "false")); }
Verdict& Verdict::with(std::string key, const Interval& value) { return with(std::move(key), "~" + value.approx()); }

std::string Verdict::witness_value(const std::string& key) const {
  for (const auto& [k, v] : witness)
    if (k == key) return v;
  return {};
}

const char* to_string(Status status) {
  switch (status) {
    case Status::holds: return "true";
    case Status::fails: return "false";
    case Status::inconclusive: return "inconclusive";
    case Status::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "?";
}

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

std::string format_value(const Value& value) {
  if (const auto* i = std::get_if<BigInt>(&value)) return i->str();
  if (const auto* q = std::get_if<Rat>(&value)) return sumprod::to_string(*q);
  return "~" + std::get<Interval>(value).approx();
}

std::string format_line(const Verdict& verdict) {
  std::string line = verdict.name + " " + to_string(verdict.status) + " " + format_value(verdict.lhs) + " " +
                     format_value(verdict.rhs) + " rel=" + to_string(verdict.relation);
  if (verdict.informational) line += " informational=true";
  for (const auto& [k, v] : verdict.witness) {
    if (v.find(' ') == std::string::npos) line += " " + k + "=" + v;
    else line += " " + k + "=\"" + v + "\"";
  }
  return line;
}

}  // namespace sumprod
