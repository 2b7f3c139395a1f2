#include "sumprod/core.hpp"

#include <cstdlib>

namespace sumprod {

const char* to_string(Op op) { return op == Op::sum ? "sum" : "product"; }

Op parse_op(const std::string& text) {
  if (text == "sum" || text == "+") return Op::sum;
  if (text == "product" || text == "prod" || text == "*") return Op::product;
  throw ParseError("unknown operation '" + text + "' (expected sum or product)");
}

Limits Limits::with_budget(std::uint64_t budget) const {
  Limits out = *this;
  out.size_cap = budget;
  out.enumerate_budget = budget;
  out.node_budget = budget;
  return out;
}

namespace {

Limits limits_from_environment() {
  Limits limits;
  if (const char* env = std::getenv("SUMPROD_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) limits = limits.with_budget(value);
  }
  return limits;
}

}  // namespace

const Limits& default_limits() {
  static const Limits limits = limits_from_environment();
  return limits;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rat& value) {
  const BigInt den = denominator_of(value);
  if (den == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + den.str();
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rat pow(const Rat& base, std::uint64_t exponent) {
  return Rat(pow(numerator_of(base), exponent), pow(denominator_of(base), exponent));
}

}  // namespace sumprod
