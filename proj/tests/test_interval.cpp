#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumprod/verdict.hpp"

#include <cmath>

using namespace sumprod;

namespace {

bool encloses(const Interval& x, double v) { return x.lower() <= v && v <= x.upper(); }

}  // namespace

TEST_CASE("enclosures of elementary functions") {
  const Interval two(2L);
  CHECK(encloses(log(two), std::log(2.0)));
  CHECK(encloses(exp(Interval(1L)), std::exp(1.0)));
  CHECK(encloses(sqrt(two), std::sqrt(2.0)));
  CHECK(encloses(root(Interval(27L), 3), 3.0));
  CHECK(encloses(pow(Interval(36L), Interval(Rat(-7, 4))) * Interval(16L), 16.0 * std::pow(36.0, -1.75)));
  CHECK(encloses(Interval(Rat(1, 3)), 1.0 / 3.0));
  const Interval third = Interval(1L) / Interval(3L);
  CHECK((third * Interval(3L) - Interval(1L)).magnitude().upper() < 1e-55);
  CHECK_THROWS_AS(Interval(1L) / Interval(), DomainError);
  CHECK_THROWS_AS(log(Interval(-1L)), DomainError);
}

TEST_CASE("interval arithmetic keeps exact points exact") {
  const Interval x = Interval(3L) * Interval(-4L) + Interval(BigInt(5));
  CHECK(x.lower() == -7.0);
  CHECK(x.upper() == -7.0);
  CHECK((-x).lower() == 7.0);
  CHECK(x.approx() == "-7");
  CHECK(Interval(-2L).magnitude().upper() == 2.0);
  CHECK(Interval().contains_zero());
}

TEST_CASE("exact verdicts") {
  CHECK(evaluate(BigInt(95), Relation::greater_equal, BigInt(81)) == Status::holds);
  CHECK(evaluate(BigInt(1), Relation::less, BigInt(1)) == Status::fails);
  CHECK(evaluate(Rat(1, 3), Relation::equal, Rat(2, 6)) == Status::holds);
  CHECK(evaluate(BigInt(28), Relation::less_equal, Rat(6859, 100)) == Status::holds);
}

TEST_CASE("real verdicts") {
  const Interval r = pow(Interval(36L), Interval(Rat(-7, 4))) * Interval(16L);
  CHECK(evaluate(BigInt(10), Relation::greater, r) == Status::holds);
  CHECK(evaluate(BigInt(0), Relation::greater, r) == Status::fails);
  // sqrt(2)^2 is 2 up to rounding: equality holds, strict order is undecidable
  const Interval s = sqrt(Interval(2L));
  CHECK(evaluate(s * s, Relation::equal, BigInt(2)) == Status::holds);
  CHECK(evaluate(s * s, Relation::less, BigInt(2)) == Status::inconclusive);
  CHECK(evaluate(s * s, Relation::less_equal, BigInt(2)) == Status::inconclusive);
  // guard band
  CHECK(evaluate(s, Relation::less_equal, Rat(141421356237, 100000000000), Rat(1, 1000000000)) ==
        Status::inconclusive);
  CHECK(evaluate(s, Relation::less_equal, BigInt(2), Rat(1, 1000000000)) == Status::holds);
  CHECK(evaluate(s, Relation::less_equal, BigInt(1), Rat(1, 1000000000)) == Status::fails);
}

TEST_CASE("verdict records") {
  Verdict v = make_verdict("demo", BigInt(1), Relation::less, BigInt(1));
  CHECK(v.status == Status::fails);
  CHECK(v.failed());
  v.with("m", 0).with("note", "two words");
  CHECK(v.witness_value("m") == "0");
  CHECK(format_line(v) == "demo false 1 1 rel=< m=0 note=\"two words\"");

  const Verdict g = make_verdict("gated", BigInt(2), Relation::less, BigInt(1), false);
  CHECK(g.status == Status::hypothesis_not_met);
  CHECK(g.witness_value("raw") == "false");
  CHECK_FALSE(g.failed());

  Verdict info = make_verdict("diag", Rat(1, 2), Relation::less, BigInt(0));
  info.informational = true;
  CHECK_FALSE(info.failed());
  CHECK(format_value(Interval(Rat(1, 4))) == "~0.25");
}
