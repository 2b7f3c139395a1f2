#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "sumprod/arith.hpp"
#include "sumprod/exactset.hpp"

#include <set>

using namespace sumprod;
using oracle::ints;

TEST_CASE("factorize") {
  using F = std::vector<std::pair<BigInt, std::uint64_t>>;
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(BigInt(1000003)) == F{{BigInt(1000003), 1}});
  // two primes above the trial bound force the rho path
  const BigInt p("1000000007");
  const BigInt q("998244353");
  CHECK(factorize(p * q) == F{{q, 1}, {p, 1}});
  const BigInt big = pow(BigInt(2), 70) * BigInt("2305843009213693951");  // 2^70 * M61
  CHECK(factorize(big) == F{{2, 70}, {BigInt("2305843009213693951"), 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorization budget is an error, not a wrong answer") {
  Limits tight;
  tight.trial_division_bound = 10;
  tight.rho_iterations = 5;
  CHECK_THROWS_AS(factorize(BigInt("1000000007") * BigInt("998244353"), tight), CapExceeded);
}

TEST_CASE("first_primes and valuation") {
  CHECK(first_primes(1) == std::vector<long>{2});
  CHECK(first_primes(6) == std::vector<long>{2, 3, 5, 7, 11, 13});
  CHECK(first_primes(100).back() == 541);
  CHECK(valuation(96, 2) == 5);
  CHECK(valuation(96, 5) == 0);
}

TEST_CASE("exponent_matrix examples") {
  auto m = exponent_matrix(ints({2, 3, 6}));
  CHECK(m.primes == std::vector<BigInt>{2, 3});
  CHECK(m.rows == std::vector<ExponentRow>{{1, 0}, {0, 1}, {1, 1}});

  m = exponent_matrix(ints({1}));
  CHECK(m.primes.empty());
  CHECK(m.rows == std::vector<ExponentRow>{{}});

  m = exponent_matrix(FinSet{Rat(4, 9)});
  CHECK(m.primes == std::vector<BigInt>{2, 3});
  CHECK(m.rows == std::vector<ExponentRow>{{2, -2}});

  CHECK_THROWS_AS(exponent_matrix(ints({0, 2})), DomainError);
  CHECK_THROWS_AS(exponent_matrix(ints({-2})), DomainError);
}

TEST_CASE("exponent_matrix reconstructs every element and uses only needed primes") {
  const FinSet a{Rat(12, 35), Rat(1), Rat(7, 2), Rat(1024), Rat(99, 100)};
  const auto m = exponent_matrix(a);
  std::set<ExponentRow> distinct(m.rows.begin(), m.rows.end());
  CHECK(distinct.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(m.reconstruct(i) == a[i]);
  for (std::size_t j = 0; j < m.primes.size(); ++j) {
    bool used = false;
    for (const auto& row : m.rows) used = used || row[j] != 0;
    CHECK(used);
  }
}

TEST_CASE("mult_dim examples") {
  CHECK(mult_dim(ints({2, 3, 6})).dimension == 2);
  CHECK(mult_dim(ints({2, 4, 8})).dimension == 1);
  CHECK(mult_dim(ints({7})).dimension == 0);
  CHECK(mult_dim(FinSet{}).dimension == 0);
  const MultDim d = mult_dim(ints({2, 3, 6}));
  CHECK(d.basepoint == 0);
  CHECK(d.projection == std::vector<std::size_t>{0, 1});
  // 2 and 6 = 2*3: one direction, first usable prime is 2
  const MultDim e = mult_dim(ints({3, 6, 12}));
  CHECK(e.dimension == 1);
  CHECK(e.projection == std::vector<std::size_t>{0});
}

TEST_CASE("projection picks the first injective coordinates") {
  // exponent rows (over 2,3,5): 15 -> (0,1,1), 30 -> (1,1,1), 45 -> (0,2,1)
  const MultDim d = mult_dim(ints({15, 30, 45}));
  CHECK(d.dimension == 2);
  CHECK(d.projection == std::vector<std::size_t>{0, 1});
  // 6 -> (1,1), 36 -> (2,2): only one direction, prime 2 already separates
  const MultDim e = mult_dim(ints({6, 36, 216}));
  CHECK(e.dimension == 1);
  CHECK(e.projection == std::vector<std::size_t>{0});
  // 5 and 10 share the 5-exponent; the 2-exponent separates them
  CHECK(mult_dim(ints({5, 10})).projection == std::vector<std::size_t>{0});
  // 3, 15 over primes (3,5): difference (0,1) so prime 3 cannot separate
  CHECK(mult_dim(ints({3, 15})).projection == std::vector<std::size_t>{1});
}

TEST_CASE("integer_rank") {
  CHECK(integer_rank({}) == 0);
  CHECK(integer_rank({{0, 0}}) == 0);
  CHECK(integer_rank({{1, 2, 3}, {2, 4, 6}, {1, 0, 0}}) == 2);
  CHECK(integer_rank({{3, 5}, {7, 11}}) == 2);
  CHECK(integer_rank({{1000000, 999999}, {999999, 999998}, {1, 1}}) == 2);
}

TEST_CASE("vector_simple_sum_count examples") {
  CHECK(vector_simple_sum_count(ints({2, 3, 6})) == 7);
  CHECK(vector_simple_sum_count(ints({2})) == 2);
  CHECK(vector_simple_sum_count(ints({2, 4})) == 4);
  CHECK(vector_simple_sum_count(ints({1})) == 1);
  CHECK_THROWS_AS(vector_simple_sum_count(ints({2, 3, 5, 7}), default_limits().with_budget(4)), CapExceeded);
}

TEST_CASE("mult_dim properties over small sets") {
  for (const auto& v : oracle::subsets(1, 16, 1, 4)) {
    const FinSet a = ints(v);
    const MultDim d = mult_dim(a);
    CHECK(d.dimension == oracle::mult_dim(v));
    CHECK(d.dimension + 1 <= a.size());
    CHECK(d.dimension <= d.primes.size());
    CHECK(d.projection.size() == d.dimension);
    const auto m = exponent_matrix(a);
    std::set<ExponentRow> projected;
    for (const auto& row : m.rows) {
      ExponentRow p;
      for (std::size_t idx : d.projection) p.push_back(row[idx]);
      projected.insert(p);
    }
    CHECK(projected.size() == a.size());
    for (Rat q : {Rat(6), Rat(5, 7), Rat(1, 12)}) CHECK(mult_dim(dilate(q, a)).dimension == d.dimension);
  }
}

TEST_CASE("exponent-vector subset sums count the simple product set") {
  const std::vector<long> pool{2, 3, 5, 6, 10, 15, 30};
  for (std::uint64_t mask = 1; mask < 128; ++mask) {
    std::vector<long> v;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1U) v.push_back(pool[i]);
    const FinSet a = ints(v);
    CHECK(vector_simple_sum_count(a) == BigInt(oracle::simple(a, Op::product).size()));
  }
  const FinSet r{Rat(2, 3), Rat(9, 4), Rat(5), Rat(1, 10)};
  CHECK(vector_simple_sum_count(r) == BigInt(oracle::simple(r, Op::product).size()));
}

TEST_CASE("small doubling forces small dimension on subsets of 1..24") {
  std::size_t checked = 0;
  for (const auto& v : oracle::subsets(1, 24, 2, 5)) {
    const FinSet a = ints(v);
    const Rat alpha(static_cast<long>(combine(a, a, Op::product).size()), static_cast<long>(a.size()));
    if (!(alpha * alpha < Rat(static_cast<long>(a.size())))) continue;
    ++checked;
    CHECK(Rat(static_cast<long>(mult_dim(a).dimension)) <= alpha);
  }
  CHECK(checked > 0);
}
