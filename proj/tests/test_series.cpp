#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qpart/counters.hpp"
#include "qpart/series.hpp"

using namespace qpart;

namespace {

TruncatedSeries poly(std::vector<std::int64_t> c) { return TruncatedSeries(std::move(c)); }

std::vector<std::int64_t> coeffs(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = d(rng);
  if (unit) c[0] = 1;
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("add and multiply small polynomials") {
  CHECK(poly({1, 1, 0, 0}) + poly({1, -1, 0, 0}) == poly({2, 0, 0, 0}));
  CHECK(poly({1, 1, 0, 0}) * poly({1, 0, 1, 0}) == poly({1, 1, 1, 1}));
  const auto s = poly({3, -2, 7, 1});
  CHECK(s + TruncatedSeries::zero(3) == s);
  CHECK(s * TruncatedSeries::one(3) == s);
  CHECK(series_sub(s, s) == TruncatedSeries::zero(3));
  CHECK(series_scale(s, -2) == poly({-6, 4, -14, -2}));
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS(series_add(TruncatedSeries::one(3), TruncatedSeries::one(4)), std::invalid_argument);
  CHECK_THROWS_AS(series_mul(TruncatedSeries::one(3), TruncatedSeries::one(4)), std::invalid_argument);
}

TEST_CASE("overflow is detected, never wrapped") {
  const auto big = TruncatedSeries::monomial(0, std::int64_t{1} << 62, 2);
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(big * poly({4, 0, 0}), OverflowError);
  CHECK_THROWS_AS(series_scale(big, 2), OverflowError);
}

TEST_CASE("coefficient access is bounded by the order") {
  const auto s = TruncatedSeries::one(5);
  CHECK(s[0] == 1);
  CHECK(s[5] == 0);
  CHECK_THROWS_AS(s[6], std::out_of_range);
  CHECK_THROWS_AS(s[-1], std::out_of_range);
}

TEST_CASE("gf(A) doubled matches twice the distinct-part counts") {
  const auto a = generating_function(ClassSpec::make(ClassId::A), 10);
  const auto twice = a + a;
  for (int n = 0; n <= 10; ++n) CHECK(twice[n] == 2 * oracle::count_named("A", 0, n));
}

TEST_CASE("product of (1+q^i), i=1..5 counts subsets of {1..5}") {
  const auto p = pochhammer_finite(Sign::Plus, 1, 1, 5, 15);
  for (int n = 0; n <= 15; ++n) {
    int subsets = 0;
    for (int mask = 0; mask < 32; ++mask) {
      int w = 0;
      for (int i = 0; i < 5; ++i) {
        if (mask & (1 << i)) w += i + 1;
      }
      if (w == n) ++subsets;
    }
    CHECK(p[n] == subsets);
  }
}

TEST_CASE("reciprocal") {
  SUBCASE("geometric series") {
    const auto r = series_reciprocal(poly({1, -1, 0, 0, 0, 0}));
    CHECK(coeffs(r) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1});
  }
  SUBCASE("identity") { CHECK(series_reciprocal(TruncatedSeries::one(7)) == TruncatedSeries::one(7)); }
  SUBCASE("constant -1") {
    const auto r = series_reciprocal(poly({-1, 1, 0}));
    CHECK(coeffs(r) == std::vector<std::int64_t>{-1, -1, -1});
  }
  SUBCASE("odd-part partitions") {
    const auto r = series_reciprocal(pochhammer_infinite(Sign::Minus, 1, 2, 20));
    for (int n = 1; n <= 20; ++n) CHECK(r[n] == oracle::count_named("B", 0, n));
    CHECK(r[0] == 1);
  }
  SUBCASE("non-unit constant term") {
    CHECK_THROWS_AS(series_reciprocal(poly({2, 1})), std::domain_error);
    CHECK_THROWS_AS(series_reciprocal(poly({0, 1})), std::domain_error);
  }
}

TEST_CASE("finite Pochhammer products") {
  CHECK(coeffs(pochhammer_finite(Sign::Minus, 1, 1, 2, 4)) == std::vector<std::int64_t>{1, -1, -1, 1, 0});
  CHECK(pochhammer_finite(Sign::Minus, 5, 3, 0, 6) == TruncatedSeries::one(6));
  const auto q2 = pochhammer_finite(Sign::Minus, 2, 2, 2, 10);
  CHECK(coeffs(q2) == oracle::product(-1, {2, 4}, 10));
  CHECK(coeffs(pochhammer_finite_reciprocal(Sign::Minus, 1, 1, 3, 12) *
               pochhammer_finite(Sign::Minus, 1, 1, 3, 12)) == coeffs(TruncatedSeries::one(12)));
}

TEST_CASE("infinite Pochhammer products") {
  const auto a = pochhammer_infinite(Sign::Plus, 1, 1, 8);
  for (int n = 0; n <= 8; ++n) CHECK(a[n] == oracle::count_named("A", 0, n));
  CHECK(coeffs(pochhammer_infinite(Sign::Minus, 1, 1, 40)) == oracle::euler_pentagonal(40));
  const auto head = coeffs(pochhammer_infinite(Sign::Minus, 1, 1, 12));
  CHECK(head == std::vector<std::int64_t>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
  CHECK(pochhammer_infinite(Sign::Plus, 9, 1, 8) == TruncatedSeries::one(8));
}

TEST_CASE("shift") {
  CHECK(series_shift(poly({1, 1, 0, 0}), 2) == poly({0, 0, 1, 1}));
  const auto s = poly({4, 5, 6});
  CHECK(series_shift(s, 0) == s);
  CHECK(series_shift(s, 9) == TruncatedSeries::zero(2));
  const auto b = generating_function(ClassSpec::make(ClassId::B), 31);
  const auto c = generating_function(ClassSpec::make(ClassId::C), 31);
  const auto sb = series_shift(b, 1);
  for (int n = 1; n <= 30; ++n) CHECK(sb[n + 1] == c[n + 1]);
}

TEST_CASE("halve") {
  CHECK(series_halve(poly({2, -4, 0})) == poly({1, -2, 0}));
  CHECK_THROWS_AS(series_halve(poly({2, 3})), std::domain_error);
}

TEST_CASE("binomial multiply and divide are inverse") {
  const auto s = pochhammer_infinite(Sign::Plus, 1, 1, 30);
  for (int e : {1, 2, 7, 31}) {
    for (auto sign : {Sign::Plus, Sign::Minus}) {
      CHECK(div_binomial(mul_binomial(s, sign, e), sign, e) == s);
    }
  }
}

TEST_CASE("equality report") {
  const auto a = poly({1, 2, 3, 4, 5});
  CHECK(series_equal_report(a, a).equal);
  const auto b = poly({1, 2, 3, 9, 5});
  const auto out = series_equal_report(a, b);
  REQUIRE_FALSE(out.equal);
  CHECK(out.mismatch->index == 3);
  CHECK(out.mismatch->lhs == 4);
  CHECK(out.mismatch->rhs == 9);
  CHECK(series_equal_report(a, b, 4).equal);
}

TEST_CASE("finite analogue, k=2, N=5, order 60") {
  const int order = 60;
  const int k = 2;
  const int big_n = 5;
  auto lhs = TruncatedSeries::zero(order);
  for (int j = 0; j <= big_n; ++j) lhs = lhs + series_shift(pochhammer_infinite(Sign::Plus, j + 1, 1, order), k * j);
  const auto inv = series_reciprocal(pochhammer_finite(Sign::Plus, 1, 1, big_n, order));
  const auto two = TruncatedSeries::monomial(0, 2, order);
  // j=0: -(q;q)_1 (2 - 1/(-q;q)_N); j=1: (2 - q^{N+1}/(-q;q)_N)
  auto sum = TruncatedSeries::zero(order);
  sum = sum - pochhammer_finite(Sign::Minus, 1, 1, 1, order) * (two - inv);
  sum = sum + (two - series_shift(inv, big_n + 1));
  CHECK(series_equal_report(lhs, pochhammer_infinite(Sign::Plus, 1, 1, order) * sum).equal);
}

TEST_CASE("Euler's identity 1/(q^c;q)_inf = sum q^{cm}/(q;q)_m") {
  const int order = 40;
  for (int c = 1; c <= 3; ++c) {
    auto rhs = TruncatedSeries::zero(order);
    for (int m = 0; c * m <= order; ++m) {
      rhs = rhs + series_shift(pochhammer_finite_reciprocal(Sign::Minus, 1, 1, m, order), c * m);
    }
    CHECK(series_reciprocal(pochhammer_infinite(Sign::Minus, c, 1, order)) == rhs);
  }
}

TEST_CASE("q-binomial collapse sum q^{nk}(q^{n+1};q)_inf = (q;q)_{k-1}") {
  const int order = 60;
  for (int k = 1; k <= 8; ++k) {
    auto lhs = TruncatedSeries::zero(order);
    for (int n = 0; n * k <= order; ++n) {
      lhs = lhs + series_shift(pochhammer_infinite(Sign::Minus, n + 1, 1, order), n * k);
    }
    CHECK(lhs == pochhammer_finite(Sign::Minus, 1, 1, k - 1, order));
    CHECK(coeffs(dk_difference_series(k, order)) ==
          oracle::product(-1, [&] {
            std::vector<int> e;
            for (int i = 1; i < k; ++i) e.push_back(i);
            return e;
          }(), order));
  }
}

TEST_CASE("random series: ring laws and reciprocals") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 1 + trial % 12;
    const auto a = random_series(rng, order, false);
    const auto b = random_series(rng, order, false);
    const auto c = random_series(rng, order, false);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(coeffs(a * b) == oracle::mul(coeffs(a), coeffs(b)));
    const auto u = random_series(rng, order, true);
    CHECK(u * series_reciprocal(u) == TruncatedSeries::one(order));
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(poly({1, -1, 0})) == "1 - q + O(q^3)");
}
