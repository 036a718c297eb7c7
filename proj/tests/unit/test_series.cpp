#include <doctest.h>

#include "callan/error.hpp"
#include "callan/series.hpp"

using namespace callan;

namespace {

TruncatedSeries from(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return TruncatedSeries(v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::unsupported;
}

}  // namespace

TEST_CASE("ring laws hold on truncated series") {
  const auto f = from({1, 2, -3, 0, 5, 7});
  const auto g = from({0, 1, 1, -2, 4, 1});
  const auto h = from({2, -1, 0, 3, 0, -6});
  CHECK(add(f, g) == add(g, f));
  CHECK(mul(f, g) == mul(g, f));
  CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
  CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
  CHECK(mul(f, TruncatedSeries::one(5)) == f);
  CHECK(add(f, f.negated()).is_zero());
  CHECK(subtract(f, g) == add(f, g.negated()));
}

TEST_CASE("division inverts multiplication") {
  const auto f = from({1, 2, -3, 0, 5, 7});
  const auto h = from({2, -1, 0, 3, 0, -6});
  CHECK(mul(divide(f, h), h) == f);

  // t^2 / t keeps one less coefficient
  const auto t2 = from({0, 0, 1, 0, 0});
  const auto q = divide(t2, TruncatedSeries::variable(4));
  CHECK(q.order() == 3);
  CHECK(q == from({0, 1, 0, 0}));
}

TEST_CASE("division errors") {
  const auto f = from({1, 1, 1});
  CHECK(code_of([&] { divide(f, TruncatedSeries::zero(2)); }) == ErrorCode::division_by_zero);
  CHECK(code_of([&] { divide(f, from({0, 1, 0})); }) == ErrorCode::non_series_quotient);
  CHECK(code_of([&] { mul(f, from({1, 1})); }) == ErrorCode::invalid_argument);
}

TEST_CASE("exp, log and polylogarithms are consistent") {
  const std::size_t N = 12;
  CHECK(mul(exp_series(N), exp_neg_series(N)) == TruncatedSeries::one(N));
  CHECK(add(one_minus_exp_neg(N), exp_neg_series(N)) == TruncatedSeries::one(N));
  // Li_1(x) = -log(1-x), so Li_1(1 - e^{-t}) = t
  CHECK(compose(polylog_series(1, N), one_minus_exp_neg(N)) == TruncatedSeries::variable(N));
  // Li_0(x) = x / (1 - x)
  const auto x = TruncatedSeries::variable(N);
  CHECK(polylog_series(0, N) == divide(x, subtract(TruncatedSeries::one(N), x)));
  // x d/dx Li_k = Li_{k-1}
  for (long k : {-3L, -1L, 2L}) {
    const auto li = polylog_series(k, N);
    const auto lower = polylog_series(k - 1, N);
    for (std::size_t i = 0; i <= N; ++i) CHECK(lower[i] == li[i] * static_cast<long>(i));
  }
  CHECK(polylog_series(2, 4)[3] == Rational(1, 9));
}

TEST_CASE("composition") {
  const std::size_t N = 10;
  // e^{e^t - 1} gives the Bell numbers
  const auto bell = compose(exp_series(N), exp_minus_one(N));
  const long expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (std::size_t i = 0; i <= N; ++i) CHECK(egf_coefficient(bell, i) == expected[i]);
  CHECK(code_of([&] { compose(exp_series(N), exp_series(N)); }) == ErrorCode::invalid_composition);
}

TEST_CASE("egf coefficients and factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(egf_coefficient(exp_series(8), 8) == 1);
  CHECK(code_of([] { egf_coefficient(exp_series(3), 4); }) == ErrorCode::out_of_range);
  CHECK(from({1, 0, 3}).valuation() == 0);
  CHECK(from({0, 0, 3}).valuation() == 2);
  CHECK(TruncatedSeries::zero(3).valuation() == 4);
}
