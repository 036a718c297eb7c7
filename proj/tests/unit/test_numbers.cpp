#include <doctest.h>

#include "../oracles.hpp"
#include "callan/error.hpp"
#include "callan/numbers.hpp"

using namespace callan;

TEST_CASE("Genocchi numbers match the Bernoulli route") {
  const auto expected = oracle::genocchi(30);
  const auto got = genocchi_range(30);
  REQUIRE(got.size() == expected.size());
  for (std::size_t n = 0; n < got.size(); ++n) CHECK(got[n] == expected[n]);
  CHECK(genocchi(10) == -155);
  CHECK(genocchi(12) == 2073);
}

TEST_CASE("poly-Bernoulli numbers with k = 1 are Bernoulli numbers") {
  const auto plus = oracle::bernoulli_plus(12);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(poly_bernoulli_b(n, 1) == plus[n]);
    CHECK(poly_bernoulli_c(n, 1) == (n == 1 ? Rational(-1, 2) : plus[n]));
  }
}

TEST_CASE("negative-index poly-Bernoulli numbers count lonesum matrices") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(poly_bernoulli_b(static_cast<std::size_t>(n), -k) == oracle::lonesum_count(n, k));
    }
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= 9; ++k) CHECK(poly_bernoulli_b(static_cast<std::size_t>(n), -k) == oracle::poly_bernoulli_closed(n, k));
}

TEST_CASE("C table is symmetric and counts barred Callan sequences") {
  const auto t = c_table(6, 6);
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= 6; ++k) CHECK(t[n][k] == t[k][n]);
  CHECK(t[5][5] == 1441923);
  // a bar may sit in front of any of the p+1 pairs
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      long barred = 0;
      for (const auto& s : oracle::callan_sequences(k, n)) barred += static_cast<long>(s.size());
      CHECK(c_number(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) == barred);
      CHECK(poly_bernoulli_c(static_cast<std::size_t>(n), -k - 1) == barred);
    }
}

TEST_CASE("require_integer rejects fractions") {
  CHECK(require_integer(Rational(6, 3), "x") == 2);
  CHECK_THROWS_AS(require_integer(Rational(1, 2), "x"), Error);
}
