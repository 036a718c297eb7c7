#include "callan/numbers.hpp"

#include <sstream>

#include "callan/error.hpp"

namespace callan {

SignedCount require_integer(const Rational& input, const char* what) {
  Rational value = input;
  value.canonicalize();
  if (value.get_den() != 1) {
    std::ostringstream os;
    os << what << ": extracted value " << value.get_str() << " is not an integer";
    throw Error(ErrorCode::consistency, os.str());
  }
  return value.get_num();
}

std::vector<SignedCount> genocchi_range(std::size_t max_n) {
  const std::size_t order = max_n;
  const auto two_t = TruncatedSeries::variable(order).scaled(Rational(2));
  const auto denom = add(exp_series(order), TruncatedSeries::one(order));
  const auto egf = divide(two_t, denom);
  std::vector<SignedCount> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    out.push_back(require_integer(egf_coefficient(egf, n), "genocchi"));
  }
  return out;
}

SignedCount genocchi(std::size_t n) { return genocchi_range(n).back(); }

TruncatedSeries poly_bernoulli_b_series(long k, std::size_t max_n) {
  const std::size_t order = max_n + 1;
  const auto inner = one_minus_exp_neg(order);
  return divide(compose(polylog_series(k, order), inner), inner);
}

TruncatedSeries poly_bernoulli_c_series(long k, std::size_t max_n) {
  const std::size_t order = max_n + 1;
  const auto numer = compose(polylog_series(k, order), one_minus_exp_neg(order));
  return divide(numer, exp_minus_one(order));
}

Rational poly_bernoulli_b(std::size_t n, long k) {
  return egf_coefficient(poly_bernoulli_b_series(k, n), n);
}

Rational poly_bernoulli_c(std::size_t n, long k) {
  return egf_coefficient(poly_bernoulli_c_series(k, n), n);
}

namespace {

SignedCount checked_c_number(const Rational& value) {
  auto v = require_integer(value, "c_number");
  if (sgn(v) <= 0) {
    throw Error(ErrorCode::consistency, "c_number: extracted value " + v.get_str() + " is not positive");
  }
  return v;
}

}  // namespace

SignedCount c_number(std::size_t n, std::size_t k) {
  return checked_c_number(poly_bernoulli_c(n, -static_cast<long>(k) - 1));
}

std::vector<std::vector<SignedCount>> c_table(std::size_t max_n, std::size_t max_k) {
  std::vector<std::vector<SignedCount>> table(max_n + 1, std::vector<SignedCount>(max_k + 1));
  for (std::size_t k = 0; k <= max_k; ++k) {
    const auto egf = poly_bernoulli_c_series(-static_cast<long>(k) - 1, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) table[n][k] = checked_c_number(egf_coefficient(egf, n));
  }
  return table;
}

}  // namespace callan
