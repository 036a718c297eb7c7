#include "callan/series.hpp"

#include <sstream>
#include <utility>

#include "callan/error.hpp"

namespace callan {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order()) {
    std::ostringstream os;
    os << op << ": order mismatch (" << a.order() << " vs " << b.order() << ")";
    throw Error(ErrorCode::invalid_argument, os.str());
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw Error(ErrorCode::invalid_argument, "series needs at least one coefficient");
  }
  for (auto& c : coefficients_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coefficients_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coefficients_[1] = 1;
  return s;
}

void TruncatedSeries::set(std::size_t i, Rational value) {
  value.canonicalize();
  coefficients_.at(i) = std::move(value);
}

std::size_t TruncatedSeries::valuation() const noexcept {
  std::size_t i = 0;
  while (i < coefficients_.size() && sgn(coefficients_[i]) == 0) ++i;
  return i;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& factor) const {
  TruncatedSeries out(order());
  for (std::size_t i = 0; i <= order(); ++i) out.coefficients_[i] = coefficients_[i] * factor;
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i <= order(); ++i) {
    if (i) os << ", ";
    os << coefficients_[i].get_str();
  }
  os << "]";
  return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "add");
  std::vector<Rational> c(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) c[i] = a[i] + b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "subtract");
  std::vector<Rational> c(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) c[i] = a[i] - b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  std::vector<Rational> c(n + 1);
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  for (std::size_t i = va; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = vb; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "divide");
  const std::size_t vg = g.valuation();
  if (vg > g.order()) throw Error(ErrorCode::division_by_zero, "divide: divisor is zero");
  const std::size_t vf = f.valuation();
  if (vf < vg) {
    std::ostringstream os;
    os << "divide: numerator valuation " << vf << " below divisor valuation " << vg;
    throw Error(ErrorCode::non_series_quotient, os.str());
  }
  const std::size_t n = f.order() - vg;
  std::vector<Rational> q(n + 1);
  const Rational& lead = g[vg];
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = f[i + vg];
    for (std::size_t j = 1; j <= i; ++j) {
      const Rational& gj = g[vg + j];
      if (sgn(gj) != 0) acc -= gj * q[i - j];
    }
    q[i] = acc / lead;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "compose");
  if (sgn(g[0]) != 0) {
    throw Error(ErrorCode::invalid_composition, "compose: inner series has nonzero constant term");
  }
  const std::size_t n = f.order();
  TruncatedSeries acc(n);
  acc.set(0, f[n]);
  for (std::size_t i = n; i-- > 0;) {
    acc = mul(acc, g);
    acc.set(0, acc[0] + f[i]);
  }
  return acc;
}

TruncatedSeries exp_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  BigInt fact = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    c[i] = Rational(BigInt(1), fact);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries exp_neg_series(std::size_t order) {
  auto s = exp_series(order);
  for (std::size_t i = 1; i <= order; i += 2) s.set(i, -s[i]);
  return s;
}

TruncatedSeries one_minus_exp_neg(std::size_t order) {
  return subtract(TruncatedSeries::one(order), exp_neg_series(order));
}

TruncatedSeries exp_minus_one(std::size_t order) {
  return subtract(exp_series(order), TruncatedSeries::one(order));
}

TruncatedSeries polylog_series(long k, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t m = 1; m <= order; ++m) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), m, static_cast<unsigned long>(k < 0 ? -k : k));
    c[m] = k <= 0 ? Rational(power) : Rational(BigInt(1), power);
  }
  return TruncatedSeries(std::move(c));
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational egf_coefficient(const TruncatedSeries& f, std::size_t n) {
  if (n > f.order()) {
    std::ostringstream os;
    os << "egf_coefficient: index " << n << " exceeds order " << f.order();
    throw Error(ErrorCode::out_of_range, os.str());
  }
  Rational r = f[n] * Rational(factorial(n));
  r.canonicalize();
  return r;
}

}  // namespace callan
