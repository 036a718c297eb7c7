#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace callan {

using BigInt = mpz_class;
using Rational = mpq_class;

// Finite prefix c_0 + c_1 t + ... + c_N t^N of a formal power series with
// exact rational coefficients. Coefficients are kept canonical.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
  static TruncatedSeries one(std::size_t order);
  // The series t (requires order >= 1 to be representable; at order 0 it is 0).
  static TruncatedSeries variable(std::size_t order);

  std::size_t order() const noexcept { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }
  void set(std::size_t i, Rational value);
  std::span<const Rational> coefficients() const noexcept { return coefficients_; }

  // Index of the first nonzero coefficient, or order()+1 if all are zero.
  std::size_t valuation() const noexcept;
  bool is_zero() const noexcept { return valuation() > order(); }

  TruncatedSeries scaled(const Rational& factor) const;
  TruncatedSeries negated() const { return scaled(Rational(-1)); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coefficients_ == b.coefficients_;
  }

  std::string to_string() const;

 private:
  std::vector<Rational> coefficients_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient f/g. Both operands must share an order; when g has valuation v > 0
/// the common factor t^v is cancelled first, so the result has order
/// f.order() - v. Throws non_series_quotient if valuation(f) < valuation(g) and
/// division_by_zero if g vanishes identically.
TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(g(t)) by Horner's scheme. g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries exp_series(std::size_t order);      // e^t
TruncatedSeries exp_neg_series(std::size_t order);  // e^{-t}
TruncatedSeries one_minus_exp_neg(std::size_t order);  // 1 - e^{-t}
TruncatedSeries exp_minus_one(std::size_t order);      // e^t - 1

/// Li_k(z) = sum_{m>=1} z^m / m^k truncated at z^order.
TruncatedSeries polylog_series(long k, std::size_t order);

/// n! * [t^n] f.
Rational egf_coefficient(const TruncatedSeries& f, std::size_t n);

BigInt factorial(unsigned long n);

}  // namespace callan
