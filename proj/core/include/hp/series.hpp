#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hp/structure.hpp"

namespace hp {

using Rational = mpq_class;

/// Formal power series over the rationals, truncated at a fixed order (the
/// highest retained exponent). Arithmetic never silently extends or shrinks
/// the order; mixing orders is an error.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  /// The series x, truncated.
  static TruncatedSeries x(int order);
  /// A single monomial c * x^k.
  static TruncatedSeries monomial(const Rational& c, int k, int order);

  int order() const { return order_; }
  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, Rational v) {
    v.canonicalize();  // equality on mpq_class assumes canonical form
    c_[static_cast<std::size_t>(k)] = std::move(v);
  }

  bool is_zero() const;
  /// Index of the lowest nonzero coefficient, or order+1 for the zero series.
  int valuation() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  int order_ = 0;
  std::vector<Rational> c_;  // c_[k] is the coefficient of x^k, k <= order_
};

enum class SeriesOp { Add, Sub, Mul, Div };

/// Exact ring operation truncated at the common order. Div requires a nonzero
/// constant term in b.
TruncatedSeries series_arith(SeriesOp op, const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// K(H) by Horner evaluation over the truncated ring; H must have zero
/// constant term.
TruncatedSeries compose(const TruncatedSeries& k, const TruncatedSeries& h);

/// One term c * x^i * y^j of a bivariate polynomial.
struct Monomial {
  Rational coeff;
  int xexp = 0;
  int yexp = 0;

  bool operator==(const Monomial&) const = default;
};

/// Polynomial in x and y with exact rational coefficients. Normalization
/// merges duplicate (i, j) pairs and drops zero terms.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<Monomial> terms);

  /// Univariate polynomial in x from a dense coefficient list
  /// (c[0] + c[1] x + ...).
  static BivariatePolynomial in_x(const std::vector<Rational>& coeffs);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no term involves y.
  bool x_only() const;
  int max_yexp() const;

  bool operator==(const BivariatePolynomial&) const = default;

 private:
  std::vector<Monomial> terms_;
};

/// Q(x, H) truncated at H's order; the zero series certifies the algebraic
/// relation up to that order.
TruncatedSeries poly_residual(const BivariatePolynomial& q, const TruncatedSeries& h);

/// The unique series H with H(0)=0, H'(0)=1 satisfying
///   H = x + p * H^2 / (1 + H) + K(H)   (mod x^{order+1}),
/// found by fixed-point iteration from H = x. K must have valuation >= 3 and
/// the same order.
TruncatedSeries solve_sum_closure(int p, const TruncatedSeries& k, int order);
TruncatedSeries solve_sum_closure(int p, int order);

/// numer/denom expanded to the given order; both polynomials must be in x
/// only and denom must have a nonzero constant term.
TruncatedSeries rational_expand(const BivariatePolynomial& numer,
                                const BivariatePolynomial& denom, int order);

}  // namespace hp
