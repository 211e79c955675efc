#include "hp/series.hpp"

#include <algorithm>

namespace hp {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order_ < 0) throw Error("series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order_) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order_ < 0) throw Error("series order must be non-negative");
  if (c_.size() != static_cast<std::size_t>(order_) + 1)
    throw Error("series coefficient count does not match order");
  for (auto& q : c_) q.canonicalize();
}

TruncatedSeries TruncatedSeries::x(int order) { return monomial(Rational(1), 1, order); }

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int k, int order) {
  TruncatedSeries s(order);
  if (k <= order) s.set_coeff(k, c);
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

int TruncatedSeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (coeff(k) != 0) return k;
  return order_ + 1;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw Error("series order mismatch");
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.coeff(j) == 0) continue;
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  if (b.coeff(0) == 0) throw Error("series division by a series with zero constant term");
  TruncatedSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    Rational acc = a.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= b.coeff(j) * out.coeff(k - j);
    out.set_coeff(k, acc / b.coeff(0));
  }
  return out;
}

TruncatedSeries series_arith(SeriesOp op, const TruncatedSeries& a, const TruncatedSeries& b) {
  switch (op) {
    case SeriesOp::Add: return series_add(a, b);
    case SeriesOp::Sub: return series_sub(a, b);
    case SeriesOp::Mul: return series_mul(a, b);
    case SeriesOp::Div: return series_div(a, b);
  }
  throw Error("series_arith: unknown operation");
}

TruncatedSeries compose(const TruncatedSeries& k, const TruncatedSeries& h) {
  require_same_order(k, h);
  if (h.coeff(0) != 0) throw Error("compose: inner series must have zero constant term");
  // Horner: ((c_N h + c_{N-1}) h + ...) h + c_0.
  TruncatedSeries acc(k.order());
  for (int i = k.order(); i >= 0; --i) {
    acc = series_mul(acc, h);
    acc.set_coeff(0, acc.coeff(0) + k.coeff(i));
  }
  return acc;
}

BivariatePolynomial::BivariatePolynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.xexp < 0 || t.yexp < 0) throw Error("polynomial exponents must be non-negative");
  std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
    return a.xexp != b.xexp ? a.xexp < b.xexp : a.yexp < b.yexp;
  });
  std::vector<Monomial> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().xexp == t.xexp && merged.back().yexp == t.yexp)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Monomial& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

BivariatePolynomial BivariatePolynomial::in_x(const std::vector<Rational>& coeffs) {
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({coeffs[i], static_cast<int>(i), 0});
  return BivariatePolynomial(std::move(terms));
}

bool BivariatePolynomial::x_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Monomial& t) { return t.yexp == 0; });
}

int BivariatePolynomial::max_yexp() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.yexp);
  return m;
}

TruncatedSeries poly_residual(const BivariatePolynomial& q, const TruncatedSeries& h) {
  const int order = h.order();
  // Cache powers of h up to the highest y-exponent.
  std::vector<TruncatedSeries> powers;
  powers.reserve(static_cast<std::size_t>(q.max_yexp()) + 1);
  powers.push_back(TruncatedSeries::monomial(Rational(1), 0, order));
  for (int j = 1; j <= q.max_yexp(); ++j) powers.push_back(series_mul(powers.back(), h));

  TruncatedSeries out(order);
  for (const auto& t : q.terms()) {
    const auto& pw = powers[static_cast<std::size_t>(t.yexp)];
    for (int k = 0; k + t.xexp <= order; ++k) {
      if (pw.coeff(k) == 0) continue;
      out.set_coeff(k + t.xexp, out.coeff(k + t.xexp) + t.coeff * pw.coeff(k));
    }
  }
  return out;
}

TruncatedSeries solve_sum_closure(int p, const TruncatedSeries& k, int order) {
  if (p < 0) throw Error("solve_sum_closure: p must be non-negative");
  if (k.order() != order) throw Error("solve_sum_closure: K order mismatch");
  for (int i = 0; i < 3 && i <= order; ++i)
    if (k.coeff(i) != 0)
      throw Error("solve_sum_closure: K must have zero coefficients below x^3");

  const TruncatedSeries x = TruncatedSeries::x(order);
  const TruncatedSeries one = TruncatedSeries::monomial(Rational(1), 0, order);
  TruncatedSeries h = x;
  // Each pass fixes at least the next coefficient, so `order` passes suffice.
  for (int it = 0; it < order; ++it) {
    TruncatedSeries h2 = series_mul(h, h);
    TruncatedSeries frac = series_div(h2, series_add(one, h));
    TruncatedSeries rhs = series_add(x, compose(k, h));
    for (int j = 0; j <= order; ++j)
      rhs.set_coeff(j, rhs.coeff(j) + Rational(p) * frac.coeff(j));
    h = rhs;
  }
  return h;
}

TruncatedSeries solve_sum_closure(int p, int order) {
  return solve_sum_closure(p, TruncatedSeries::zero(order), order);
}

TruncatedSeries rational_expand(const BivariatePolynomial& numer,
                                const BivariatePolynomial& denom, int order) {
  if (!numer.x_only() || !denom.x_only())
    throw Error("rational_expand: polynomials must be in x only");
  auto to_series = [order](const BivariatePolynomial& p) {
    TruncatedSeries s(order);
    for (const auto& t : p.terms())
      if (t.xexp <= order) s.set_coeff(t.xexp, s.coeff(t.xexp) + t.coeff);
    return s;
  };
  TruncatedSeries den = to_series(denom);
  if (den.coeff(0) == 0) throw Error("rational_expand: zero constant term in denominator");
  return series_div(to_series(numer), den);
}

}  // namespace hp
