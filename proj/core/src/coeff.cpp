#include "heun/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "heun/error.hpp"

namespace heun {

CoeffScalar::CoeffScalar(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::precondition, "zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly();
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  normalize_den();
}

void CoeffScalar::normalize_den() {
  if (den_.is_zero()) return;
  Rational c = den_.content();
  if (sgn(den_.leading().coeff) < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    den_ *= inv;
    num_ *= inv;
  }
  if (den_.is_one()) den_ = MPoly();
}

const CoeffScalar& CoeffScalar::e(int i) {
  static const CoeffScalar values[3] = {CoeffScalar(MPoly::e1()), CoeffScalar(MPoly::e2()),
                                        CoeffScalar(MPoly::e3())};
  if (i < 1 || i > 3) fail(ErrorCode::precondition, "half-period index out of range");
  return values[i - 1];
}

const MPoly& CoeffScalar::den() const {
  static const MPoly one(1);
  return den_.is_zero() ? one : den_;
}

Rational CoeffScalar::rational() const {
  if (!is_rational()) fail(ErrorCode::precondition, "coefficient is not a rational number");
  return num_.constant_term();
}

CoeffScalar CoeffScalar::operator-() const {
  CoeffScalar c = *this;
  c.num_ = -c.num_;
  return c;
}

CoeffScalar& CoeffScalar::operator+=(const CoeffScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!has_den() && !o.has_den()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = MPoly();
      return *this;
    }
    return *this = CoeffScalar(num_, den_);
  }
  MPoly n = num_ * o.den() + o.num_ * den();
  MPoly d = den() * o.den();
  if (n.is_zero()) return *this = CoeffScalar();
  return *this = CoeffScalar(std::move(n), std::move(d));
}

CoeffScalar& CoeffScalar::operator-=(const CoeffScalar& o) { return *this += -o; }

CoeffScalar operator*(const CoeffScalar& a, const CoeffScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (!a.has_den() && !b.has_den()) return CoeffScalar(a.num_ * b.num_);
  MPoly g1 = b.has_den() ? gcd(a.num_, b.den_) : MPoly(1);
  MPoly g2 = a.has_den() ? gcd(b.num_, a.den_) : MPoly(1);
  MPoly n1 = g1.is_one() ? a.num_ : a.num_.divexact(g1);
  MPoly d2 = g1.is_one() ? b.den() : b.den().divexact(g1);
  MPoly n2 = g2.is_one() ? b.num_ : b.num_.divexact(g2);
  MPoly d1 = g2.is_one() ? a.den() : a.den().divexact(g2);
  CoeffScalar out;
  out.num_ = n1 * n2;
  out.den_ = d1 * d2;
  if (out.den_.is_one()) out.den_ = MPoly();
  out.normalize_den();
  return out;
}

CoeffScalar& CoeffScalar::operator*=(const CoeffScalar& o) { return *this = *this * o; }

CoeffScalar& CoeffScalar::operator/=(const CoeffScalar& o) { return *this = *this * o.inverse(); }

CoeffScalar CoeffScalar::inverse() const {
  if (is_zero()) fail(ErrorCode::precondition, "inverse of zero coefficient");
  CoeffScalar out;
  out.num_ = den();
  out.den_ = num_;
  if (out.den_.is_one()) out.den_ = MPoly();
  out.normalize_den();
  return out;
}

CoeffScalar CoeffScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  CoeffScalar result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

CoeffScalar CoeffScalar::permuted(const std::array<int, 3>& perm) const {
  const MPoly v1 = e(perm[0]).num(), v2 = e(perm[1]).num();
  MPoly n = num_.substitute(v1, v2);
  if (!has_den()) return CoeffScalar(std::move(n));
  return CoeffScalar(std::move(n), den_.substitute(v1, v2));
}

std::string CoeffScalar::to_string() const {
  if (!has_den()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

CoeffScalar g2_of() {
  const CoeffScalar e1 = CoeffScalar::e1(), e2 = CoeffScalar::e2(), e3 = CoeffScalar::e3();
  return CoeffScalar(-4) * (e1 * e2 + e2 * e3 + e3 * e1);
}

CoeffScalar g3_of() { return CoeffScalar(4) * CoeffScalar::e1() * CoeffScalar::e2() * CoeffScalar::e3(); }

NumericPoint NumericPoint::from_e(std::complex<double> e1, std::complex<double> e2) {
  NumericPoint pt;
  pt.e1 = e1;
  pt.e2 = e2;
  pt.e3 = -e1 - e2;
  return pt;
}

double NumericPoint::scale() const { return std::max({std::abs(e1), std::abs(e2), std::abs(e3)}); }

void NumericPoint::validate() const {
  if (std::abs(e1 + e2 + e3) > 1e-12 * scale())
    fail(ErrorCode::degenerate_point, "e1+e2+e3 differs from zero");
}

bool NumericPoint::degenerate(double rel_tol) const {
  double s = scale();
  return std::abs(e1 - e2) <= rel_tol * s || std::abs(e2 - e3) <= rel_tol * s ||
         std::abs(e1 - e3) <= rel_tol * s;
}

namespace {

using Series = std::vector<long long>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::complex<double> series_eval(const Series& s, std::complex<double> p) {
  std::complex<double> acc = 0;
  for (std::size_t i = s.size(); i-- > 0;) acc = acc * p + static_cast<double>(s[i]);
  return acc;
}

}  // namespace

NumericPoint numeric_from_nome(std::complex<double> p, int order) {
  if (std::abs(p) >= 1) fail(ErrorCode::precondition, "nome must satisfy |p| < 1");
  if (order < 1) fail(ErrorCode::precondition, "series order must be at least 1");
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  // θ₂(0)⁴ = 16p·(Σ_{k≥0} p^{k(k+1)})⁴,  θ₄(0) = 1 + 2Σ_{k≥1} (−1)^k p^{k²}.
  Series s2(n, 0), s4(n, 0);
  for (std::size_t k = 0; k * (k + 1) < n; ++k) s2[k * (k + 1)] = 1;
  s4[0] = 1;
  for (std::size_t k = 1; k * k < n; ++k) s4[k * k] = (k % 2) ? -2 : 2;
  Series t2 = series_mul(series_mul(s2, s2, n - 1), series_mul(s2, s2, n - 1), n - 1);
  Series t4 = series_mul(series_mul(s4, s4, n), series_mul(s4, s4, n), n);
  const std::complex<double> th2 = 16.0 * p * series_eval(t2, p);
  const std::complex<double> th4 = series_eval(t4, p);
  const double c = std::numbers::pi * std::numbers::pi / 3.0;
  NumericPoint pt;
  pt.e1 = c * (th2 + 2.0 * th4);
  pt.e2 = c * (th2 - th4);
  pt.e3 = -c * (2.0 * th2 + th4);
  pt.nome = p;
  return pt;
}

std::complex<double> instantiate(const CoeffScalar& c, const NumericPoint& pt) {
  std::complex<double> n = c.num().evaluate(pt.e1, pt.e2);
  if (!c.has_den()) return n;
  std::complex<double> d = c.den().evaluate(pt.e1, pt.e2);
  double mag = c.den().magnitude(pt.e1, pt.e2);
  if (d == 0.0 || std::abs(d) <= 1e-13 * mag)
    fail(ErrorCode::pole_at_point, "denominator " + c.den().to_string() + " vanishes at the point");
  return n / d;
}

}  // namespace heun
