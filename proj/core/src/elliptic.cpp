#include "heun/elliptic.hpp"

#include <algorithm>

namespace heun {

namespace {

void accumulate(std::vector<EllipticFn::Component>& comps, const Twist& t, RatZ value) {
  auto it = std::lower_bound(comps.begin(), comps.end(), t,
                             [](const EllipticFn::Component& c, const Twist& k) { return c.twist < k; });
  if (it != comps.end() && it->twist == t) {
    it->value += value;
    if (it->value.is_zero()) comps.erase(it);
  } else if (!value.is_zero()) {
    comps.insert(it, {t, std::move(value)});
  }
}

// Adds two twists; the integer carries become explicit (z−eᵢ) factors.
RatZ::Poles add_twists(const Twist& a, const Twist& b, Twist& out) {
  RatZ::Poles carry{};
  for (int i = 0; i < 3; ++i) {
    int q = a[i] + b[i];
    carry[i] = q / 4;
    out[i] = static_cast<std::uint8_t>(q % 4);
  }
  return carry;
}

bool is_half_twist(const Twist& t) {
  return t[0] % 2 == 0 && t[1] % 2 == 0 && t[2] % 2 == 0;
}

}  // namespace

EllipticFn::EllipticFn(const RatZ& r) {
  if (!r.is_zero()) comps_.push_back({kUntwisted, r});
}

EllipticFn::EllipticFn(const Twist& t, const RatZ& r) {
  for (auto q : t)
    if (q > 3) fail(ErrorCode::precondition, "twist exponent out of range");
  if (!r.is_zero()) comps_.push_back({t, r});
}

EllipticFn EllipticFn::w() { return EllipticFn(kOdd, RatZ(2)); }

EllipticFn EllipticFn::power_product(const std::array<int, 3>& quarters) {
  Twist t;
  RatZ::Poles m{};
  for (int i = 0; i < 3; ++i) {
    int q = quarters[i];
    int k = q >= 0 ? q / 4 : -((-q + 3) / 4);
    m[i] = k;
    t[i] = static_cast<std::uint8_t>(q - 4 * k);
  }
  return EllipticFn(t, RatZ(1).times_factors(m));
}

RatZ EllipticFn::component(const Twist& t) const {
  for (const auto& c : comps_)
    if (c.twist == t) return c.value;
  return {};
}

bool EllipticFn::is_untwisted() const {
  return comps_.empty() || (comps_.size() == 1 && comps_[0].twist == kUntwisted);
}

bool EllipticFn::in_rank2_subfield() const {
  for (const auto& c : comps_)
    if (c.twist != kUntwisted && c.twist != kOdd) return false;
  return true;
}

bool EllipticFn::is_constant() const { return is_zero() || (is_untwisted() && comps_[0].value.is_constant()); }

CoeffScalar EllipticFn::constant() const {
  if (is_zero()) return {};
  if (!is_constant()) fail(ErrorCode::precondition, "elliptic function is not constant");
  return comps_[0].value.constant();
}

EllipticFn EllipticFn::operator-() const {
  EllipticFn f = *this;
  for (auto& c : f.comps_) c.value = -c.value;
  return f;
}

EllipticFn& EllipticFn::operator+=(const EllipticFn& o) {
  for (const auto& c : o.comps_) accumulate(comps_, c.twist, c.value);
  return *this;
}

EllipticFn& EllipticFn::operator-=(const EllipticFn& o) {
  for (const auto& c : o.comps_) accumulate(comps_, c.twist, -c.value);
  return *this;
}

EllipticFn operator*(const EllipticFn& a, const EllipticFn& b) {
  EllipticFn out;
  for (const auto& x : a.comps_)
    for (const auto& y : b.comps_) {
      Twist t;
      RatZ::Poles carry = add_twists(x.twist, y.twist, t);
      RatZ v = x.value * y.value;
      if (carry != RatZ::Poles{}) v = v.times_factors(carry);
      accumulate(out.comps_, t, std::move(v));
    }
  return out;
}

EllipticFn operator*(const EllipticFn& a, const CoeffScalar& c) {
  if (c.is_zero()) return {};
  EllipticFn out = a;
  for (auto& x : out.comps_) x.value = x.value * c;
  return out;
}

EllipticFn operator*(const EllipticFn& a, const RatZ& r) {
  if (r.is_zero()) return {};
  EllipticFn out = a;
  for (auto& x : out.comps_) x.value = x.value * r;
  return out;
}

EllipticFn EllipticFn::inverse() const {
  if (is_zero()) fail(ErrorCode::precondition, "inverse of zero elliptic function");
  if (comps_.size() == 1) {
    const auto& c = comps_[0];
    return power_product({-c.twist[0], -c.twist[1], -c.twist[2]}) * c.value.inverse();
  }
  // τ^t·(A + B·τ^{(2,2,2)}): invert through the conjugate A − B·τ^{(2,2,2)}.
  const Twist t0 = comps_[0].twist;
  const EllipticFn unshift = power_product({-t0[0], -t0[1], -t0[2]});
  EllipticFn g = *this * unshift;
  bool rank2 = true;
  for (const auto& c : g.comps_) rank2 = rank2 && (c.twist == kUntwisted || c.twist == kOdd);
  if (rank2) {
    RatZ a = g.component(kUntwisted), b = g.component(kOdd);
    RatZ cube(z_minus_e_poly(1) * z_minus_e_poly(2) * z_minus_e_poly(3));
    RatZ norm = a * a - b * b * cube;
    if (norm.is_zero()) fail(ErrorCode::precondition, "inverse of a zero divisor");
    RatZ inv = norm.inverse();
    return unshift * (EllipticFn(a * inv) - EllipticFn(kOdd, b * inv));
  }
  for (const auto& c : comps_)
    if (!is_half_twist(c.twist))
      fail(ErrorCode::unsupported, "inverse of a multi-component quarter-twisted function");
  // Norm over the sign-flip group of the three square roots.
  EllipticFn cofactor(1);
  for (int mask = 1; mask < 8; ++mask) {
    EllipticFn g = *this;
    for (auto& c : g.comps_) {
      int flips = 0;
      for (int i = 0; i < 3; ++i)
        if ((mask >> i) & 1) flips += c.twist[i] / 2;
      if (flips % 2) c.value = -c.value;
    }
    cofactor = cofactor * g;
  }
  EllipticFn norm = *this * cofactor;
  if (!norm.is_untwisted())
    fail(ErrorCode::internal_inconsistency, "norm of an elliptic function is twisted");
  return cofactor * norm.component(kUntwisted).inverse();
}

EllipticFn EllipticFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  EllipticFn result(1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string EllipticFn::to_string() const {
  if (comps_.empty()) return "0";
  std::string out;
  for (const auto& c : comps_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.value.to_string() + ")";
    for (int i = 0; i < 3; ++i) {
      int q = c.twist[i];
      if (!q) continue;
      std::string e = q % 2 ? std::to_string(q) + "/2" : std::to_string(q / 2);
      out += " * sqrt(z-e" + std::to_string(i + 1) + ")^{" + e + "}";
    }
  }
  return out;
}

EllipticFn differentiate(const EllipticFn& f) {
  EllipticFn out;
  for (const auto& c : f.components()) {
    // d/dx[R·τ^s] = w·(R′ + R·Σ (sᵢ/4)/(z−eᵢ))·τ^s, with w = 2τ^{(2,2,2)}.
    RatZ s = c.value.derivative();
    for (int i = 0; i < 3; ++i) {
      if (!c.twist[i]) continue;
      RatZ::Poles m{};
      m[i] = -1;
      s += c.value.times_factors(m) * CoeffScalar(Rational(c.twist[i], 4));
    }
    Twist t;
    RatZ::Poles carry = add_twists(c.twist, kOdd, t);
    s = s * CoeffScalar(2);
    if (carry != RatZ::Poles{}) s = s.times_factors(carry);
    out += EllipticFn(t, s);
  }
  return out;
}

EllipticFn differentiate(const EllipticFn& f, int times) {
  EllipticFn g = f;
  for (int k = 0; k < times; ++k) g = differentiate(g);
  return g;
}

CoeffScalar half_period_residue(int i) {
  CoeffScalar r(1);
  for (int j = 1; j <= 3; ++j)
    if (j != i) r *= CoeffScalar::e(i) - CoeffScalar::e(j);
  return r;
}

RatZ shifted_p(int i) {
  if (i == 0) return RatZ::z();
  RatZ::Poles p{};
  p[i - 1] = 1;
  return RatZ(CoeffScalar::e(i)) + RatZ(ZPoly(half_period_residue(i)), p);
}

EllipticFn shift_half_period(const EllipticFn& f, int i) {
  if (i < 1 || i > 3) fail(ErrorCode::precondition, "half-period index must be 1, 2 or 3");
  const RatZ s = shifted_p(i);
  EllipticFn out;
  for (const auto& c : f.components()) {
    RatZ v = c.value.compose(s);
    if (c.twist == kUntwisted) {
      out += EllipticFn(v);
    } else if (c.twist == kOdd) {
      // w(x+ωᵢ) = −cᵢ·w/(z−eᵢ)²
      RatZ::Poles m{};
      m[i - 1] = -2;
      out += EllipticFn(kOdd, (v * (-half_period_residue(i))).times_factors(m));
    } else {
      fail(ErrorCode::obstructed_shift,
           "half-period shift of a co-p twisted component needs sqrt(e_i-e_j) outside the coefficient field");
    }
  }
  return out;
}

ParityClass parity_of_twist(const Twist& t) {
  if (!is_half_twist(t))
    fail(ErrorCode::mixed_parity, "quarter-power twist lies in no sign-character space");
  int s1 = t[0] / 2, s2 = t[1] / 2, s3 = t[2] / 2;
  return {(s2 + s3) % 2 ? -1 : 1, (s1 + s2) % 2 ? -1 : 1};
}

ParityClass parity_of(const EllipticFn& f) {
  if (f.is_zero()) return {};
  ParityClass p = parity_of_twist(f.components()[0].twist);
  for (const auto& c : f.components())
    if (!(parity_of_twist(c.twist) == p))
      fail(ErrorCode::mixed_parity, "components carry different sign characters");
  return p;
}

EllipticFn potential(const Quad& l) {
  EllipticFn u;
  for (int i = 0; i < 4; ++i) {
    Rational c(l[i].twice * (l[i].twice + 2), 4);
    c.canonicalize();
    if (sgn(c) == 0) continue;
    EllipticFn p = i == 0 ? EllipticFn::z() : shift_half_period(EllipticFn::z(), i);
    u += p * CoeffScalar(c);
  }
  return u;
}

std::complex<double> evaluate(const RatZ& r, const NumericPoint& pt, std::complex<double> z) {
  auto poly = [&](const ZPoly& p) {
    std::complex<double> acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + instantiate(p[k], pt);
    return acc;
  };
  std::complex<double> v = poly(r.num());
  const std::complex<double> e[3] = {pt.e1, pt.e2, pt.e3};
  for (int i = 0; i < 3; ++i)
    if (r.poles()[i]) v /= std::pow(z - e[i], r.poles()[i]);
  if (r.has_den()) v /= poly(r.den());
  return v;
}

std::complex<double> evaluate(const EllipticFn& f, const PointValues& at) {
  std::complex<double> total = 0;
  for (const auto& c : f.components()) {
    std::complex<double> v = evaluate(c.value, at.pt, at.z);
    for (int i = 0; i < 3; ++i) {
      if (c.twist[i] % 2) fail(ErrorCode::unsupported, "numeric evaluation of quarter-power twists");
      if (c.twist[i]) v *= at.tau[i];
    }
    total += v;
  }
  return total;
}

}  // namespace heun
