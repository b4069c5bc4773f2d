#include "heun/ratz.hpp"

#include <algorithm>
#include <sstream>

namespace heun {

std::string to_string(const ZPoly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const CoeffScalar& c = p[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    bool simple = cs.find_first_of("+-*/", 1) == std::string::npos;
    if (i == 0) {
      out += cs;
    } else {
      if (!c.is_one()) out += (simple ? cs : "(" + cs + ")") + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

ZPoly z_minus_e_poly(int i) {
  static const ZPoly polys[3] = {ZPoly::linear(CoeffScalar::e(1)), ZPoly::linear(CoeffScalar::e(2)),
                                 ZPoly::linear(CoeffScalar::e(3))};
  return polys[i - 1];
}

RatZ::RatZ(ZPoly num, Poles poles, ZPoly den) : num_(std::move(num)), poles_(poles), den_(std::move(den)) {
  for (int i = 0; i < 3; ++i)
    if (poles_[i] < 0) {
      num_ = num_ * z_minus_e_poly(i + 1).pow(-poles_[i]);
      poles_[i] = 0;
    }
  if (den_.degree() == 0) {
    num_ *= den_[0].inverse();
    den_ = ZPoly();
  }
  normalize();
}

RatZ RatZ::z_minus_e(int i, int k) {
  Poles p{};
  p[i - 1] = -k;
  return RatZ(ZPoly(CoeffScalar(1)), p);
}

void RatZ::normalize() {
  if (num_.is_zero()) {
    poles_ = {};
    den_ = ZPoly();
    return;
  }
  if (has_den()) {
    for (int i = 1; i <= 3; ++i) {
      for (;;) {
        CoeffScalar rem;
        ZPoly q = den_.divide_linear(CoeffScalar::e(i), &rem);
        if (!rem.is_zero()) break;
        den_ = std::move(q);
        ++poles_[i - 1];
      }
    }
    ZPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    if (!(den_.lead() == CoeffScalar(1))) {
      CoeffScalar inv = den_.lead().inverse();
      num_ *= inv;
      den_ *= inv;
    }
    if (den_.degree() == 0) den_ = ZPoly();
  }
  for (int i = 1; i <= 3; ++i) {
    while (poles_[i - 1] > 0) {
      CoeffScalar rem;
      ZPoly q = num_.divide_linear(CoeffScalar::e(i), &rem);
      if (!rem.is_zero()) break;
      num_ = std::move(q);
      --poles_[i - 1];
    }
  }
}

bool RatZ::is_constant() const { return num_.is_constant() && poles_ == Poles{} && !has_den(); }

CoeffScalar RatZ::constant() const {
  if (!is_constant()) fail(ErrorCode::precondition, "rational function is not constant");
  return num_.coeff(0);
}

int RatZ::degree_at_infinity() const {
  return num_.degree() - poles_[0] - poles_[1] - poles_[2] - (has_den() ? den_.degree() : 0);
}

RatZ RatZ::operator-() const {
  RatZ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatZ& RatZ::operator+=(const RatZ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Poles p;
  ZPoly a = num_, b = o.num_;
  for (int i = 0; i < 3; ++i) {
    p[i] = std::max(poles_[i], o.poles_[i]);
    if (p[i] > poles_[i]) a = a * z_minus_e_poly(i + 1).pow(p[i] - poles_[i]);
    if (p[i] > o.poles_[i]) b = b * z_minus_e_poly(i + 1).pow(p[i] - o.poles_[i]);
  }
  ZPoly den;
  if (has_den() || o.has_den()) {
    if (den_ == o.den_) {
      den = den_;
    } else {
      if (o.has_den()) a = a * o.den_;
      if (has_den()) b = b * den_;
      den = has_den() ? (o.has_den() ? den_ * o.den_ : den_) : o.den_;
    }
  }
  num_ = a + b;
  poles_ = p;
  den_ = std::move(den);
  normalize();
  return *this;
}

RatZ& RatZ::operator-=(const RatZ& o) { return *this += -o; }

RatZ operator*(const RatZ& a, const RatZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatZ r;
  r.num_ = a.num_ * b.num_;
  for (int i = 0; i < 3; ++i) r.poles_[i] = a.poles_[i] + b.poles_[i];
  if (a.has_den() || b.has_den())
    r.den_ = a.has_den() ? (b.has_den() ? a.den_ * b.den_ : a.den_) : b.den_;
  r.normalize();
  return r;
}

RatZ operator*(const RatZ& a, const CoeffScalar& c) {
  if (c.is_zero()) return {};
  RatZ r = a;
  r.num_ *= c;
  return r;
}

RatZ RatZ::times_factors(const Poles& m) const {
  if (is_zero()) return {};
  RatZ r = *this;
  for (int i = 0; i < 3; ++i) r.poles_[i] -= m[i];
  for (int i = 0; i < 3; ++i)
    if (r.poles_[i] < 0) {
      r.num_ = r.num_ * z_minus_e_poly(i + 1).pow(-r.poles_[i]);
      r.poles_[i] = 0;
    }
  r.normalize();
  return r;
}

RatZ RatZ::inverse() const {
  if (is_zero()) fail(ErrorCode::precondition, "inverse of zero rational function");
  Poles m{};
  ZPoly n = num_;
  for (int i = 1; i <= 3; ++i) {
    for (;;) {
      CoeffScalar rem;
      ZPoly q = n.divide_linear(CoeffScalar::e(i), &rem);
      if (!rem.is_zero()) break;
      n = std::move(q);
      ++m[i - 1];
    }
  }
  CoeffScalar lc = n.lead();
  ZPoly top = has_den() ? den_ : ZPoly(CoeffScalar(1));
  for (int i = 0; i < 3; ++i)
    if (poles_[i] > 0) top = top * z_minus_e_poly(i + 1).pow(poles_[i]);
  top *= lc.inverse();
  RatZ r;
  r.num_ = std::move(top);
  r.poles_ = m;
  if (n.degree() > 0) r.den_ = n * lc.inverse();
  r.normalize();
  return r;
}

RatZ RatZ::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatZ result(1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

RatZ RatZ::derivative() const {
  if (is_zero()) return {};
  // Denominator P·D with P = ∏(z−eᵢ)^{kᵢ}; new denominator P·Q₁·D² where
  // Q₁ = ∏_{kᵢ>0}(z−eᵢ).
  ZPoly q1(CoeffScalar(1));
  ZPoly t;
  for (int i = 0; i < 3; ++i) {
    if (poles_[i] == 0) continue;
    ZPoly others(CoeffScalar(poles_[i]));
    for (int j = 0; j < 3; ++j)
      if (j != i && poles_[j] > 0) others = others * z_minus_e_poly(j + 1);
    t += others;
    q1 = q1 * z_minus_e_poly(i + 1);
  }
  RatZ r;
  if (!has_den()) {
    r.num_ = num_.derivative() * q1 - num_ * t;
  } else {
    r.num_ = (num_.derivative() * q1 - num_ * t) * den_ - num_ * den_.derivative() * q1;
    r.den_ = den_ * den_;
  }
  for (int i = 0; i < 3; ++i) r.poles_[i] = poles_[i] > 0 ? poles_[i] + 1 : 0;
  r.normalize();
  return r;
}

RatZ RatZ::compose(const RatZ& s) const {
  auto eval = [&](const ZPoly& p) {
    RatZ acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * s + RatZ(p[i]);
    return acc;
  };
  RatZ out = eval(num_);
  for (int i = 0; i < 3; ++i)
    if (poles_[i] > 0) out = out * (s - RatZ(CoeffScalar::e(i + 1))).pow(-poles_[i]);
  if (has_den()) out = out * eval(den_).inverse();
  return out;
}

CoeffScalar RatZ::value_at_e(int i) const {
  if (poles_[i - 1] > 0) fail(ErrorCode::precondition, "rational function has a pole at z = e_i");
  CoeffScalar v = num_.evaluate(CoeffScalar::e(i));
  if (has_den()) v /= den_.evaluate(CoeffScalar::e(i));
  return v;
}

std::string RatZ::to_string() const {
  std::string n = heun::to_string(num_, "z");
  std::vector<std::string> factors;
  for (int i = 0; i < 3; ++i) {
    if (poles_[i] == 0) continue;
    std::string f = "(z-e" + std::to_string(i + 1) + ")";
    if (poles_[i] > 1) f += "^" + std::to_string(poles_[i]);
    factors.push_back(f);
  }
  if (has_den()) factors.push_back("(" + heun::to_string(den_, "z") + ")");
  if (factors.empty()) return n;
  std::string d;
  for (std::size_t k = 0; k < factors.size(); ++k) d += (k ? "*" : "") + factors[k];
  return "(" + n + ")/(" + d + ")";
}

}  // namespace heun
