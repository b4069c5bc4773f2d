#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heun/coeff.hpp"
#include "heun/error.hpp"

namespace heun {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Dense univariate polynomial over a field K, coefficients low to high.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(K c) {
    if (!::heun::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly monomial(K c, std::size_t n) {
    if (::heun::is_zero(c)) return {};
    std::vector<K> v(n + 1, K(0));
    v[n] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(K(1), 1); }
  /// x − a
  static Poly linear(const K& a) { return Poly(std::vector<K>{-a, K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }
  std::size_t size() const { return c_.size(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& operator[](std::size_t i) const { return c_[i]; }
  const K& lead() const { return c_.back(); }

  Poly operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }
  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const K& k) {
    if (::heun::is_zero(k)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x = x * k;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& k) { return a *= k; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (::heun::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!::heun::is_zero(b.c_[j])) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly pow(unsigned k) const {
    Poly r(K(1)), b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> out(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(out));
  }

  K evaluate(const K& at) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  /// p(x + a)
  Poly shift(const K& a) const {
    std::vector<K> v = c_;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
    return Poly(std::move(v));
  }

  /// Division by x − a with the remainder returned through rem.
  Poly divide_linear(const K& a, K* rem = nullptr) const {
    if (c_.empty()) {
      if (rem) *rem = K(0);
      return {};
    }
    std::vector<K> q(c_.size() - 1, K(0));
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * a + c_[i];
      if (i > 0) {
        q[i - 1] = acc;
      }
    }
    if (rem) *rem = acc;
    return Poly(std::move(q));
  }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) fail(ErrorCode::precondition, "polynomial division by zero");
    std::vector<K> r = c_;
    const std::size_t nd = d.c_.size();
    std::vector<K> q(r.size() >= nd ? r.size() - nd + 1 : 0, K(0));
    const bool monic = d.lead() == K(1);
    K inv = monic ? K(1) : K(1) / d.lead();
    while (r.size() >= nd) {
      K c = monic ? r.back() : r.back() * inv;
      std::size_t s = r.size() - nd;
      if (!::heun::is_zero(c)) {
        for (std::size_t i = 0; i + 1 < nd; ++i) r[s + i] -= c * d.c_[i];
      }
      q[s] = std::move(c);
      r.pop_back();
      while (!r.empty() && ::heun::is_zero(r.back())) r.pop_back();
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::internal_inconsistency, "inexact polynomial division");
    return q;
  }

  Poly monic() const {
    if (c_.empty() || lead() == K(1)) return *this;
    return *this * (K(1) / lead());
  }

  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && ::heun::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using ZPoly = Poly<CoeffScalar>;
/// Polynomial in the spectral variable E.
using EPolynomial = Poly<CoeffScalar>;

std::string to_string(const ZPoly& p, const char* var);

}  // namespace heun
