#pragma once

#include <array>
#include <string>

#include "heun/poly.hpp"

namespace heun {

/// Rational function of z over CoeffScalar in the reduced form
///   N(z) / ( ∏(z−eᵢ)^{kᵢ} · D(z) )
/// where D is monic, coprime to N and to every z−eᵢ, and N(eᵢ) ≠ 0 when kᵢ > 0.
/// D = 1 on all hot paths; general D appears only after non-unit division.
class RatZ {
 public:
  using Poles = std::array<int, 3>;

  RatZ() = default;
  RatZ(const CoeffScalar& c) : num_(c) {}
  RatZ(long c) : num_(CoeffScalar(c)) {}
  RatZ(ZPoly num) : num_(std::move(num)) {}
  RatZ(ZPoly num, Poles poles, ZPoly den = ZPoly());

  static RatZ z() { return RatZ(ZPoly::x()); }
  /// (z−eᵢ)^k for any integer k.
  static RatZ z_minus_e(int i, int k = 1);

  const ZPoly& num() const { return num_; }
  const Poles& poles() const { return poles_; }
  /// Empty when the general denominator is 1.
  const ZPoly& den() const { return den_; }
  bool has_den() const { return !den_.is_zero(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  CoeffScalar constant() const;
  bool is_polynomial() const { return !has_den() && poles_ == Poles{}; }
  /// Pole order at z = ∞ counted as deg numerator − deg denominator.
  int degree_at_infinity() const;

  RatZ operator-() const;
  RatZ& operator+=(const RatZ& o);
  RatZ& operator-=(const RatZ& o);
  friend RatZ operator+(RatZ a, const RatZ& b) { return a += b; }
  friend RatZ operator-(RatZ a, const RatZ& b) { return a -= b; }
  friend RatZ operator*(const RatZ& a, const RatZ& b);
  friend RatZ operator*(const RatZ& a, const CoeffScalar& c);
  friend RatZ operator/(const RatZ& a, const RatZ& b) { return a * b.inverse(); }
  bool operator==(const RatZ& o) const {
    return poles_ == o.poles_ && num_ == o.num_ && den_ == o.den_;
  }

  RatZ inverse() const;
  RatZ pow(int k) const;
  /// d/dz
  RatZ derivative() const;
  /// Multiplication by ∏(z−eᵢ)^{mᵢ}, mᵢ of any sign.
  RatZ times_factors(const Poles& m) const;
  /// R(s(z)).
  RatZ compose(const RatZ& s) const;
  /// Value at z = eᵢ (must be finite).
  CoeffScalar value_at_e(int i) const;

  std::string to_string() const;

 private:
  void normalize();
  ZPoly num_;
  Poles poles_{};
  ZPoly den_;  // zero polynomial means 1
};

ZPoly z_minus_e_poly(int i);

}  // namespace heun
