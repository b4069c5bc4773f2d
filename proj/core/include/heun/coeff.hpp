#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "heun/mpoly.hpp"

namespace heun {

struct NumericPoint {
  std::complex<double> e1, e2, e3;
  std::optional<std::complex<double>> nome;
  std::optional<std::complex<double>> tau;

  static NumericPoint from_e(std::complex<double> e1, std::complex<double> e2);
  void validate() const;
  bool degenerate(double rel_tol = 1e-12) const;
  double scale() const;
};

/// Exact element of ℚ(e₁,e₂); e₃ = −e₁−e₂ is eliminated on construction.
/// The denominator is primitive over ℤ with positive leading coefficient and
/// coprime to the numerator.
class CoeffScalar {
 public:
  CoeffScalar() = default;
  CoeffScalar(long c) : num_(c) {}
  CoeffScalar(const Rational& c) : num_(c) {}
  CoeffScalar(MPoly num) : num_(std::move(num)) {}
  CoeffScalar(MPoly num, MPoly den);

  static const CoeffScalar& e(int i);
  static CoeffScalar e1() { return e(1); }
  static CoeffScalar e2() { return e(2); }
  static CoeffScalar e3() { return e(3); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const;
  bool has_den() const { return !den_.is_zero(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return !has_den() && num_.is_one(); }
  bool is_rational() const { return !has_den() && num_.is_constant(); }
  Rational rational() const;

  CoeffScalar operator-() const;
  CoeffScalar& operator+=(const CoeffScalar& o);
  CoeffScalar& operator-=(const CoeffScalar& o);
  CoeffScalar& operator*=(const CoeffScalar& o);
  CoeffScalar& operator/=(const CoeffScalar& o);
  friend CoeffScalar operator+(CoeffScalar a, const CoeffScalar& b) { return a += b; }
  friend CoeffScalar operator-(CoeffScalar a, const CoeffScalar& b) { return a -= b; }
  friend CoeffScalar operator*(const CoeffScalar& a, const CoeffScalar& b);
  friend CoeffScalar operator/(CoeffScalar a, const CoeffScalar& b) { return a /= b; }
  bool operator==(const CoeffScalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  CoeffScalar inverse() const;
  CoeffScalar pow(int k) const;
  /// Substitutes (e₁,e₂,e₃) ↦ (e_{π(1)},e_{π(2)},e_{π(3)}).
  CoeffScalar permuted(const std::array<int, 3>& perm) const;
  std::string to_string() const;

 private:
  void normalize_den();
  MPoly num_;
  MPoly den_;  // zero means 1
};

inline bool is_zero(const CoeffScalar& c) { return c.is_zero(); }

CoeffScalar g2_of();
CoeffScalar g3_of();

NumericPoint numeric_from_nome(std::complex<double> p, int order = 8);
std::complex<double> instantiate(const CoeffScalar& c, const NumericPoint& pt);

}  // namespace heun
