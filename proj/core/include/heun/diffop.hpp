#pragma once

#include <string>
#include <vector>

#include "heun/elliptic.hpp"

namespace heun {

/// Σ c_k(x)·(d/dx)^k with coefficients acting by left multiplication.
/// Coefficients are stored low to high; the zero operator has no coefficients.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<EllipticFn> coeffs);
  static DiffOp identity() { return multiplication(EllipticFn(1)); }
  static DiffOp d();
  static DiffOp multiplication(const EllipticFn& f);

  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == EllipticFn(1); }
  const std::vector<EllipticFn>& coeffs() const { return c_; }
  EllipticFn coeff(int k) const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const EllipticFn& f, const DiffOp& a);
  friend DiffOp operator*(const CoeffScalar& c, const DiffOp& a);
  bool operator==(const DiffOp& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<EllipticFn> c_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
EllipticFn apply(const DiffOp& op, const EllipticFn& f);
/// P(H) by Horner's scheme under composition.
DiffOp poly_of_operator(const EPolynomial& p, const DiffOp& h);
/// H = −d²/dx² + u(x).
DiffOp hamiltonian(const Quad& l);
inline DiffOp hamiltonian(const ParamTuple& l) { return hamiltonian(l.l()); }

}  // namespace heun
