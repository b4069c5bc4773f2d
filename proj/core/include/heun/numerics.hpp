#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heun/params.hpp"
#include "heun/poly.hpp"

namespace heun {

std::vector<std::complex<double>> roots_at(const EPolynomial& p, const NumericPoint& pt);
/// First-order bound on the displacement of each root caused by rounding the
/// instantiated coefficients: κ·ε·Σ|c_k||z|^k / |p′(z)|. Infinite at multiple roots.
std::vector<double> root_error_bounds(const EPolynomial& p, const NumericPoint& pt,
                                      const std::vector<std::complex<double>>& roots);
std::vector<std::complex<double>> eigenvalues_at(const AlphaTuple& a, const NumericPoint& pt);

struct SpaceSeparation {
  AlphaTuple alpha;
  std::vector<std::complex<double>> roots;
  double min_separation;
};


struct DistinctnessReport {
  ParamTuple l;
  std::vector<SpaceSeparation> spaces;
  std::vector<std::complex<double>> roots;  // roots of P(E)
  std::vector<double> error_bounds;         // aligned with roots
  double min_separation = 0;
  double spread = 0;
  double threshold = 1e-6;
  bool distinct() const { return roots.size() <= 1 || min_separation >= threshold * spread; }
  /// Every pair of roots lies further apart than twice the sum of their error bounds.
  bool resolved() const;
};

DistinctnessReport distinctness_report(const ParamTuple& l, const NumericPoint& pt);
/// Nomes drawn uniformly from (lo, hi) with a fixed seed.
std::vector<double> seeded_nomes(std::uint64_t seed, int count, double lo = 0.0, double hi = 0.2);

/// First-order nome expansion of the tridiagonal entries, in units of π² (diagonal),
/// π⁴ (a_{r−1,r}/p) and 1 (a_{r+1,r}).
struct PerturbationCoeffs {
  int r;
  Rational a0;          // ã⁽⁰⁾_{r,r}
  Rational a1;          // ã⁽¹⁾_{r,r}
  Rational lower0;      // ã⁽⁰⁾_{r+1,r}
  Rational upper1;      // ã⁽¹⁾_{r−1,r}
};

PerturbationCoeffs perturbation_oracle(const AlphaTuple& a, int r);

enum class Separation { order_p, order_sqrt_p, indeterminate };
std::string to_string(Separation s);

struct SeparationClass {
  Separation kind;
  /// The quantity whose nonvanishing decides the case.
  Rational discriminant;
};

SeparationClass separation_discriminants(const AlphaTuple& a, int r, int r2);

}  // namespace heun
