#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heun/diffop.hpp"
#include "heun/params.hpp"

namespace heun {

/// Ξ(x,E) = Σ_j a_j(x)·E^{g−j} with a₀ = 1, the doubly periodic solution of the
/// third-order product equation.
struct XiFunction {
  ParamTuple l;
  int g = 0;
  std::vector<EllipticFn> a;  // a_0..a_g, each rational in z
  /// Ξ = c0(E) + Σᵢ Σⱼ b[i][j](E)·℘(x+ωᵢ)^{lᵢ−j}, j = 0..lᵢ−1.
  EPolynomial c0;
  std::array<std::vector<EPolynomial>, 4> b;
};

XiFunction compute_xi(const ParamTuple& l);
/// Ξ²(E−u) + ½ΞΞ″ − ¼Ξ′², checked to be independent of x.
EPolynomial compute_Q(const XiFunction& xi);
/// Σ_j (a_j d/dx − ½a_j′)·H^{g−j}.
DiffOp operator_A(const XiFunction& xi);
/// The composition of four L̃ factors through the dual operators.
DiffOp operator_A_tilde(const ParamTuple& l);
/// a_j‴ − 4u a_j′ + 4a_{j+1}′ − 2u′a_j = 0 for j = 0..g with a_{g+1} = 0.
bool xi_recursion_holds(const XiFunction& xi);

/// (−1)^g w^{g+1}∘((1/w)d/dx)^{2g+1}∘w^g. With halved set, the same operator in the
/// variable y = x/2, i.e. with d/dx = ½ d/dy; it is compared against operators in x
/// through transport_half_argument.
DiffOp lame_closed_form_A(int g, bool halved);
/// Rewrites an operator with coefficients in ℘(x), ℘′(x) in the variable y = x/2
/// using the duplication formula ℘(2y) = −2℘(y) + ℘″(y)²/(4℘′(y)²).
DiffOp transport_half_argument(const DiffOp& op);
/// ℘(2y) as a rational function of z = ℘(y).
RatZ duplication();

struct WorkLimits {
  int max_g_square = 2;
  int max_g_commute = 3;
};

struct FiniteGapReport {
  ParamTuple l;
  int g = 0;
  XiFunction xi;
  EPolynomial P, Q;
  DiffOp A, A_tilde;
  /// commute, tilde_a, kernel, p_equals_q, a_squared, recursion; nullopt when skipped.
  std::map<std::string, std::optional<bool>> checks;
  /// A² = +Q(H) as literally stated; recorded for comparison with the a_squared check.
  std::optional<bool> a_squared_plus;
  bool all_passed() const;
};

FiniteGapReport verify_finite_gap(const ParamTuple& l, const WorkLimits& limits = {});

}  // namespace heun
