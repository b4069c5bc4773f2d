#pragma once

#include <optional>
#include <vector>

#include "heun/elliptic.hpp"
#include "heun/linalg.hpp"
#include "heun/params.hpp"

namespace heun {

/// Tridiagonal matrix of H on V_α in the basis v_r; column r holds the image of v_r.
struct TridiagMatrix {
  std::vector<CoeffScalar> diag;   // a_{r,r}
  std::vector<CoeffScalar> lower;  // a_{r+1,r}, r = 0..d−1
  std::vector<CoeffScalar> upper;  // a_{r−1,r}, r = 1..d (stored at index r−1)

  int size() const { return static_cast<int>(diag.size()); }
  Matrix dense() const;
  bool operator==(const TridiagMatrix&) const = default;
};

/// v_r = ∏(z−eᵢ)^{αᵢ/2}·(z−e₂)^r, r = 0..d.
std::vector<EllipticFn> basis_V(const AlphaTuple& a);
TridiagMatrix matrix_H(const AlphaTuple& a);
/// Same matrix obtained by applying H^{(owner(α))} to each v_r and re-expanding.
Matrix matrix_H_by_apply(const AlphaTuple& a);
EPolynomial char_poly(const AlphaTuple& a);

/// The α whose V realizes U_α (α or 1−α), or nullopt for U_α = {0}.
std::optional<AlphaTuple> U_source(const AlphaTuple& a);
std::vector<EllipticFn> U_space(const AlphaTuple& a);
int U_dim(const AlphaTuple& a);
/// Characteristic polynomial of H on U_α; 1 for the zero space.
EPolynomial U_char_poly(const AlphaTuple& a);

/// α-tuples whose U-spaces make up V (integer tuples) or the eight preserved
/// spaces of a half-integer tuple (empty when Σnᵢ is odd).
std::vector<AlphaTuple> decompose_V(const ParamTuple& l);
/// Σ dim U over decompose_V (integer tuples); dim of the maximal space for half-integer tuples.
int dim_V(const ParamTuple& l);
/// (dim V − 1)/2 for integer tuples.
int genus(const ParamTuple& l);
/// The closed genus formula evaluated on the sorted tuple; nullopt when it is not an integer.
std::optional<int> genus_formula(const ParamTuple& l);
EPolynomial P_of_E(const ParamTuple& l);

bool transpose_check(const AlphaTuple& a);
/// V_β ⊆ V_α.
bool subspace_inclusion(const AlphaTuple& a, const AlphaTuple& b);

/// Half-integer α = ±nᵢ + ½ from a sign pattern (+1 selects nᵢ + ½).
AlphaTuple alpha_from_signs(const std::array<int, 4>& n, const std::array<int, 4>& signs);

}  // namespace heun
