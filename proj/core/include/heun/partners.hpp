#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heun/diffop.hpp"
#include "heun/params.hpp"

namespace heun {

/// lᵉ; requires an integer tuple with even sum. Not canonicalized.
Quad even_dual(const ParamTuple& l);
/// lᵒ; requires an integer tuple with odd sum. Not canonicalized.
Quad odd_dual(const ParamTuple& l);
/// The isomonodromic partner of the descending rearrangement of l, sorted descending.
ParamTuple canonical_partner(const ParamTuple& l);
/// Descending rearrangement.
ParamTuple sorted(const ParamTuple& l);
bool is_self_dual(const ParamTuple& l);

struct HalfIntegerDuals {
  std::array<int, 4> n1, n2;  // n^{(1)}, n^{(2)} before the regime flips
  int regime;                 // 1: n₀ ≥ n₁+n₂+n₃, 2: middle, 3: n₀ < n₁+n₂−n₃
  ParamTuple first, second;   // the two partners after the regime-specific flips
};
/// Input sorted descending internally; Σn must be even.
HalfIntegerDuals half_integer_duals(const std::array<int, 4>& n);

struct FamilyMember {
  Quad raw;                           // parameters as produced by the dual maps
  ParamTuple member;                  // canonicalized
  std::optional<AlphaTuple> witness;  // the L̃ index linking the source to this member
  int shift = 0;                      // half-period shift index for the shift members
  std::string describe() const;
};

struct PartnerFamily {
  ParamTuple source;
  std::vector<FamilyMember> members;
  bool self_dual = false;
  /// Set when no quasi-solvable space exists (half-integer tuples with odd Σn).
  std::optional<std::string> note;
};

PartnerFamily family(const ParamTuple& l);
/// H^{(member)}∘L̃ − L̃∘H^{(source)} for a Darboux witness.
DiffOp witness_residual(const ParamTuple& source, const FamilyMember& m);

}  // namespace heun
