#pragma once

#include <vector>

#include "heun/diffop.hpp"
#include "heun/params.hpp"

namespace heun {

/// w^{d+1}·Φ̂ ∘ ((1/w) d/dx)^{d+1} ∘ Φ̂⁻¹ with Φ̂ = ∏(z−eᵢ)^{αᵢ/2}; monic of order d+1.
DiffOp build_L(const AlphaTuple& a);
/// Monic operator of order n annihilating n functions, from the Wronskian ratio.
DiffOp build_L_wronskian(const std::vector<EllipticFn>& basis);
/// L_α for Σα/2 ≤ 0, L_{1−α} for Σα/2 ≥ 2, identity otherwise.
DiffOp tilde_L(const AlphaTuple& a);
/// H^{(canonical(α+d))}∘L_α − L_α∘H^{(l)}; zero when the intertwining holds.
DiffOp verify_intertwine(const ParamTuple& l, const AlphaTuple& a);
/// The canonicalized target parameters α+d.
Quad intertwine_target(const AlphaTuple& a);

}  // namespace heun
