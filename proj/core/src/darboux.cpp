#include "heun/darboux.hpp"

#include <bit>

namespace heun {

DiffOp build_L(const AlphaTuple& a) {
  a.require_nonnegative_d();
  const int n = a.d() + 1;
  // Φ̂∘((1/w)D)∘Φ̂⁻¹ = (1/w)D − ½Σαᵢ/(z−eᵢ)
  RatZ phi;
  for (int i = 1; i <= 3; ++i)
    if (a[i].twice) phi += RatZ::z_minus_e(i, -1) * CoeffScalar(Rational(a[i].twice, 4));
  const EllipticFn inv_w = EllipticFn::w().inverse();
  const DiffOp step({EllipticFn(-phi), inv_w});
  DiffOp t = step;
  for (int k = 1; k < n; ++k) t = compose(step, t);
  return EllipticFn::w().pow(n) * t;
}

DiffOp build_L_wronskian(const std::vector<EllipticFn>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n == 0) return DiffOp::identity();
  // rows[i][j] = j-th derivative of the i-th function
  std::vector<std::vector<EllipticFn>> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].push_back(basis[i]);
    for (int j = 1; j <= n; ++j) rows[i].push_back(differentiate(rows[i].back()));
  }
  // minor[S] = det of the first |S| rows restricted to the column set S
  const unsigned full = (1u << (n + 1)) - 1;
  std::vector<EllipticFn> minor(full + 1);
  minor[0] = EllipticFn(1);
  for (unsigned s = 1; s <= full; ++s) {
    const int r = std::popcount(s);
    if (r > n) continue;
    EllipticFn acc;
    int k = 0;
    for (int c = 0; c <= n; ++c) {
      if (!((s >> c) & 1u)) continue;
      const EllipticFn& sub = minor[s & ~(1u << c)];
      if (!sub.is_zero() && !rows[r - 1][c].is_zero()) {
        EllipticFn term = rows[r - 1][c] * sub;
        if ((r - 1 + k) % 2) acc -= term;
        else acc += term;
      }
      ++k;
    }
    minor[s] = std::move(acc);
  }
  const EllipticFn& w = minor[full & ~(1u << n)];
  if (w.is_zero()) fail(ErrorCode::singular_wronskian, "basis functions are linearly dependent");
  const EllipticFn w_inv = w.inverse();
  std::vector<EllipticFn> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    EllipticFn c = minor[full & ~(1u << k)] * w_inv;
    coeffs[k] = (n + k) % 2 ? -c : c;
  }
  return DiffOp(std::move(coeffs));
}

DiffOp tilde_L(const AlphaTuple& a) {
  const int h = a.half_sum();
  if (h <= 0) return build_L(a);
  if (h >= 2) return build_L(a.reflected());
  return DiffOp::identity();
}

Quad intertwine_target(const AlphaTuple& a) { return canonical(a.target()); }

DiffOp verify_intertwine(const ParamTuple& l, const AlphaTuple& a) {
  if (!a.admissible_for(l.l()))
    fail(ErrorCode::invalid_tuple, "alpha " + a.to_string() + " is not admissible for l " + l.to_string());
  const DiffOp L = build_L(a);
  const DiffOp lhs = compose(hamiltonian(intertwine_target(a)), L);
  const DiffOp rhs = compose(L, hamiltonian(l));
  return lhs - rhs;
}

}  // namespace heun
