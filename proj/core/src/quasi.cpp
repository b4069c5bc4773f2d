#include "heun/quasi.hpp"

#include <algorithm>

#include "heun/diffop.hpp"

namespace heun {

namespace {

CoeffScalar half(HalfInt h) {
  Rational q(h.twice, 2);
  q.canonicalize();
  return CoeffScalar(q);
}

CoeffScalar num(int r) { return CoeffScalar(static_cast<long>(r)); }

Rational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

Matrix TridiagMatrix::dense() const {
  const int n = size();
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = diag[r];
    if (r + 1 < n) {
      m(r + 1, r) = lower[r];
      m(r, r + 1) = upper[r];
    }
  }
  return m;
}

std::vector<EllipticFn> basis_V(const AlphaTuple& a) {
  a.require_nonnegative_d();
  const EllipticFn phi = EllipticFn::power_product({a[1].twice, a[2].twice, a[3].twice});
  std::vector<EllipticFn> out;
  for (int r = 0; r <= a.d(); ++r) out.push_back(phi * RatZ::z_minus_e(2, r));
  return out;
}

TridiagMatrix matrix_H(const AlphaTuple& a) {
  a.require_nonnegative_d();
  const int d = a.d();
  const CoeffScalar e1 = CoeffScalar::e1(), e2 = CoeffScalar::e2(), e3 = CoeffScalar::e3();
  const CoeffScalar a0 = half(a[0]), a1 = half(a[1]), a2 = half(a[2]), a3 = half(a[3]);
  const CoeffScalar two(2), four(4);
  const CoeffScalar g1 = (a0 + a1 + a2 + a3) / two;
  const CoeffScalar g2 = (-a0 + a1 + a2 + a3 + CoeffScalar(1)) / two;
  const CoeffScalar c23 = e2 - e3, c21 = e2 - e1;
  const CoeffScalar base = -four * e2 * g1 * g2 + e1 * (a2 + a3) * (a2 + a3) + e2 * (a1 + a3) * (a1 + a3) +
                           e3 * (a1 + a2) * (a1 + a2);
  TridiagMatrix m;
  for (int r = 0; r <= d; ++r) {
    const CoeffScalar R = num(r);
    m.diag.push_back(-four * R * (c23 * (R + a2 + a1) + c21 * (R + a2 + a3)) + base);
    if (r < d) m.lower.push_back(-four * (R + g1) * (R + g2));
    if (r > 0) m.upper.push_back(-four * R * (R + a2 - CoeffScalar(Rational(1, 2))) * c23 * c21);
  }
  return m;
}

Matrix matrix_H_by_apply(const AlphaTuple& a) {
  const std::vector<EllipticFn> v = basis_V(a);
  const DiffOp H = hamiltonian(a.owner());
  const EllipticFn phi_inv = v[0].inverse();
  const int n = static_cast<int>(v.size());
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    EllipticFn img = apply(H, v[r]) * phi_inv;
    if (!img.is_untwisted()) fail(ErrorCode::internal_inconsistency, "H does not preserve the twist of V");
    RatZ q = img.component(kUntwisted);
    if (!q.is_polynomial() || q.num().degree() >= n)
      fail(ErrorCode::internal_inconsistency, "H does not preserve V_alpha");
    const ZPoly t = q.num().shift(CoeffScalar::e2());
    for (int s = 0; s <= t.degree(); ++s) m(s, r) = t[s];
  }
  return m;
}

EPolynomial char_poly(const AlphaTuple& a) {
  const TridiagMatrix m = matrix_H(a);
  const EPolynomial E = EPolynomial::x();
  EPolynomial prev(CoeffScalar(1));
  EPolynomial cur = E - EPolynomial(m.diag[0]);
  for (int r = 1; r < m.size(); ++r) {
    EPolynomial next = (E - EPolynomial(m.diag[r])) * cur - prev * (m.lower[r - 1] * m.upper[r - 1]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::optional<AlphaTuple> U_source(const AlphaTuple& a) {
  const int h = a.half_sum();
  if (h <= 0) return a;
  if (h >= 2) return a.reflected();
  return std::nullopt;
}

std::vector<EllipticFn> U_space(const AlphaTuple& a) {
  auto s = U_source(a);
  return s ? basis_V(*s) : std::vector<EllipticFn>{};
}

int U_dim(const AlphaTuple& a) {
  auto s = U_source(a);
  return s ? s->d() + 1 : 0;
}

EPolynomial U_char_poly(const AlphaTuple& a) {
  auto s = U_source(a);
  return s ? char_poly(*s) : EPolynomial(CoeffScalar(1));
}

AlphaTuple alpha_from_signs(const std::array<int, 4>& n, const std::array<int, 4>& signs) {
  Quad q;
  for (int i = 0; i < 4; ++i) q[i] = HalfInt::from_twice(2 * signs[i] * n[i] + 1);
  return AlphaTuple(q);
}

std::vector<AlphaTuple> decompose_V(const ParamTuple& l) {
  std::vector<AlphaTuple> out;
  if (!l.is_integer()) {
    const auto n = l.n();
    if ((n[0] + n[1] + n[2] + n[3]) % 2) return out;
    static const std::array<std::array<int, 4>, 8> signs = {{{-1, -1, -1, -1},
                                                               {-1, -1, 1, 1},
                                                               {-1, 1, -1, 1},
                                                               {-1, 1, 1, -1},
                                                               {-1, -1, -1, 1},
                                                               {-1, -1, 1, -1},
                                                               {-1, 1, -1, -1},
                                                               {1, -1, -1, -1}}};
    for (const auto& s : signs) out.push_back(alpha_from_signs(n, s));
    return out;
  }
  const auto k = l.ints();
  auto make = [&](std::array<bool, 4> plus) {
    Quad q;
    for (int i = 0; i < 4; ++i) q[i] = plus[i] ? HalfInt(k[i] + 1) : HalfInt(-k[i]);
    return AlphaTuple(q);
  };
  if (k[0] == k[1] && k[1] == k[2] && k[2] == k[3]) {
    out.push_back(make({false, false, false, false}));
    return out;
  }
  if ((k[0] + k[1] + k[2] + k[3]) % 2 == 0) {
    out.push_back(make({false, false, false, false}));
    out.push_back(make({false, false, true, true}));
    out.push_back(make({false, true, false, true}));
    out.push_back(make({false, true, true, false}));
  } else {
    out.push_back(make({false, false, false, true}));
    out.push_back(make({false, false, true, false}));
    out.push_back(make({false, true, false, false}));
    out.push_back(make({true, false, false, false}));
  }
  return out;
}

int dim_V(const ParamTuple& l) {
  const auto alphas = decompose_V(l);
  if (!l.is_integer()) return alphas.empty() ? 0 : U_dim(alphas[0]);
  int total = 0;
  for (const auto& a : alphas) total += U_dim(a);
  return total;
}

int genus(const ParamTuple& l) {
  if (!l.is_integer()) fail(ErrorCode::precondition, "genus is defined for integer tuples only");
  const int dim = dim_V(l);
  if (dim % 2 == 0) fail(ErrorCode::internal_inconsistency, "dim V is even for " + l.to_string());
  return (dim - 1) / 2;
}

std::optional<int> genus_formula(const ParamTuple& l) {
  if (!l.is_integer()) return std::nullopt;
  auto k = l.ints();
  std::sort(k.begin(), k.end(), std::greater<>());
  const int s = k[0] + k[1] + k[2] + k[3];
  int twice_g;
  if (s % 2 == 0)
    twice_g = k[0] + k[3] >= k[1] + k[2] ? 2 * k[0] : k[0] + k[1] + k[2] - k[3];
  else
    twice_g = k[0] >= k[1] + k[2] + k[3] + 1 ? 2 * k[0] : s + 1;
  if (twice_g % 2) return std::nullopt;
  return twice_g / 2;
}

EPolynomial P_of_E(const ParamTuple& l) {
  const auto alphas = decompose_V(l);
  if (!l.is_integer()) {
    if (alphas.empty()) fail(ErrorCode::precondition, "no quasi-solvable space for odd Σn");
    return U_char_poly(alphas[0]);
  }
  EPolynomial p(CoeffScalar(1));
  for (const auto& a : alphas) p = p * U_char_poly(a);
  return p;
}

bool transpose_check(const AlphaTuple& a) {
  const AlphaTuple t = a.transposed();
  if (char_poly(a) != char_poly(t)) return false;
  const int d = a.d();
  const Matrix m = matrix_H(a).dense(), mt = matrix_H(t).dense();
  // Matrix of H on u_r = c_r·v_{d−r}, c_r = (−1)^r·C(d,r), must be the transpose of mt.
  auto c = [&](int r) { return CoeffScalar(r % 2 ? Rational(-binomial(d, r)) : binomial(d, r)); };
  for (int s = 0; s <= d; ++s)
    for (int r = 0; r <= d; ++r) {
      CoeffScalar n = m(d - s, d - r) * c(r) / c(s);
      if (!(n == mt(r, s))) return false;
    }
  return true;
}

bool subspace_inclusion(const AlphaTuple& a, const AlphaTuple& b) {
  if (a.d() < 0 || b.d() < 0) return false;
  const auto va = basis_V(a);
  for (const auto& f : basis_V(b))
    if (!in_span(va, f)) return false;
  return true;
}

}  // namespace heun
