#include "heun/spectral.hpp"

#include "heun/darboux.hpp"
#include "heun/linalg.hpp"
#include "heun/partners.hpp"
#include "heun/quasi.hpp"

namespace heun {

namespace {

using EFPoly = std::vector<EllipticFn>;  // polynomial in E with function coefficients, low to high

EFPoly mul(const EFPoly& a, const EFPoly& b) {
  if (a.empty() || b.empty()) return {};
  EFPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += a[i] * b[j];
  return out;
}

EFPoly add(EFPoly a, const EFPoly& b, const CoeffScalar& s = CoeffScalar(1)) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i] * s;
  return a;
}

EFPoly derive(const EFPoly& a) {
  EFPoly out;
  for (const auto& c : a) out.push_back(differentiate(c));
  return out;
}

EFPoly xi_poly(const XiFunction& xi) {
  EFPoly p(xi.g + 1);
  for (int j = 0; j <= xi.g; ++j) p[xi.g - j] = xi.a[j];
  return p;
}

// L(φ) = φ‴ − 4uφ′ − 2u′φ
EllipticFn product_operator(const EllipticFn& phi, const EllipticFn& u, const EllipticFn& du) {
  const EllipticFn d1 = differentiate(phi);
  return differentiate(d1, 2) - u * d1 * CoeffScalar(4) - du * phi * CoeffScalar(2);
}

Rational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

XiFunction compute_xi(const ParamTuple& l) {
  if (!l.is_integer()) fail(ErrorCode::precondition, "Xi is defined for integer tuples only");
  const auto k = l.ints();
  const int g = genus(l);
  const EllipticFn u = potential(l);
  const EllipticFn du = differentiate(u);

  // Ansatz basis for every a_j: 1, z^m (m ≤ l₀), (z−eᵢ)^{−m} (m ≤ lᵢ).
  struct Term {
    int slot, power;
  };
  std::vector<Term> terms{{0, 0}};
  std::vector<EllipticFn> phi{EllipticFn(1)};
  for (int m = 1; m <= k[0]; ++m) {
    terms.push_back({0, m});
    phi.push_back(EllipticFn(RatZ::z().pow(m)));
  }
  for (int i = 1; i <= 3; ++i)
    for (int m = 1; m <= k[i]; ++m) {
      terms.push_back({i, m});
      phi.push_back(EllipticFn(RatZ::z_minus_e(i, -m)));
    }
  const int nb = static_cast<int>(phi.size());
  std::vector<EllipticFn> Lphi, Dphi;
  for (const auto& f : phi) {
    Lphi.push_back(product_operator(f, u, du));
    Dphi.push_back(differentiate(f) * CoeffScalar(4));
  }

  // Unknowns: coefficients of a_1..a_g. Equation j (E^{g−j}): L(a_j) + 4a_{j+1}′ = 0.
  const int nu = g * nb;
  std::vector<std::vector<CoeffScalar>> rows;
  std::vector<CoeffScalar> rhs;
  for (int j = 0; j <= g; ++j) {
    std::vector<EllipticFn> cols(nu + 1);
    if (j >= 1)
      for (int t = 0; t < nb; ++t) cols[(j - 1) * nb + t] = Lphi[t];
    if (j + 1 <= g)
      for (int t = 0; t < nb; ++t) cols[j * nb + t] = Dphi[t];
    if (j == 0) cols[nu] = -Lphi[0];
    const Matrix m = coordinates(cols);
    for (int r = 0; r < m.rows(); ++r) {
      std::vector<CoeffScalar> row(nu);
      for (int c = 0; c < nu; ++c) row[c] = m(r, c);
      rows.push_back(std::move(row));
      rhs.push_back(m(r, nu));
    }
  }
  std::vector<CoeffScalar> sol;
  if (nu > 0) {
    Matrix m(static_cast<int>(rows.size()), nu);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < nu; ++c) m(static_cast<int>(r), c) = rows[r][c];
    auto x = solve_unique(m, rhs);
    if (!x) fail(ErrorCode::internal_inconsistency, "no doubly periodic Xi of degree g for " + l.to_string());
    sol = std::move(*x);
  } else {
    for (const auto& r : rhs)
      if (!r.is_zero()) fail(ErrorCode::internal_inconsistency, "constant Xi does not solve the product equation");
  }

  XiFunction xi;
  xi.l = l;
  xi.g = g;
  xi.a.push_back(EllipticFn(1));
  std::vector<CoeffScalar> c0(g + 1);
  c0[g] = CoeffScalar(1);
  std::array<std::vector<std::vector<CoeffScalar>>, 4> b;
  for (int i = 0; i < 4; ++i) b[i].assign(k[i], std::vector<CoeffScalar>(g + 1));
  for (int j = 1; j <= g; ++j) {
    EllipticFn aj;
    for (int t = 0; t < nb; ++t) {
      const CoeffScalar& c = sol[(j - 1) * nb + t];
      if (c.is_zero()) continue;
      aj += phi[t] * c;
      const int e_pow = g - j;
      const auto [slot, m] = terms[t];
      if (m == 0) {
        c0[e_pow] += c;
      } else if (slot == 0) {
        b[0][k[0] - m][e_pow] += c;
      } else {
        // (z−eᵢ)^{−m} = ((℘ᵢ − eᵢ)/cᵢ)^m
        const CoeffScalar ci = half_period_residue(slot).inverse().pow(m);
        const CoeffScalar ei = -CoeffScalar::e(slot);
        for (int p = 0; p <= m; ++p) {
          CoeffScalar term = c * ci * CoeffScalar(binomial(m, p)) * ei.pow(m - p);
          if (p == 0) c0[e_pow] += term;
          else b[slot][k[slot] - p][e_pow] += term;
        }
      }
    }
    xi.a.push_back(aj);
  }
  xi.c0 = EPolynomial(c0);
  for (int i = 0; i < 4; ++i)
    for (auto& v : b[i]) xi.b[i].push_back(EPolynomial(v));
  return xi;
}

EPolynomial compute_Q(const XiFunction& xi) {
  const EllipticFn u = potential(xi.l);
  const EFPoly X = xi_poly(xi);
  const EFPoly X1 = derive(X), X2 = derive(X1);
  const EFPoly e_minus_u{-u, EllipticFn(1)};
  EFPoly q = mul(mul(X, X), e_minus_u);
  q = add(q, mul(X, X2), CoeffScalar(Rational(1, 2)));
  q = add(q, mul(X1, X1), CoeffScalar(Rational(-1, 4)));
  std::vector<CoeffScalar> out;
  for (const auto& c : q) {
    if (!c.is_constant()) fail(ErrorCode::internal_inconsistency, "Q(E) depends on x");
    out.push_back(c.constant());
  }
  EPolynomial Q(out);
  if (Q.degree() != 2 * xi.g + 1 || !(Q.lead() == CoeffScalar(1)))
    fail(ErrorCode::internal_inconsistency, "Q(E) is not monic of degree 2g+1");
  return Q;
}

DiffOp operator_A(const XiFunction& xi) {
  const DiffOp H = hamiltonian(xi.l);
  DiffOp A;
  for (int j = 0; j <= xi.g; ++j) {
    DiffOp B({differentiate(xi.a[j]) * CoeffScalar(Rational(-1, 2)), xi.a[j]});
    A = j == 0 ? B : compose(A, H) + B;
  }
  return A;
}

DiffOp operator_A_tilde(const ParamTuple& l) {
  if (!l.is_integer()) fail(ErrorCode::precondition, "A-tilde is defined for integer tuples only");
  const Quad& q = l.l();
  const HalfInt one(1);
  auto T = [](HalfInt a0, HalfInt a1, HalfInt a2, HalfInt a3) { return tilde_L(AlphaTuple(Quad{a0, a1, a2, a3})); };
  DiffOp f1, f2, f3, f4;
  if (sum(q).twice / 2 % 2 == 0) {
    const Quad e = even_dual(l);
    f1 = T(-q[0], -q[1], -q[2], -q[3]);
    f2 = T(-e[0], -e[1], e[2] + one, e[3] + one);
    f3 = T(-q[1], q[0] + one, -q[3], q[2] + one);
    f4 = T(-e[3], e[2] + one, e[1] + one, -e[0]);
  } else {
    const Quad o = odd_dual(l);
    f1 = T(q[0] + one, -q[1], -q[2], -q[3]);
    f2 = T(-o[0], o[1] + one, -o[2], -o[3]);
    f3 = T(-q[1], -q[0], q[3] + one, -q[2]);
    f4 = T(o[2] + one, -o[3], -o[0], -o[1]);
  }
  return compose(f4, compose(f3, compose(f2, f1)));
}

bool xi_recursion_holds(const XiFunction& xi) {
  const EllipticFn u = potential(xi.l);
  const EllipticFn du = differentiate(u);
  for (int j = 0; j <= xi.g; ++j) {
    EllipticFn r = product_operator(xi.a[j], u, du);
    if (j + 1 <= xi.g) r += differentiate(xi.a[j + 1]) * CoeffScalar(4);
    if (!r.is_zero()) return false;
  }
  return true;
}

DiffOp lame_closed_form_A(int g, bool halved) {
  if (g < 1) fail(ErrorCode::precondition, "closed form needs g >= 1");
  const EllipticFn w = EllipticFn::w();
  const DiffOp step({EllipticFn(), w.inverse()});
  DiffOp t = DiffOp::multiplication(w.pow(g));
  for (int k = 0; k < 2 * g + 1; ++k) t = compose(step, t);
  DiffOp A = w.pow(g + 1) * t;
  CoeffScalar s(g % 2 ? -1 : 1);
  if (halved) s *= CoeffScalar(Rational(1, 2)).pow(2 * g + 1);
  return s * A;
}

RatZ duplication() {
  const CoeffScalar g2 = g2_of();
  const ZPoly dd(std::vector<CoeffScalar>{-g2 / CoeffScalar(2), 0, CoeffScalar(6)});  // ℘″ = 6z² − g₂/2
  return RatZ::z() * CoeffScalar(-2) + RatZ(dd * dd, RatZ::Poles{1, 1, 1}) * CoeffScalar(Rational(1, 16));
}

DiffOp transport_half_argument(const DiffOp& op) {
  const RatZ dup = duplication();
  const EllipticFn w2 = differentiate(EllipticFn(dup)) * CoeffScalar(Rational(1, 2));  // ℘′(2y)
  std::vector<EllipticFn> out;
  CoeffScalar scale(1);
  for (const auto& c : op.coeffs()) {
    if (!c.in_rank2_subfield()) fail(ErrorCode::unsupported, "transport needs coefficients in z and w");
    EllipticFn v = EllipticFn(c.component(kUntwisted).compose(dup));
    const RatZ odd = c.component(kOdd);
    if (!odd.is_zero()) v += w2 * odd.compose(dup) * CoeffScalar(Rational(1, 2));
    out.push_back(v * scale);
    scale *= CoeffScalar(Rational(1, 2));
  }
  return DiffOp(out);
}

bool FiniteGapReport::all_passed() const {
  for (const auto& [name, v] : checks)
    if (v && !*v) return false;
  return true;
}

FiniteGapReport verify_finite_gap(const ParamTuple& l, const WorkLimits& limits) {
  FiniteGapReport r;
  r.l = l;
  r.xi = compute_xi(l);
  r.g = r.xi.g;
  r.P = P_of_E(l);
  r.Q = compute_Q(r.xi);
  r.A = operator_A(r.xi);
  r.A_tilde = operator_A_tilde(l);
  const DiffOp H = hamiltonian(l);
  const CoeffScalar sign(r.g % 2 ? -1 : 1);

  r.checks["tilde_a"] = r.A_tilde == sign * r.A;
  r.checks["p_equals_q"] = r.P == r.Q;
  r.checks["recursion"] = xi_recursion_holds(r.xi);
  std::vector<EllipticFn> all;
  bool killed = true;
  for (const auto& a : decompose_V(l))
    for (const auto& v : U_space(a)) {
      all.push_back(v);
      killed = killed && apply(r.A_tilde, v).is_zero();
    }
  r.checks["kernel"] = killed && static_cast<int>(all.size()) == 2 * r.g + 1 && rank(all) == 2 * r.g + 1;
  if (r.g <= limits.max_g_commute) r.checks["commute"] = commutator(r.A_tilde, H).is_zero();
  else r.checks["commute"] = std::nullopt;
  if (r.g <= limits.max_g_square) {
    const DiffOp sq = compose(r.A, r.A);
    const DiffOp qh = poly_of_operator(r.Q, H);
    r.checks["a_squared"] = sq == -qh;
    r.a_squared_plus = sq == qh;
  } else {
    r.checks["a_squared"] = std::nullopt;
  }
  return r;
}

}  // namespace heun
