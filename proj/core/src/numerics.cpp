#include "heun/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>
#include <random>

#include "heun/quasi.hpp"

namespace heun {

namespace {

using cd = std::complex<double>;

Rational q(HalfInt h) {
  Rational v(h.twice, 2);
  v.canonicalize();
  return v;
}

double min_pairwise(const std::vector<cd>& r) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}

}  // namespace

std::vector<cd> roots_at(const EPolynomial& p, const NumericPoint& pt) {
  // Pairwise coincidences (the trigonometric limit p = 0) are allowed; they are what
  // the distinctness report is meant to flag.
  pt.validate();
  if (pt.scale() == 0.0) fail(ErrorCode::degenerate_point, "all half-period values vanish");
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<cd> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = instantiate(p[k], pt);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  std::vector<cd> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  // Newton polishing against the original coefficients.
  for (auto& z : roots)
    for (int it = 0; it < 3; ++it) {
      cd f = 0, df = 0;
      for (int k = n; k >= 0; --k) {
        df = df * z + f;
        f = f * z + c[k];
      }
      if (std::abs(df) == 0.0) break;
      z -= f / df;
    }
  std::sort(roots.begin(), roots.end(), [](cd a, cd b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return roots;
}

std::vector<double> root_error_bounds(const EPolynomial& p, const NumericPoint& pt, const std::vector<cd>& roots) {
  // Generous multiple of the unit roundoff: instantiation evaluates each coefficient
  // as a sum of monomials, each a handful of roundings away from exact.
  constexpr double kappa = 256 * std::numeric_limits<double>::epsilon();
  const int n = p.degree();
  std::vector<cd> c(n + 1);
  std::vector<double> mag(n + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = instantiate(p[k], pt);
    mag[k] = std::abs(c[k]);
  }
  std::vector<double> out;
  for (const cd& z : roots) {
    cd df = 0, f = 0;
    double size = 0;
    const double az = std::abs(z);
    for (int k = n; k >= 0; --k) {
      df = df * z + f;
      f = f * z + c[k];
      size = size * az + mag[k];
    }
    out.push_back(std::abs(df) == 0.0 ? std::numeric_limits<double>::infinity() : kappa * size / std::abs(df));
  }
  return out;
}

bool DistinctnessReport::resolved() const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!(std::abs(roots[i] - roots[j]) > 2 * (error_bounds[i] + error_bounds[j]))) return false;
  return true;
}

std::vector<cd> eigenvalues_at(const AlphaTuple& a, const NumericPoint& pt) {
  if (a.d() == 0) return {instantiate(matrix_H(a).diag[0], pt)};
  return roots_at(char_poly(a), pt);
}

DistinctnessReport distinctness_report(const ParamTuple& l, const NumericPoint& pt) {
  if (!l.is_integer()) fail(ErrorCode::precondition, "distinctness report needs an integer tuple");
  DistinctnessReport rep;
  rep.l = l;
  for (const auto& a : decompose_V(l)) {
    auto s = U_source(a);
    if (!s) continue;
    auto r = eigenvalues_at(*s, pt);
    if (s->d() == 0) {
      rep.error_bounds.push_back(256 * std::numeric_limits<double>::epsilon() * std::abs(r[0]));
    } else {
      const auto b = root_error_bounds(char_poly(*s), pt, r);
      rep.error_bounds.insert(rep.error_bounds.end(), b.begin(), b.end());
    }
    rep.spaces.push_back({a, r, r.size() > 1 ? min_pairwise(r) : std::numeric_limits<double>::infinity()});
    rep.roots.insert(rep.roots.end(), r.begin(), r.end());
  }
  rep.min_separation = rep.roots.size() > 1 ? min_pairwise(rep.roots) : std::numeric_limits<double>::infinity();
  for (const auto& x : rep.roots)
    for (const auto& y : rep.roots) rep.spread = std::max(rep.spread, std::abs(x - y));
  return rep;
}

std::vector<double> seeded_nomes(std::uint64_t seed, int count, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    // Drawn from the raw 64-bit stream so the values do not depend on the library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out.push_back(lo + (hi - lo) * (u == 0.0 ? 0.5 : u));
  }
  return out;
}

PerturbationCoeffs perturbation_oracle(const AlphaTuple& a, int r) {
  a.require_nonnegative_d();
  if (r < 0 || r > a.d()) fail(ErrorCode::precondition, "row index out of range");
  const Rational a0 = q(a[0]), a1 = q(a[1]), a2 = q(a[2]), a3 = q(a[3]);
  const Rational g1 = (a0 + a1 + a2 + a3) / 2, g2 = (-a0 + a1 + a2 + a3 + 1) / 2;
  const Quad l = a.owner();
  Rational casimir = 0;
  for (const auto& li : l) casimir += q(li) * (q(li) + 1);
  const Rational R = r;
  PerturbationCoeffs c;
  c.r = r;
  c.a0 = (2 * R + a2 + a3) * (2 * R + a2 + a3) - casimir / 3;
  c.a1 = -8 * (R * (12 * R + 8 * a1 + 12 * a2 + 4 * a3) + 4 * g1 * g2 - (a1 + a3) * (a1 + a3) + (a1 + a2) * (a1 + a2));
  c.lower0 = -4 * (R + g1) * (R + g2);
  c.upper1 = 64 * R * (R + a2 - Rational(1, 2));
  for (Rational* v : {&c.a0, &c.a1, &c.lower0, &c.upper1}) v->canonicalize();
  return c;
}

std::string to_string(Separation s) {
  switch (s) {
    case Separation::order_p: return "separates at order p";
    case Separation::order_sqrt_p: return "separates at order sqrt(p)";
    case Separation::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

SeparationClass separation_discriminants(const AlphaTuple& a, int r, int r2) {
  if (a[0] == a[1] && a[1] == a[2] && a[2] == a[3])
    fail(ErrorCode::precondition, "all alpha equal: outside the separation hypothesis");
  if (!(r < r2) || r2 > a.d() || r < 0) fail(ErrorCode::precondition, "need 0 <= r < r' <= d");
  if (perturbation_oracle(a, r).a0 != perturbation_oracle(a, r2).a0)
    fail(ErrorCode::precondition, "no collision of the p = 0 eigenvalues");
  const Rational a0 = q(a[0]), a1 = q(a[1]), a2 = q(a[2]), a3 = q(a[3]);
  SeparationClass out{Separation::indeterminate, 0};
  if (r + 1 < r2) {
    out.discriminant = (a3 - a1) * (2 * Rational(r) + a2 + a3);
    if (sgn(out.discriminant) != 0) out.kind = Separation::order_p;
  } else if (a0 != a1) {
    out.discriminant = -16 * (a0 - a1) * (a2 - a3) * (a0 + a1 - 1) * (a2 + a3 - 1);
    if (sgn(out.discriminant) != 0) out.kind = Separation::order_sqrt_p;
  } else {
    out.discriminant = (a2 - a3) * (a2 + a3 - 1) * (2 * a0 - 1);
    if (sgn(out.discriminant) != 0) out.kind = Separation::order_p;
  }
  out.discriminant.canonicalize();
  return out;
}

}  // namespace heun
