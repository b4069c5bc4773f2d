#include <cmath>
#include <numbers>

#include "doctest.h"
#include "heun/numerics.hpp"
#include "heun/quasi.hpp"

using namespace heun;

namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;
AlphaTuple A(const char* s) { return AlphaTuple::parse(s); }
ParamTuple P(const char* s) { return ParamTuple::parse(s); }

}  // namespace

TEST_CASE("eigenvalues at instantiated periods") {
  const NumericPoint p0 = numeric_from_nome(0.0, 8);
  auto r = eigenvalues_at(A("0,0,0,0"), p0);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0]) < 1e-12);
  r = eigenvalues_at(A("-1,0,0,1"), p0);
  CHECK(std::abs(r[0] - pi2 / 3) < 1e-10 * pi2);
  r = eigenvalues_at(A("-2,0,0,0"), p0);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] + 2 * pi2) < 1e-9 * pi2);
  CHECK(std::abs(r[1] - 2 * pi2) < 1e-9 * pi2);
}

TEST_CASE("root-coefficient round trip") {
  const NumericPoint pt = numeric_from_nome({0.07, 0.02}, 10);
  for (const char* l : {"2,0,0,0", "3,1,1,0", "2,2,1,1", "4,1,0,0"}) {
    const EPolynomial p = P_of_E(P(l));
    auto roots = roots_at(p, pt);
    std::vector<std::complex<double>> c{1.0};
    for (auto z : roots) {
      std::vector<std::complex<double>> n(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        n[k + 1] += c[k];
        n[k] -= z * c[k];
      }
      c = n;
    }
    for (int k = 0; k <= p.degree(); ++k) {
      auto exact = instantiate(p[k], pt);
      CHECK(std::abs(c[k] - exact) <= 1e-8 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("distinctness reports") {
  CHECK(distinctness_report(P("2,0,0,0"), numeric_from_nome(0.05, 10)).distinct());
  auto trivial = distinctness_report(P("0,0,0,0"), numeric_from_nome(0.05, 10));
  CHECK(trivial.roots.size() == 1);
  CHECK(trivial.distinct());
  CHECK(!distinctness_report(P("2,0,0,0"), numeric_from_nome(0.0, 10)).distinct());
  CHECK(seeded_nomes(7, 3) == seeded_nomes(7, 3));
  for (double p : seeded_nomes(7, 3)) CHECK((p > 0 && p < 0.2));
}

TEST_CASE("perturbation oracle") {
  auto c = perturbation_oracle(A("0,0,0,0"), 0);
  CHECK(c.a0 == 0);
  CHECK(c.lower0 == 0);
  CHECK(perturbation_oracle(A("-2,0,0,0"), 0).a0 == -2);
  CHECK(perturbation_oracle(A("-2,1,1,0"), 0).a0 == -1);
  for (const char* a : {"-2,0,0,0", "-3,-1,1,1", "-4,-2,1,1", "-5/2,-1/2,-1/2,3/2"}) {
    CAPTURE(a);
    const AlphaTuple al = A(a);
    for (int r = 0; r <= al.d(); ++r) {
      const auto pc = perturbation_oracle(al, r);
      auto err = [&](double p) {
        const NumericPoint pt = numeric_from_nome(p, 12);
        const TridiagMatrix m = matrix_H(al);
        double e = std::abs(instantiate(m.diag[r], pt) / pi2 - (pc.a0.get_d() + pc.a1.get_d() * p));
        if (r > 0)
          e = std::max(e, std::abs(instantiate(m.upper[r - 1], pt) / (pi2 * pi2 * p) - pc.upper1.get_d()) * p);
        if (r < al.d()) CHECK(std::abs(instantiate(m.lower[r], pt) - pc.lower0.get_d()) < 1e-12);
        return e;
      };
      const double e1 = err(1e-3), e2 = err(5e-4);
      CHECK(e1 < 1e-2);  // second-order remainder, coefficient up to a few thousand
      if (e1 > 1e-11) CHECK(e1 / e2 >= 3.5);
    }
  }
}

TEST_CASE("separation classification") {
  CHECK_THROWS_AS(separation_discriminants(A("-4,-2,1,1"), 0, 1), Error);  // no collision
  CHECK_THROWS_AS(separation_discriminants(A("-1,-1,-1,-1"), 0, 1), Error);  // all equal
  // r + r' = −(α₂+α₃).
  auto s = separation_discriminants(A("-5,1,-2,0"), 0, 2);
  CHECK(s.kind == Separation::order_p);
  CHECK(s.discriminant == 2);
  s = separation_discriminants(A("-4,0,-2,0"), 0, 2);
  CHECK(s.kind == Separation::indeterminate);
  s = separation_discriminants(A("-3,0,-2,1"), 0, 1);
  CHECK(s.kind == Separation::order_sqrt_p);
  CHECK(s.discriminant == -1152);
  s = separation_discriminants(A("-1/2,-1/2,-3/2,1/2"), 0, 1);
  CHECK(s.kind == Separation::order_p);
}

TEST_CASE("rounding bounds separate near and true collisions") {
  const auto far = distinctness_report(P("2,0,0,0"), numeric_from_nome(0.05, 12));
  CHECK(far.resolved());
  CHECK(far.error_bounds.size() == far.roots.size());
  for (double b : far.error_bounds) CHECK(b < 1e-9);
  CHECK(!distinctness_report(P("2,0,0,0"), numeric_from_nome(0.0, 12)).resolved());
  // Distinct, but the gap sits below the relative threshold.
  const auto small = distinctness_report(P("4,2,0,0"), numeric_from_nome(0.023, 12));
  CHECK(!small.distinct());
  CHECK(small.resolved());
}
