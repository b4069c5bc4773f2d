#include <random>

#include "doctest.h"
#include "heun/diffop.hpp"

using namespace heun;

namespace {

const CoeffScalar e1 = CoeffScalar::e1();
const CoeffScalar e3 = CoeffScalar::e3();

EllipticFn random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  RatZ r(ZPoly(std::vector<CoeffScalar>{CoeffScalar(c(rng)) * e1, CoeffScalar(c(rng))}), RatZ::Poles{c(rng) > 0, 0, 0});
  EllipticFn f(r);
  if (c(rng) > 0) f += EllipticFn::w() * CoeffScalar(c(rng));
  return f;
}

DiffOp random_op(std::mt19937& rng, int order) {
  std::vector<EllipticFn> cs;
  for (int k = 0; k <= order; ++k) cs.push_back(random_coeff(rng));
  cs.back() = EllipticFn(1);
  return DiffOp(cs);
}

}  // namespace

TEST_CASE("composition basics") {
  DiffOp D = DiffOp::d(), Z = DiffOp::multiplication(EllipticFn::z());
  CHECK(compose(D, Z) == DiffOp({EllipticFn::w(), EllipticFn::z()}));
  CHECK(compose(D, D) == DiffOp({EllipticFn(), EllipticFn(), EllipticFn(1)}));
  CHECK(commutator(D, Z) == DiffOp::multiplication(EllipticFn::w()));
  DiffOp H = hamiltonian(parse_quad("1,0,0,0"));
  CHECK(commutator(H, D) == DiffOp::multiplication(EllipticFn::w() * CoeffScalar(-2)));
  CHECK(commutator(H, H).is_zero());
  CHECK(compose(H, H).order() == 4);
}

TEST_CASE("application") {
  CHECK(apply(DiffOp::d(), EllipticFn::z()) == EllipticFn::w());
  CHECK(apply(hamiltonian(parse_quad("0,0,0,0")), EllipticFn(1)).is_zero());
  EllipticFn s(Twist{0, 0, 2}, RatZ(1));
  CHECK(apply(hamiltonian(parse_quad("1,0,0,0")), s) == s * (-e3));
  // All three co-p functions are Lamé eigenfunctions.
  for (int i = 1; i <= 3; ++i) {
    Twist t{0, 0, 0};
    t[i - 1] = 2;
    EllipticFn f(t, RatZ(1));
    CHECK(apply(hamiltonian(parse_quad("1,0,0,0")), f) == f * (-CoeffScalar::e(i)));
  }
}

TEST_CASE("polynomials in an operator") {
  DiffOp H = hamiltonian(parse_quad("2,0,0,0"));
  CHECK(poly_of_operator(EPolynomial::x(), H) == H);
  EPolynomial p(std::vector<CoeffScalar>{-CoeffScalar(3) * g2_of(), 0, 1});
  CHECK(poly_of_operator(p, H) == compose(H, H) - (CoeffScalar(3) * g2_of()) * DiffOp::identity());
}

TEST_CASE("algebraic laws on random operators") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    DiffOp a = random_op(rng, 1), b = random_op(rng, 2), c = random_op(rng, 1);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, b).order() == 3);
    CHECK((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)))
              .is_zero());
    EllipticFn f = random_coeff(rng) * EllipticFn(Twist{2, 0, 0}, RatZ(1));
    CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));
  }
}
