#include <complex>
#include <random>

#include "doctest.h"
#include "heun/elliptic.hpp"
#include "heun/error.hpp"
#include "weierstrass_oracle.hpp"

using namespace heun;

namespace {

const CoeffScalar e1 = CoeffScalar::e1();
const CoeffScalar e2 = CoeffScalar::e2();
const CoeffScalar e3 = CoeffScalar::e3();

EllipticFn sqrt_ze(int i) {
  Twist t{0, 0, 0};
  t[i - 1] = 2;
  return EllipticFn(t, RatZ(1));
}

EllipticFn random_fn(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), tw(0, 1), pole(0, 1);
  EllipticFn f;
  for (int k = 0; k < 3; ++k) {
    Twist t{static_cast<std::uint8_t>(2 * tw(rng)), static_cast<std::uint8_t>(2 * tw(rng)),
            static_cast<std::uint8_t>(2 * tw(rng))};
    ZPoly num(std::vector<CoeffScalar>{CoeffScalar(c(rng)) * e1 + CoeffScalar(c(rng)), CoeffScalar(c(rng)),
                                       CoeffScalar(c(rng)) * e2});
    RatZ r(num, RatZ::Poles{pole(rng), 0, pole(rng)});
    f += EllipticFn(t, r);
  }
  return f;
}

struct Sample {
  oracle::Lattice lat;
  NumericPoint pt;
  explicit Sample(std::complex<double> tau) : lat(tau) {
    auto e = oracle::half_period_values(lat);
    pt = NumericPoint::from_e(e[0], e[1]);
  }
  PointValues at(std::complex<double> x) const {
    return {pt, oracle::wp(lat, x),
            {-oracle::co_wp(lat, 1, x), -oracle::co_wp(lat, 2, x), -oracle::co_wp(lat, 3, x)}};
  }
};

}  // namespace

TEST_CASE("differentiation of the basic functions") {
  CHECK(differentiate(EllipticFn::z()) == EllipticFn::w());
  EllipticFn dw = differentiate(EllipticFn::w());
  RatZ expected = RatZ(ZPoly(std::vector<CoeffScalar>{-g2_of() / CoeffScalar(2), 0, 6}));
  CHECK(dw == EllipticFn(expected));
  EllipticFn s = sqrt_ze(1);
  EllipticFn ds = differentiate(s);
  CHECK(ds == EllipticFn::w() * RatZ::z_minus_e(1, -1) * CoeffScalar(Rational(1, 2)) * s);
  CHECK(EllipticFn::w() * EllipticFn::w() ==
        EllipticFn(RatZ(z_minus_e_poly(1) * z_minus_e_poly(2) * z_minus_e_poly(3)) * CoeffScalar(4)));
}

TEST_CASE("Leibniz rule and parity preservation on random functions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    EllipticFn f = random_fn(rng), g = random_fn(rng);
    CHECK(differentiate(f * g) == differentiate(f) * g + f * differentiate(g));
    EllipticFn single(f.components()[0].twist, f.components()[0].value);
    CHECK(parity_of(differentiate(single)) == parity_of(single));
  }
}

TEST_CASE("half-period shifts") {
  RatZ expected = RatZ(e1) + RatZ(ZPoly((e1 - e2) * (e1 - e3)), RatZ::Poles{1, 0, 0});
  CHECK(shift_half_period(EllipticFn::z(), 1) == EllipticFn(expected));
  for (int i = 1; i <= 3; ++i) {
    CHECK(shift_half_period(EllipticFn(1), i) == EllipticFn(1));
    CHECK(shift_half_period(shift_half_period(EllipticFn::z(), i), i) == EllipticFn::z());
    CHECK(shift_half_period(shift_half_period(EllipticFn::w(), i), i) == EllipticFn::w());
    // Shifting commutes with d/dx.
    EllipticFn f = EllipticFn::z() * EllipticFn::w() + EllipticFn(RatZ::z_minus_e(2, -1));
    CHECK(differentiate(shift_half_period(f, i)) == shift_half_period(differentiate(f), i));
  }
  CHECK_THROWS_AS(shift_half_period(sqrt_ze(1), 2), Error);
}

TEST_CASE("parity classes") {
  CHECK(parity_of(EllipticFn::z()) == ParityClass{1, 1});
  CHECK(parity_of(EllipticFn::w()) == ParityClass{1, 1});
  CHECK(parity_of(sqrt_ze(1) * sqrt_ze(2)) == ParityClass{-1, 1});
  CHECK(parity_of(sqrt_ze(1)) == ParityClass{1, -1});
  CHECK(parity_of(sqrt_ze(3)) == ParityClass{-1, 1});
  try {
    parity_of(sqrt_ze(1) + EllipticFn::z());
    FAIL("expected mixed parity");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::mixed_parity);
  }
}

TEST_CASE("potentials") {
  CHECK(potential(parse_quad("1,0,0,0")) == EllipticFn::z() * CoeffScalar(2));
  CHECK(potential(parse_quad("0,0,0,0")).is_zero());
  RatZ expected = RatZ::z() * CoeffScalar(2) +
                  (RatZ(e1) + RatZ(ZPoly((e1 - e2) * (e1 - e3)), RatZ::Poles{1, 0, 0})) * CoeffScalar(2) +
                  (RatZ(e2) + RatZ(ZPoly((e2 - e1) * (e2 - e3)), RatZ::Poles{0, 1, 0})) * CoeffScalar(2);
  CHECK(potential(parse_quad("1,1,1,0")) == EllipticFn(expected));
  // l = −½ contributes l(l+1) = −¼.
  CHECK(potential(parse_quad("1/2,0,0,0")) == EllipticFn::z() * CoeffScalar(Rational(3, 4)));
}

TEST_CASE("inverse") {
  EllipticFn f = EllipticFn::z() + EllipticFn::w();
  CHECK(f * f.inverse() == EllipticFn(1));
  EllipticFn g = sqrt_ze(2) * EllipticFn::z() + sqrt_ze(2) * sqrt_ze(3) * sqrt_ze(1);
  CHECK(g * g.inverse() == EllipticFn(1));
}

TEST_CASE("oracle self-consistency") {
  Sample s({0.1, 1.1});
  auto e = oracle::half_period_values(s.lat);
  CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-9 * std::abs(e[0]));
  const std::complex<double> x(0.23, 0.17);
  PointValues v = s.at(x);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(v.tau[i] * v.tau[i] - (v.z - e[i])) < 1e-9 * std::abs(v.z));
  CHECK(std::abs(2.0 * v.tau[0] * v.tau[1] * v.tau[2] - oracle::wp_prime(s.lat, x)) <
        1e-8 * std::abs(oracle::wp_prime(s.lat, x)));
  // Library nome expansion against the oracle half-period values.
  NumericPoint lib = numeric_from_nome(s.lat.p, 8);
  CHECK(std::abs(lib.e1 - e[0]) < 1e-9 * std::abs(e[0]));
  CHECK(std::abs(lib.e2 - e[1]) < 1e-9 * std::abs(e[0]));
  CHECK(std::abs(lib.e3 - e[2]) < 1e-9 * std::abs(e[0]));
}

TEST_CASE("numeric derivative agrees with finite differences") {
  std::mt19937 rng(5);
  for (auto tau : {std::complex<double>(0, 1.0), std::complex<double>(0.3, 0.9)}) {
    Sample s(tau);
    for (int trial = 0; trial < 6; ++trial) {
      EllipticFn f = random_fn(rng);
      EllipticFn df = differentiate(f);
      std::complex<double> x(0.11 + 0.05 * trial, 0.13);
      const double h = 1e-3;
      auto F = [&](double t) { return evaluate(f, s.at(x + t)); };
      auto fd = (8.0 * (F(h) - F(-h)) - (F(2 * h) - F(-2 * h))) / (12 * h);
      auto exact = evaluate(df, s.at(x));
      CHECK(std::abs(fd - exact) < 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("numeric parity of co-p products") {
  Sample s({0.0, 1.2});
  EllipticFn f = sqrt_ze(1) * sqrt_ze(2);
  const std::complex<double> x(0.21, 0.08);
  auto v0 = evaluate(f, s.at(x));
  auto v1 = evaluate(f, s.at(x + 1.0));           // x + 2ω₁
  auto v3 = evaluate(f, s.at(x + s.lat.tau));     // x + 2ω₃
  CHECK(std::abs(v1 + v0) < 1e-8 * std::abs(v0));
  CHECK(std::abs(v3 - v0) < 1e-8 * std::abs(v0));
}

TEST_CASE("numeric half-period shift") {
  Sample s({0.0, 1.0});
  const std::complex<double> x(0.19, 0.07);
  const std::complex<double> omega[3] = {0.5, 0.5 + s.lat.tau / 2.0, s.lat.tau / 2.0};
  EllipticFn f = EllipticFn::z() * EllipticFn::z() + EllipticFn::w() * EllipticFn::z();
  for (int i = 1; i <= 3; ++i) {
    auto shifted = evaluate(shift_half_period(f, i), s.at(x));
    auto direct = evaluate(f, s.at(x + omega[i - 1]));
    CHECK(std::abs(shifted - direct) < 1e-7 * std::abs(direct));
  }
}

TEST_CASE("text rendering") {
  CHECK(EllipticFn::w().to_string() == "(2) * sqrt(z-e1)^{1} * sqrt(z-e2)^{1} * sqrt(z-e3)^{1}");
}
