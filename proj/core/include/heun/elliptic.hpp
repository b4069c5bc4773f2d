#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heun/params.hpp"
#include "heun/ratz.hpp"

namespace heun {

/// Fractional exponents of (z−e₁),(z−e₂),(z−e₃) in quarter units, each in 0..3.
/// Half powers {0,2}³ are the co-℘ twists; quarter powers arise only from
/// half-integer α in the quasi-solvable bases.
using Twist = std::array<std::uint8_t, 3>;

inline constexpr Twist kUntwisted{0, 0, 0};
inline constexpr Twist kOdd{2, 2, 2};  // the twist carried by w

struct ParityClass {
  int eps1 = 1;
  int eps3 = 1;
  bool operator==(const ParityClass&) const = default;
};

/// Σ_s R_s(z)·∏(z−eᵢ)^{s_i/4} with z = ℘(x) and w = ℘′(x) = 2·∏(z−eᵢ)^{1/2}.
class EllipticFn {
 public:
  struct Component {
    Twist twist;
    RatZ value;
    bool operator==(const Component& o) const { return twist == o.twist && value == o.value; }
  };

  EllipticFn() = default;
  EllipticFn(const RatZ& r);
  EllipticFn(const CoeffScalar& c) : EllipticFn(RatZ(c)) {}
  EllipticFn(long c) : EllipticFn(RatZ(c)) {}
  EllipticFn(const Twist& t, const RatZ& r);

  static EllipticFn z() { return EllipticFn(RatZ::z()); }
  static EllipticFn w();
  /// ∏(z−eᵢ)^{qᵢ/4} for arbitrary integers qᵢ.
  static EllipticFn power_product(const std::array<int, 3>& quarters);

  const std::vector<Component>& components() const { return comps_; }
  /// Component for a twist, or zero.
  RatZ component(const Twist& t) const;
  bool is_zero() const { return comps_.empty(); }
  bool is_untwisted() const;
  /// True when every component has twist (0,0,0) or (½,½,½).
  bool in_rank2_subfield() const;
  bool is_constant() const;
  CoeffScalar constant() const;

  EllipticFn operator-() const;
  EllipticFn& operator+=(const EllipticFn& o);
  EllipticFn& operator-=(const EllipticFn& o);
  friend EllipticFn operator+(EllipticFn a, const EllipticFn& b) { return a += b; }
  friend EllipticFn operator-(EllipticFn a, const EllipticFn& b) { return a -= b; }
  friend EllipticFn operator*(const EllipticFn& a, const EllipticFn& b);
  friend EllipticFn operator*(const EllipticFn& a, const CoeffScalar& c);
  friend EllipticFn operator*(const EllipticFn& a, const RatZ& r);
  bool operator==(const EllipticFn& o) const { return comps_ == o.comps_; }

  /// Inverse for single-component functions and for half-twist functions.
  EllipticFn inverse() const;
  EllipticFn pow(int k) const;
  std::string to_string() const;

 private:
  std::vector<Component> comps_;  // sorted by twist, nonzero values
};

EllipticFn differentiate(const EllipticFn& f);
EllipticFn differentiate(const EllipticFn& f, int times);
/// f(x+ωᵢ). Defined on the rank-2 subfield; other twists would need √(eᵢ−eⱼ)
/// and raise obstructed_shift.
EllipticFn shift_half_period(const EllipticFn& f, int i);
ParityClass parity_of(const EllipticFn& f);
ParityClass parity_of_twist(const Twist& t);
/// u(x) = Σ lᵢ(lᵢ+1)℘(x+ωᵢ).
EllipticFn potential(const Quad& l);
inline EllipticFn potential(const ParamTuple& l) { return potential(l.l()); }

/// ℘(x+ωᵢ) = eᵢ + (eᵢ−eⱼ)(eᵢ−e_k)/(z−eᵢ); i = 0 gives z.
RatZ shifted_p(int i);
/// (eᵢ−eⱼ)(eᵢ−e_k)
CoeffScalar half_period_residue(int i);

/// Values needed to evaluate an EllipticFn at a point: the eᵢ, z = ℘(x) and
/// branches τᵢ of (z−eᵢ)^{1/2} with 2τ₁τ₂τ₃ = ℘′(x).
struct PointValues {
  NumericPoint pt;
  std::complex<double> z;
  std::array<std::complex<double>, 3> tau;
};

std::complex<double> evaluate(const RatZ& r, const NumericPoint& pt, std::complex<double> z);
std::complex<double> evaluate(const EllipticFn& f, const PointValues& at);

}  // namespace heun
