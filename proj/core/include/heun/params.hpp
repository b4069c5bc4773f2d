#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "heun/error.hpp"

namespace heun {

/// Element of ½ℤ stored as twice its value.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice(2 * v) {}
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  static HalfInt parse(const std::string& text);

  constexpr bool is_integer() const { return twice % 2 == 0; }
  int to_int() const;
  double to_double() const { return twice / 2.0; }
  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_twice(-twice); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice + o.twice); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice - o.twice); }
  constexpr auto operator<=>(const HalfInt&) const = default;
};

/// l ↦ max(l, −l−1); l(l+1) is invariant.
constexpr HalfInt canonical(HalfInt l) {
  HalfInt other = -l - HalfInt(1);
  return l < other ? other : l;
}

using Quad = std::array<HalfInt, 4>;

Quad parse_quad(const std::string& text);
std::string to_string(const Quad& q);
Quad canonical(const Quad& q);
HalfInt sum(const Quad& q);

enum class Parity { integer, half_integer };

/// Canonical parameter tuple (l₀,l₁,l₂,l₃) with a uniform parity class.
class ParamTuple {
 public:
  ParamTuple() : l_{}, parity_(Parity::integer) {}
  explicit ParamTuple(const Quad& l);
  static ParamTuple parse(const std::string& text) { return ParamTuple(parse_quad(text)); }
  /// Half-integer tuple l = n − ½.
  static ParamTuple from_n(const std::array<int, 4>& n);

  const Quad& l() const { return l_; }
  HalfInt operator[](int i) const { return l_[i]; }
  Parity parity() const { return parity_; }
  bool is_integer() const { return parity_ == Parity::integer; }
  /// nᵢ = lᵢ + ½ (half-integer tuples only).
  std::array<int, 4> n() const;
  std::array<int, 4> ints() const;
  HalfInt sum() const { return heun::sum(l_); }
  std::string to_string() const { return heun::to_string(l_); }

  bool operator==(const ParamTuple& o) const { return l_ == o.l_; }
  auto operator<=>(const ParamTuple& o) const { return l_ <=> o.l_; }

 private:
  Quad l_;
  Parity parity_;
};

/// (α₀,α₁,α₂,α₃) with d = −Σαᵢ/2 required to be an integer.
class AlphaTuple {
 public:
  explicit AlphaTuple(const Quad& a);
  static AlphaTuple parse(const std::string& text) { return AlphaTuple(parse_quad(text)); }

  const Quad& a() const { return a_; }
  HalfInt operator[](int i) const { return a_[i]; }
  int d() const { return d_; }
  /// Σαᵢ/2 = −d.
  int half_sum() const { return -d_; }
  /// Canonical l for which this α is admissible: l(l+1) = α(α−1).
  Quad owner() const;
  bool admissible_for(const Quad& l) const;
  AlphaTuple reflected() const;  // 1 − α
  AlphaTuple transposed() const; // −α − d
  /// αᵢ + d, the raw target parameters of the intertwining relation.
  Quad target() const;
  std::string to_string() const { return heun::to_string(a_); }
  void require_nonnegative_d() const;

  bool operator==(const AlphaTuple& o) const { return a_ == o.a_; }
  auto operator<=>(const AlphaTuple& o) const { return a_ <=> o.a_; }

 private:
  Quad a_;
  int d_;
};

}  // namespace heun
