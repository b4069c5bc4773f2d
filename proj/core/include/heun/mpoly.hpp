#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace heun {

using Rational = mpq_class;

/// Polynomial in e₁, e₂ over ℚ. Terms are sorted by descending
/// degree-lexicographic order (total degree, then the e₁ exponent).
class MPoly {
 public:
  struct Term {
    std::uint32_t key;
    Rational coeff;
    bool operator==(const Term& o) const { return key == o.key && coeff == o.coeff; }
  };

  MPoly() = default;
  MPoly(long c);
  MPoly(const Rational& c);
  static MPoly monomial(const Rational& c, unsigned a, unsigned b);
  static MPoly e1() { return monomial(1, 1, 0); }
  static MPoly e2() { return monomial(1, 0, 1); }
  static MPoly e3();

  static constexpr std::uint32_t pack(unsigned a, unsigned b) {
    return ((a + b) << 20) | (a << 10) | b;
  }
  static constexpr unsigned exp1(std::uint32_t key) { return (key >> 10) & 1023u; }
  static constexpr unsigned exp2(std::uint32_t key) { return key & 1023u; }
  static constexpr unsigned total(std::uint32_t key) { return key >> 20; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_homogeneous() const;
  Rational constant_term() const;
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(total(terms_.front().key)); }
  int degree1() const;
  int degree2() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly pow(unsigned k) const;
  /// Quotient when d divides this exactly; throws otherwise.
  MPoly divexact(const MPoly& d) const;
  bool divides_into(const MPoly& d, MPoly* quotient) const;

  /// Positive rational c with this/c primitive over ℤ.
  Rational content() const;
  MPoly substitute(const MPoly& v1, const MPoly& v2) const;
  std::complex<double> evaluate(std::complex<double> e1, std::complex<double> e2) const;
  /// Sum of |coeff|·|monomial| at the point, for relative pole tests.
  double magnitude(std::complex<double> e1, std::complex<double> e2) const;
  std::string to_string() const;
  std::size_t hash() const;

  static MPoly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

/// Primitive integral gcd with positive leading coefficient (0 if both zero).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace heun
