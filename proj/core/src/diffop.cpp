#include "heun/diffop.hpp"

#include <gmpxx.h>

namespace heun {

DiffOp::DiffOp(std::vector<EllipticFn> coeffs) : c_(std::move(coeffs)) { trim(); }

DiffOp DiffOp::d() { return DiffOp({EllipticFn(), EllipticFn(1)}); }

DiffOp DiffOp::multiplication(const EllipticFn& f) { return DiffOp({f}); }

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

EllipticFn DiffOp::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : EllipticFn();
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

DiffOp operator*(const EllipticFn& f, const DiffOp& a) {
  DiffOp r;
  r.c_.reserve(a.c_.size());
  for (const auto& c : a.c_) r.c_.push_back(f * c);
  r.trim();
  return r;
}

DiffOp operator*(const CoeffScalar& s, const DiffOp& a) {
  DiffOp r;
  if (s.is_zero()) return r;
  r.c_.reserve(a.c_.size());
  for (const auto& c : a.c_) r.c_.push_back(c * s);
  return r;
}

std::string DiffOp::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = order(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + c_[k].to_string() + "]";
    if (k == 1) out += " D";
    if (k > 1) out += " D^" + std::to_string(k);
  }
  return out;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int na = a.order(), nb = b.order();
  // derivs[j][m] = m-th derivative of b_j
  std::vector<std::vector<EllipticFn>> derivs(nb + 1);
  for (int j = 0; j <= nb; ++j) {
    derivs[j].push_back(b.coeffs()[j]);
    for (int m = 1; m <= na; ++m) derivs[j].push_back(differentiate(derivs[j].back()));
  }
  std::vector<EllipticFn> out(na + nb + 1);
  for (int i = 0; i <= na; ++i) {
    const EllipticFn& ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    mpz_class binom = 1;
    for (int m = 0; m <= i; ++m) {
      if (m > 0) binom = binom * (i - m + 1) / m;
      for (int j = 0; j <= nb; ++j) {
        const EllipticFn& dj = derivs[j][m];
        if (dj.is_zero()) continue;
        out[i - m + j] += (ai * dj) * CoeffScalar(Rational(binom));
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

EllipticFn apply(const DiffOp& op, const EllipticFn& f) {
  EllipticFn out, g = f;
  for (int k = 0; k <= op.order(); ++k) {
    if (k > 0) g = differentiate(g);
    if (!op.coeffs()[k].is_zero()) out += op.coeffs()[k] * g;
  }
  return out;
}

DiffOp poly_of_operator(const EPolynomial& p, const DiffOp& h) {
  if (p.is_zero()) return {};
  DiffOp r = p.lead() * DiffOp::identity();
  for (int k = p.degree() - 1; k >= 0; --k) {
    r = compose(r, h);
    if (!p[k].is_zero()) r += p[k] * DiffOp::identity();
  }
  return r;
}

DiffOp hamiltonian(const Quad& l) {
  return DiffOp({potential(l), EllipticFn(), EllipticFn(-1)});
}

}  // namespace heun
