#include "heun/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "heun/error.hpp"

namespace heun {

namespace {

bool greater_key(const MPoly::Term& a, const MPoly::Term& b) { return a.key > b.key; }

using UQ = std::vector<Rational>;  // dense, index = exponent

void trim(UQ& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UQ uq_mul(const UQ& a, const UQ& b) {
  if (a.empty() || b.empty()) return {};
  UQ out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}


UQ uq_scale(UQ a, const Rational& c) {
  if (sgn(c) == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

// Returns remainder; quotient written to q when non-null.
UQ uq_divmod(UQ a, const UQ& b, UQ* q) {
  const std::size_t nb = b.size();
  if (q) q->assign(a.size() >= nb ? a.size() - nb + 1 : 0, Rational(0));
  Rational inv = 1 / b.back();
  while (a.size() >= nb) {
    Rational c = a.back() * inv;
    std::size_t shift = a.size() - nb;
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i < nb; ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  if (q) trim(*q);
  return a;
}

UQ uq_monic(UQ a) {
  if (a.empty()) return a;
  Rational inv = 1 / a.back();
  for (auto& x : a) x *= inv;
  return a;
}

using UZ = std::vector<mpz_class>;

void trimz(UZ& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Primitive integer multiple of a rational polynomial.
UZ to_primitive_z(const UQ& a) {
  mpz_class den = 1, g = 0;
  for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  UZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i].get_num() * (den / a[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(UZ& a) {
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

UQ uq_gcd(const UQ& qa, const UQ& qb) {
  if (qa.empty()) return uq_monic(qb);
  if (qb.empty()) return uq_monic(qa);
  UZ a = to_primitive_z(qa), b = to_primitive_z(qb);
  if (a.size() < b.size()) std::swap(a, b);
  for (;;) {
    if (b.size() == 1) return UQ{Rational(1)};
    // Pseudo-remainder of a by b followed by the primitive part.
    const mpz_class lc = b.back();
    while (a.size() >= b.size()) {
      mpz_class c = a.back();
      std::size_t s = a.size() - b.size();
      for (auto& x : a) x *= lc;
      for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
      trimz(a);
    }
    if (a.empty()) break;
    make_primitive(a);
    std::swap(a, b);
  }
  UQ out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = Rational(b[i]);
  return uq_monic(std::move(out));
}

UQ uq_divexact(const UQ& a, const UQ& b) {
  UQ q;
  UQ r = uq_divmod(a, b, &q);
  if (!r.empty()) fail(ErrorCode::internal_inconsistency, "inexact univariate division");
  return q;
}

using BQ = std::vector<UQ>;  // index = e2 exponent, entries in Q[e1]

BQ to_bq(const MPoly& p) {
  BQ out(p.degree2() + 1);
  for (const auto& t : p.terms()) {
    UQ& slot = out[MPoly::exp2(t.key)];
    unsigned a = MPoly::exp1(t.key);
    if (slot.size() <= a) slot.resize(a + 1);
    slot[a] = t.coeff;
  }
  return out;
}

MPoly from_bq(const BQ& p) {
  std::vector<MPoly::Term> terms;
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t a = 0; a < p[b].size(); ++a)
      if (sgn(p[b][a]) != 0) terms.push_back({MPoly::pack(a, b), p[b][a]});
  return MPoly::from_terms(std::move(terms));
}

void bq_trim(BQ& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UQ bq_content(const BQ& p) {
  UQ g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? uq_monic(c) : uq_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BQ bq_divexact(const BQ& p, const UQ& c) {
  BQ out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) out[i] = uq_divexact(p[i], c);
  return out;
}

Rational uq_eval(const UQ& p, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

// Coefficients (in the monomial basis) of the polynomial through (xs[k], ys[k]).
UQ interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = n - 1; k >= j; --k) ys[k] = (ys[k] - ys[k - 1]) / (xs[k] - xs[k - j]);
  UQ out{ys[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    out = uq_mul(out, UQ{-xs[k], Rational(1)});
    if (out.empty()) out.resize(1);
    out[0] += ys[k];
  }
  trim(out);
  return out;
}

MPoly primitive_positive(const MPoly& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  if (sgn(p.leading().coeff) < 0) c = -c;
  return p * Rational(1 / c);
}

MPoly homogeneous_gcd(const MPoly& a, const MPoly& b) {
  auto dehom = [](const MPoly& p, int& nu) {
    UQ u(p.degree1() + 1);
    for (const auto& t : p.terms()) u[MPoly::exp1(t.key)] = t.coeff;
    trim(u);
    nu = p.total_degree() - static_cast<int>(u.size() - 1);
    return u;
  };
  int na = 0, nb = 0;
  UQ ua = dehom(a, na), ub = dehom(b, nb);
  UQ h = uq_gcd(ua, ub);
  int m = static_cast<int>(h.size()) - 1;
  int nu = std::min(na, nb);
  std::vector<MPoly::Term> terms;
  for (int i = 0; i <= m; ++i)
    if (sgn(h[i]) != 0) terms.push_back({MPoly::pack(i, m - i + nu), h[i]});
  return primitive_positive(MPoly::from_terms(std::move(terms)));
}

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back({0u, Rational(c)});
}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) {
    terms_.push_back({0u, c});
    terms_.back().coeff.canonicalize();
  }
}

MPoly MPoly::monomial(const Rational& c, unsigned a, unsigned b) {
  MPoly p;
  if (sgn(c) != 0) {
    p.terms_.push_back({pack(a, b), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

MPoly MPoly::e3() { return -(e1() + e2()); }

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), greater_key);
  MPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1; }

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned t = total(terms_.front().key);
  return total(terms_.back().key) == t;
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coeff;
  return 0;
}

int MPoly::degree1() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(exp1(t.key)));
  return d;
}

int MPoly::degree2() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(exp2(t.key)));
  return d;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

template <bool Subtract>
std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key > a[i].key) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else if (c != 1) {
    Rational k = c;
    k.canonicalize();
    for (auto& t : terms_) t.coeff *= k;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].key == 0) return b * a.terms_[0].coeff;
  if (b.terms_.size() == 1 && b.terms_[0].key == 0) return a * b.terms_[0].coeff;
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      // Keys add componentwise because the packed fields never overflow.
      prod.push_back({s.key + t.key, s.coeff * t.coeff});
    }
  return MPoly::from_terms(std::move(prod));
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool MPoly::divides_into(const MPoly& d, MPoly* quotient) const {
  if (d.is_zero()) fail(ErrorCode::precondition, "division by zero polynomial");
  if (d.is_constant()) {
    if (quotient) *quotient = *this * Rational(1 / d.terms_[0].coeff);
    return true;
  }
  MPoly r = *this;
  std::vector<Term> q;
  const Term& lt = d.leading();
  const unsigned da = exp1(lt.key), db = exp2(lt.key);
  Rational inv = 1 / lt.coeff;
  while (!r.is_zero()) {
    const Term& rt = r.leading();
    unsigned ra = exp1(rt.key), rb = exp2(rt.key);
    if (ra < da || rb < db) return false;
    MPoly m = monomial(rt.coeff * inv, ra - da, rb - db);
    q.push_back(m.terms_[0]);
    r -= m * d;
  }
  if (quotient) *quotient = from_terms(std::move(q));
  return true;
}

MPoly MPoly::divexact(const MPoly& d) const {
  MPoly q;
  if (!divides_into(d, &q)) fail(ErrorCode::internal_inconsistency, "inexact polynomial division");
  return q;
}

Rational MPoly::content() const {
  if (terms_.empty()) return 0;
  mpz_class num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

MPoly MPoly::substitute(const MPoly& v1, const MPoly& v2) const {
  MPoly out;
  std::vector<MPoly> p1{MPoly(1)}, p2{MPoly(1)};
  for (const auto& t : terms_) {
    unsigned a = exp1(t.key), b = exp2(t.key);
    while (p1.size() <= a) p1.push_back(p1.back() * v1);
    while (p2.size() <= b) p2.push_back(p2.back() * v2);
    out += p1[a] * p2[b] * t.coeff;
  }
  return out;
}

std::complex<double> MPoly::evaluate(std::complex<double> e1, std::complex<double> e2) const {
  std::complex<double> acc = 0;
  for (const auto& t : terms_)
    acc += t.coeff.get_d() * std::pow(e1, static_cast<int>(exp1(t.key))) *
           std::pow(e2, static_cast<int>(exp2(t.key)));
  return acc;
}

double MPoly::magnitude(std::complex<double> e1, std::complex<double> e2) const {
  double acc = 0;
  for (const auto& t : terms_)
    acc += std::abs(t.coeff.get_d()) * std::pow(std::abs(e1), static_cast<int>(exp1(t.key))) *
           std::pow(std::abs(e2), static_cast<int>(exp2(t.key)));
  return acc;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (neg) out << "-";
    else if (!first) out << "+";
    first = false;
    unsigned a = exp1(t.key), b = exp2(t.key);
    bool monic = c == 1 && (a || b);
    if (!monic) out << c.get_str();
    auto factor = [&](const char* sym, unsigned e) {
      if (!e) return;
      if (!monic) out << "*";
      monic = false;
      out << sym;
      if (e > 1) out << "^" << e;
    };
    factor("e1", a);
    factor("e2", b);
  }
  return out.str();
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.key;
    h = h * 1000003u ^ mpz_get_ui(t.coeff.get_num_mpz_t());
    h = h * 1000003u ^ mpz_get_ui(t.coeff.get_den_mpz_t());
  }
  return h;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return primitive_positive(b);
  if (b.is_zero()) return primitive_positive(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return primitive_positive(a);
  if (a.is_homogeneous() && b.is_homogeneous()) return homogeneous_gcd(a, b);
  if (b.divides_into(a, nullptr)) return primitive_positive(a);
  if (a.divides_into(b, nullptr)) return primitive_positive(b);

  // Content in e1, then the primitive parts by evaluation at e1 = t and
  // interpolation, normalized by γ = gcd of the leading coefficients in e2.
  BQ pa = to_bq(a), pb = to_bq(b);
  UQ ca = bq_content(pa), cb = bq_content(pb);
  UQ c = uq_gcd(ca, cb);
  pa = bq_divexact(pa, ca);
  pb = bq_divexact(pb, cb);
  auto with_content = [&](const BQ& h) {
    BQ out = h;
    for (auto& u : out) u = uq_mul(u, c);
    return primitive_positive(from_bq(out));
  };
  const BQ unit{UQ{Rational(1)}};
  if (pa.size() == 1 || pb.size() == 1) return with_content(unit);
  const MPoly ma = from_bq(pa), mb = from_bq(pb);
  const UQ gamma = uq_gcd(pa.back(), pb.back());
  std::size_t deg_e1 = 0;
  for (const auto& u : pa) deg_e1 = std::max(deg_e1, u.size());
  std::size_t deg_e1_b = 0;
  for (const auto& u : pb) deg_e1_b = std::max(deg_e1_b, u.size());
  std::size_t needed = (gamma.size() - 1) + std::min(deg_e1, deg_e1_b);
  auto image = [](const BQ& p, const Rational& t) {
    UQ out(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) out[j] = uq_eval(p[j], t);
    trim(out);
    return out;
  };
  std::vector<Rational> xs;
  std::vector<UQ> imgs;
  std::size_t best = static_cast<std::size_t>(-1);
  for (long t = 1;; ++t) {
    Rational x(t);
    if (sgn(uq_eval(pa.back(), x)) == 0 || sgn(uq_eval(pb.back(), x)) == 0) continue;
    UQ g = uq_gcd(image(pa, x), image(pb, x));
    if (g.size() == 1) return with_content(unit);
    if (g.size() > best) continue;
    if (g.size() < best) {
      best = g.size();
      xs.clear();
      imgs.clear();
    }
    g = uq_scale(std::move(g), uq_eval(gamma, x));
    xs.push_back(x);
    imgs.push_back(std::move(g));
    if (xs.size() < needed + 1) continue;
    BQ h(best);
    for (std::size_t j = 0; j < best; ++j) {
      std::vector<Rational> ys(xs.size());
      for (std::size_t k = 0; k < xs.size(); ++k) ys[k] = imgs[k][j];
      h[j] = interpolate(xs, ys);
    }
    bq_trim(h);
    if (h.empty()) continue;
    h = bq_divexact(h, bq_content(h));
    MPoly mh = from_bq(h);
    if (ma.divides_into(mh, nullptr) && mb.divides_into(mh, nullptr)) return with_content(h);
    ++needed;
  }
}

}  // namespace heun
