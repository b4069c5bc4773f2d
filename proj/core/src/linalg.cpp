#include "heun/linalg.hpp"

#include <map>

namespace heun {

namespace {

// Row-reduces in place; returns pivot columns. Rational pivots are preferred
// since they keep the eliminated entries small.
std::vector<int> reduce(Matrix& m, std::vector<CoeffScalar>* rhs) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (best < 0) best = r;
      if (m(r, col).is_rational()) {
        best = r;
        break;
      }
    }
    if (best < 0) continue;
    if (best != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
      if (rhs) std::swap((*rhs)[best], (*rhs)[row]);
    }
    const CoeffScalar inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CoeffScalar f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      if (rhs && !(*rhs)[row].is_zero()) (*rhs)[r] -= f * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(reduce(m, nullptr).size()); }

std::optional<std::vector<CoeffScalar>> solve_unique(Matrix m, std::vector<CoeffScalar> b) {
  if (static_cast<int>(b.size()) != m.rows()) fail(ErrorCode::precondition, "right-hand side size mismatch");
  const std::vector<int> piv = reduce(m, &b);
  for (int r = static_cast<int>(piv.size()); r < m.rows(); ++r)
    if (!b[r].is_zero()) return std::nullopt;
  if (static_cast<int>(piv.size()) != m.cols())
    fail(ErrorCode::internal_inconsistency, "linear system has a non-unique solution");
  std::vector<CoeffScalar> x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = b[r];
  return x;
}

Matrix coordinates(const std::vector<EllipticFn>& fs) {
  // Common clearing factor per twist: ∏(z−eᵢ)^{Kᵢ} times every general denominator.
  std::map<Twist, std::pair<RatZ::Poles, ZPoly>> clear;
  for (const auto& f : fs)
    for (const auto& c : f.components()) {
      auto [it, fresh] = clear.try_emplace(c.twist, RatZ::Poles{}, ZPoly(CoeffScalar(1)));
      for (int i = 0; i < 3; ++i) it->second.first[i] = std::max(it->second.first[i], c.value.poles()[i]);
      if (c.value.has_den() && !it->second.second.divmod(c.value.den()).second.is_zero())
        it->second.second = it->second.second * c.value.den();
    }
  std::vector<std::map<std::pair<Twist, int>, CoeffScalar>> cols(fs.size());
  std::map<std::pair<Twist, int>, int> index;
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (const auto& c : fs[j].components()) {
      const auto& [k, den] = clear.at(c.twist);
      RatZ v = (c.value * RatZ(den)).times_factors(k);
      if (!v.is_polynomial()) fail(ErrorCode::internal_inconsistency, "denominator survived clearing");
      for (int d = 0; d <= v.num().degree(); ++d) {
        if (v.num()[d].is_zero()) continue;
        cols[j][{c.twist, d}] = v.num()[d];
        index.try_emplace({c.twist, d}, 0);
      }
    }
  int r = 0;
  for (auto& kv : index) kv.second = r++;
  Matrix m(r, static_cast<int>(fs.size()));
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (const auto& [key, val] : cols[j]) m(index.at(key), static_cast<int>(j)) = val;
  return m;
}

int rank(const std::vector<EllipticFn>& fs) { return fs.empty() ? 0 : rank(coordinates(fs)); }

bool in_span(const std::vector<EllipticFn>& basis, const EllipticFn& f) {
  if (f.is_zero()) return true;
  std::vector<EllipticFn> all = basis;
  all.push_back(f);
  return rank(all) == rank(basis);
}

}  // namespace heun
