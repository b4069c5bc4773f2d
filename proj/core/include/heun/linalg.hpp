#pragma once

#include <optional>
#include <vector>

#include "heun/elliptic.hpp"

namespace heun {

/// Dense matrix over CoeffScalar, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CoeffScalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const CoeffScalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<CoeffScalar> a_;
};

int rank(Matrix m);
/// The unique x with m·x = b; nullopt when no solution exists.
/// Throws internal_inconsistency when the solution is not unique.
std::optional<std::vector<CoeffScalar>> solve_unique(Matrix m, std::vector<CoeffScalar> b);

/// Coordinates of functions in a common finite basis (twist, z-degree) after
/// clearing all denominators with one common factor.
Matrix coordinates(const std::vector<EllipticFn>& fs);
int rank(const std::vector<EllipticFn>& fs);
bool in_span(const std::vector<EllipticFn>& basis, const EllipticFn& f);

}  // namespace heun
