#pragma once

#include "artin/polynomial.hpp"

#include <optional>
#include <vector>

namespace artin {

using Vec = std::vector<Rational>;

bool is_zero(const Vec &v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
void axpy(Vec &y, const Rational &a, const Vec &x); // y += a*x

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols)) {}
  static Matrix from_rows(std::size_t cols, std::vector<Vec> rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec> &cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Rational &at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational &at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Vec &row(std::size_t r) const { return rows_[r]; }
  Vec &row(std::size_t r) { return rows_[r]; }
  void append_row(Vec r);

  Vec apply(const Vec &x) const;
  Matrix operator*(const Matrix &other) const;
  Matrix transposed() const;

  /// Reduced row echelon form in place; zero rows are dropped. Returns the
  /// pivot column of each remaining row.
  std::vector<std::size_t> rref();

private:
  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
};

std::size_t rank(Matrix m);
std::vector<Vec> nullspace(Matrix m);
std::optional<Vec> solve(const Matrix &a, const Vec &b);

/// A linear subspace of Q^n held as the nonzero rows of a reduced
/// row-echelon matrix (pivots strictly increasing).
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec> &vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vec> &basis() const { return rows_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  /// Canonical remainder of v modulo the subspace (zero on pivot columns).
  Vec reduce(const Vec &v) const;
  bool contains(const Vec &v) const { return artin::is_zero(reduce(v)); }
  bool contains(const Subspace &other) const;

  Subspace sum(const Subspace &other) const;
  Subspace intersect(const Subspace &other) const;

  bool operator==(const Subspace &other) const { return ambient_ == other.ambient_ && rows_ == other.rows_; }

private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace artin
