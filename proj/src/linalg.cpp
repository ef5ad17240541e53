#include "artin/linalg.hpp"

#include "artin/error.hpp"

#include <algorithm>

namespace artin {

bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &q) { return sgn(q) == 0; });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

void axpy(Vec &y, const Rational &a, const Vec &x) {
  if (sgn(a) == 0)
    return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0)
      y[i] += a * x[i];
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<Vec> rows) {
  Matrix m;
  m.cols_ = cols;
  for (const auto &r : rows)
    if (r.size() != cols)
      throw Error(ErrorCode::InvalidArgument, "matrix row has the wrong length");
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec> &cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(ErrorCode::InvalidArgument, "matrix column has the wrong length");
    for (std::size_t r = 0; r < rows; ++r)
      m.rows_[r][c] = cols[c][r];
  }
  return m;
}

void Matrix::append_row(Vec r) {
  if (r.size() != cols_)
    throw Error(ErrorCode::InvalidArgument, "matrix row has the wrong length");
  rows_.push_back(std::move(r));
}

Vec Matrix::apply(const Vec &x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  Vec y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(x[c]) != 0 && sgn(rows_[r][c]) != 0)
        y[r] += rows_[r][c] * x[c];
  return y;
}

Matrix Matrix::operator*(const Matrix &other) const {
  if (cols_ != other.rows())
    throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
  Matrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      axpy(out.rows_[r], rows_[r][k], other.rows_[k]);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.rows_[c][r] = rows_[r][c];
  return t;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows_.size() && sgn(rows_[sel][col]) == 0)
      ++sel;
    if (sel == rows_.size())
      continue;
    std::swap(rows_[sel], rows_[lead]);
    Rational inv = 1 / rows_[lead][col];
    for (auto &x : rows_[lead])
      x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == lead || sgn(rows_[r][col]) == 0)
        continue;
      Rational f = -rows_[r][col];
      axpy(rows_[r], f, rows_[lead]);
    }
    pivots.push_back(col);
    ++lead;
  }
  rows_.resize(lead);
  return pivots;
}

std::size_t rank(Matrix m) { return m.rref().size(); }

std::vector<Vec> nullspace(Matrix m) {
  auto pivots = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix &a, const Vec &b) {
  if (b.size() != a.rows())
    throw Error(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = aug.rref();
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols())
      return std::nullopt;
    x[pivots[r]] = aug.at(r, a.cols());
  }
  return x;
}

// --- Subspace ---------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec> &vectors) {
  Subspace s(ambient);
  Matrix m = Matrix::from_rows(ambient, vectors);
  s.pivots_ = m.rref();
  for (std::size_t r = 0; r < m.rows(); ++r)
    s.rows_.push_back(m.row(r));
  return s;
}

Vec Subspace::reduce(const Vec &v) const {
  if (v.size() != ambient_)
    throw Error(ErrorCode::InvalidArgument, "vector does not live in the subspace's ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (sgn(f) != 0)
      axpy(r, -f, rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Subspace &other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vec &v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace &other) const {
  std::vector<Vec> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace &other) const {
  // Solve sum_i a_i u_i - sum_j b_j w_j = 0; each solution gives sum_i a_i u_i.
  std::size_t k = rows_.size(), l = other.rows_.size();
  Matrix system(ambient_, k + l);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < k; ++i)
      system.at(c, i) = rows_[i][c];
    for (std::size_t j = 0; j < l; ++j)
      system.at(c, k + j) = -other.rows_[j][c];
  }
  std::vector<Vec> vectors;
  for (const auto &sol : nullspace(system)) {
    Vec v(ambient_);
    for (std::size_t i = 0; i < k; ++i)
      axpy(v, sol[i], rows_[i]);
    vectors.push_back(std::move(v));
  }
  return span(ambient_, vectors);
}

} // namespace artin
