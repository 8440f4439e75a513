#include "ratlin.hpp"

namespace dk {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::fromColumns(const std::vector<Vec>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("ShapeMismatch", "column length");
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(size_t j) const {
  Vec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("ShapeMismatch", "matrix product");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ShapeMismatch", "matrix sum");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ShapeMismatch", "matrix difference");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("ShapeMismatch", "matrix-vector product");
  Vec r(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::isZero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::optional<Rat> Matrix::asScalarIdentity() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  Rat c = at(0, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j && at(i, j) != c) return std::nullopt;
      if (i != j && at(i, j) != 0) return std::nullopt;
    }
  return c;
}

std::vector<size_t> Matrix::rrefInPlace() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t p = r;
    while (p < rows_ && at(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Rat inv = 1 / at(r, c);
    for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Rat f = at(i, c);
      for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rrefInPlace().size();
}

Rat Matrix::det() const {
  if (rows_ != cols_) throw Error("ShapeMismatch", "det of non-square matrix");
  Matrix m = *this;
  Rat d(1);
  for (size_t c = 0; c < cols_; ++c) {
    size_t p = c;
    while (p < rows_ && m.at(p, c) == 0) ++p;
    if (p == rows_) return Rat(0);
    if (p != c) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (size_t i = c + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::vector<Vec> Matrix::nullspace() const {
  Matrix m = *this;
  auto pivots = m.rrefInPlace();
  std::vector<bool> isPivot(cols_, false);
  for (size_t c : pivots) isPivot[c] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (isPivot[free]) continue;
    Vec v(cols_, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> Matrix::columnSpaceBasis() const {
  Matrix m = *this;
  auto pivots = m.rrefInPlace();
  std::vector<Vec> basis;
  for (size_t c : pivots) basis.push_back(col(c));
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error("ShapeMismatch", "solve rhs");
  Matrix aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = aug.rrefInPlace();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("ShapeMismatch", "inverse of non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = aug.rrefInPlace();
  if (pivots.size() != rows_) throw Error("SingularMatrix", "matrix not invertible");
  Matrix inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<Vec> intersectSpans(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t dim) {
  if (a.empty() || b.empty()) return {};
  // Solve A x = B y; kernel of [A | -B] parameterizes the intersection.
  Matrix m(dim, a.size() + b.size());
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m.at(i, j) = a[j][i];
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m.at(i, a.size() + j) = -b[j][i];
  auto ker = m.nullspace();
  std::vector<Vec> vecs;
  for (const auto& k : ker) {
    Vec v(dim, Rat(0));
    for (size_t j = 0; j < a.size(); ++j)
      for (size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
    if (!isZeroVec(v)) vecs.push_back(std::move(v));
  }
  return Matrix::fromColumns(vecs, dim).columnSpaceBasis();
}

std::vector<size_t> extendToBasis(const std::vector<Vec>& inner, const std::vector<Vec>& all, size_t dim) {
  std::vector<Vec> current = inner;
  std::vector<size_t> chosen;
  for (size_t j = 0; j < all.size(); ++j) {
    if (inSpan(current, all[j])) continue;
    current.push_back(all[j]);
    chosen.push_back(j);
  }
  return chosen;
}

bool inSpan(const std::vector<Vec>& span, const Vec& v) {
  if (isZeroVec(v)) return true;
  if (span.empty()) return false;
  return Matrix::fromColumns(span, v.size()).solve(v).has_value();
}

std::optional<Vec> coordinatesIn(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) {
    if (isZeroVec(v)) return Vec{};
    return std::nullopt;
  }
  return Matrix::fromColumns(basis, v.size()).solve(v);
}

}  // namespace dk
