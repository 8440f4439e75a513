#pragma once

#include <cstddef>
#include <optional>

#include "rational.hpp"

namespace dk {

/// Dense matrix over exact rationals. Sized for desk-scale problems; all
/// eliminations are exact, there are no tolerances anywhere.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(size_t n);
  static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }
  static Matrix fromColumns(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool isZero() const;
  /// If the matrix is c*I returns c, otherwise nullopt.
  std::optional<Rat> asScalarIdentity() const;

  size_t rank() const;
  Rat det() const;

  /// Column-space of the kernel, as column vectors.
  std::vector<Vec> nullspace() const;
  /// A basis of the column span.
  std::vector<Vec> columnSpaceBasis() const;

  /// Solves A x = b; nullopt when inconsistent.
  std::optional<Vec> solve(const Vec& b) const;
  Matrix inverse() const;

  /// Reduced row echelon form, in place; returns pivot column indices.
  std::vector<size_t> rrefInPlace();

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Basis of the intersection of two column spans living in the same space.
std::vector<Vec> intersectSpans(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t dim);

/// Extends `inner` (an independent family inside span(all)) to a basis of
/// span(all); returns indices into `all` of the chosen complement vectors.
std::vector<size_t> extendToBasis(const std::vector<Vec>& inner, const std::vector<Vec>& all, size_t dim);

/// True if v lies in the span of the given vectors.
bool inSpan(const std::vector<Vec>& span, const Vec& v);

/// Coordinates of v in the given (independent) family; nullopt if outside.
std::optional<Vec> coordinatesIn(const std::vector<Vec>& basis, const Vec& v);

}  // namespace dk
