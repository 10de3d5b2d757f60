#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qg/scalar.hpp"

namespace qg {

using Vector = std::vector<QScalar>;

/// Dense row-major matrix over Q(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<QScalar> data);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<QScalar>& d);
  /// Column vector from entries.
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  QScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<QScalar>& data() const { return data_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const QScalar& s) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix conjugate(Involution inv) const;
  QScalar trace() const;
  bool is_zero() const;
  /// Throws InvariantViolation if singular, DimensionError if not square.
  Matrix inverse() const;
  std::size_t rank() const;
  /// Basis of {x : M x = 0}, see qg::nullspace.
  std::vector<Vector> nullspace() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QScalar> data_;
};

/// Kronecker product with the lexicographic index convention (a⊗b)_{(i,j),(k,l)} = a_ik b_jl.
Matrix kron(const Matrix& a, const Matrix& b);

/// Sparse linear form: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<std::size_t, QScalar>>;

/// Basis of the common kernel of the given linear forms on Q(q)^ncols.
///
/// The basis is returned in reduced echelon form: each vector has a leading
/// coordinate equal to 1 at which all other basis vectors vanish, and vectors
/// are sorted by that coordinate.
std::vector<Vector> nullspace(const std::vector<SparseRow>& rows, std::size_t ncols);

/// Reduced echelon form of the row space spanned by `vectors` (zero rows dropped).
std::vector<Vector> echelon_basis(std::vector<Vector> vectors);

}  // namespace qg
