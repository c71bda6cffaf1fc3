#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knotcert/laurent.hpp"

namespace knotcert {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }

  Matrix without_column(std::size_t c) const;
  Matrix without_row(std::size_t r) const;
  Matrix submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using LaurentMatrix = Matrix<LaurentPoly>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt determinant(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<BigInt> diagonal() const;
  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Determinant of a square Laurent matrix by cofactor expansion, memoized on
/// the set of used columns.
LaurentPoly determinant(const LaurentMatrix& m);

/// All k x k minors, canonicalized, zeros and duplicates dropped. Order
/// follows the lexicographic order of (row set, column set) at first
/// occurrence. Throws SizeTooLarge if k exceeds a dimension.
std::vector<LaurentPoly> minors(const LaurentMatrix& m, std::size_t k);

std::string to_string(const IntMatrix& m);

}  // namespace knotcert
