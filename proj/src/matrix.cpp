#include "knotcert/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "knotcert/errors.hpp"

namespace knotcert {

template <typename T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw InputError("matrix entry count " + std::to_string(data_.size()) +
                     " does not match shape " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
}

template <typename T>
Matrix<T> Matrix<T>::without_column(std::size_t c) const {
  Matrix out(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j)
      if (j != c) out(i, k++) = (*this)(i, j);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::without_row(std::size_t r) const {
  Matrix out(rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(i, j);
    ++k;
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

template class Matrix<BigInt>;
template class Matrix<LaurentPoly>;

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const BigInt& d : diagonal()) r += (d != 0);
  return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

// col[dst] -= q * col[src]
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SnfResult res{identity_matrix(rows), a, identity_matrix(cols)};
  IntMatrix& d = res.D;
  BigInt q;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return res;  // trailing block is zero

      swap_rows(d, t, pr);
      swap_rows(res.U, t, pr);
      swap_cols(d, t, pc);
      swap_cols(res.V, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(res.U, i, t, q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(res.V, j, t, q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      // Enforce d_t | every later entry by folding an offending row into row t.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_axpy(d, t, bad_row, BigInt(-1));
      row_axpy(res.U, t, bad_row, BigInt(-1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) res.U(t, j) = -res.U(t, j);
    }
  }
  return res;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(1);
  if (n > 24) throw SizeTooLarge("cofactor expansion limited to 24x24");

  // partial[mask]: signed sum over assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::vector<LaurentPoly> partial(std::size_t{1} << n);
  partial[0] = LaurentPoly::constant(1);
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (partial[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const LaurentPoly& entry = m(row, c);
      if (entry.is_zero()) continue;
      const int larger = __builtin_popcountll(mask >> (c + 1));
      LaurentPoly term = partial[mask] * entry;
      if (larger % 2 == 1) term = -term;
      partial[mask | (std::size_t{1} << c)] += term;
    }
  }
  return partial.back();
}

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<LaurentPoly> minors(const LaurentMatrix& m, std::size_t k) {
  if (k > m.rows() || k > m.cols())
    throw SizeTooLarge("minor size " + std::to_string(k) + " exceeds " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::vector<LaurentPoly> out;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
      LaurentPoly det = canonicalize(determinant(m.submatrix(rs, cs)));
      if (det.is_zero()) return;
      if (std::find(out.begin(), out.end(), det) == out.end()) out.push_back(std::move(det));
    });
  });
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace knotcert
