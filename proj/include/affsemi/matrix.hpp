#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affsemi/errors.hpp"
#include "affsemi/rational.hpp"
#include "affsemi/vec.hpp"

namespace affsemi {

// Dense integer matrix, row-major. Dimensions are validated on access in
// debug builds only; arithmetic never overflows because entries are cpp_int.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw InvalidInput("from_columns: ragged input");
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec column(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  std::vector<IntVec> columns() const {
    std::vector<IntVec> cs;
    cs.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
    return cs;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

// Fraction-free (Bareiss) determinant. All intermediate divisions are exact,
// so the computation stays in Z.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("determinant: matrix not square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

// Exact coordinates of v in the given basis (Cramer): returns lambda with
// sum lambda_i * basis_i = v. Throws SingularBasis if the system is not
// invertible.
inline std::vector<Rat> coords_in_basis(const std::vector<IntVec>& basis, const IntVec& v) {
  const std::size_t d = v.size();
  if (basis.size() != d) throw SingularBasis("coords_in_basis: need d basis vectors");
  IntMatrix b = IntMatrix::from_columns(basis);
  if (b.rows() != d) throw InvalidInput("coords_in_basis: dimension mismatch");
  Int det = determinant(b);
  if (det == 0) throw SingularBasis("coords_in_basis: basis is singular");
  std::vector<Rat> lambda(d);
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix bj = b;
    for (std::size_t i = 0; i < d; ++i) bj.at(i, j) = v[i];
    lambda[j] = Rat(determinant(bj), det);
  }
  return lambda;
}

// Adjugate of a square matrix: adj * m = det(m) * I. Computed by cofactors;
// the matrices here are d x d with d tiny, so this is a one-time cost.
inline IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("adjugate: matrix not square");
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;  // transposed cofactor
    }
  }
  return adj;
}

// Matrix * vector.
inline IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
  if (m.cols() != v.size()) throw InvalidInput("mat_vec: dimension mismatch");
  IntVec out(m.rows(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace affsemi
