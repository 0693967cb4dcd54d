#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affsemi/matrix.hpp"
#include "affsemi/vec.hpp"

namespace affsemi {

/*
 * Column-style Hermite normal form over the integers.
 *
 * Column operations (swap, negate, add integer multiples) preserve the
 * integer span of the columns, so the result is a canonical basis of the
 * lattice generated by the input columns:
 *   - pivot rows strictly increase column by column,
 *   - each pivot is positive,
 *   - in a pivot row, every entry to the LEFT of the pivot lies in [0, pivot).
 * Zero columns are dropped; rank = number of pivot columns.
 */
class LatticeBasis {
 public:
  LatticeBasis() : dim_(0) {}

  const IntMatrix& hnf() const { return hnf_; }
  std::size_t rank() const { return hnf_.cols(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.dim_ == b.dim_ && a.pivots_ == b.pivots_ && a.hnf_ == b.hnf_;
  }

 private:
  friend LatticeBasis hnf(const IntMatrix&);
  IntMatrix hnf_;
  std::vector<std::size_t> pivots_;
  std::size_t dim_;
};

inline LatticeBasis hnf(const IntMatrix& m) {
  const std::size_t d = m.rows();
  std::vector<IntVec> cols = m.columns();
  const std::size_t n = cols.size();

  auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < d; ++i) cols[dst][i] += q * cols[src][i];
  };

  std::vector<std::size_t> pivots;
  std::size_t c = 0;  // next pivot column slot
  for (std::size_t row = 0; row < d && c < n; ++row) {
    // Euclidean elimination across columns c..n-1 in this row.
    while (true) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j) {
        if (cols[j][row] == 0) continue;
        if (best == n || abs_int(cols[j][row]) < abs_int(cols[best][row])) best = j;
      }
      if (best == n) break;  // row is all zero from column c on
      std::swap(cols[c], cols[best]);
      bool reduced = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (cols[j][row] == 0) continue;
        Int q = floor_div(cols[j][row], cols[c][row]);
        col_addmul(j, c, -q);
        if (cols[j][row] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (cols[c][row] == 0) continue;
    if (cols[c][row] < 0) {
      for (std::size_t i = 0; i < d; ++i) cols[c][i] = -cols[c][i];
    }
    // Canonical reduction of the columns to the left at this pivot row.
    for (std::size_t j = 0; j < c; ++j) {
      Int q = floor_div(cols[j][row], cols[c][row]);
      if (q != 0) col_addmul(j, c, -q);
    }
    pivots.push_back(row);
    ++c;
  }

  LatticeBasis out;
  out.dim_ = d;
  out.pivots_ = pivots;
  std::vector<IntVec> kept(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(pivots.size()));
  out.hnf_ = IntMatrix::from_columns(kept);
  if (pivots.empty()) out.hnf_ = IntMatrix(d, 0);
  return out;
}

// True iff v is an integer combination of the basis columns. Forward
// substitution along the pivot rows; every division must be exact.
inline bool in_lattice(const LatticeBasis& l, const IntVec& v) {
  if (v.size() != l.dim()) throw InvalidInput("in_lattice: dimension mismatch");
  IntVec w = v;
  const IntMatrix& h = l.hnf();
  for (std::size_t c = 0; c < l.rank(); ++c) {
    const std::size_t r = l.pivot_rows()[c];
    const Int& p = h.at(r, c);
    if (w[r] % p != 0) return false;
    Int x = w[r] / p;
    if (x != 0) {
      for (std::size_t i = r; i < l.dim(); ++i) w[i] -= x * h.at(i, c);
    }
  }
  return is_zero(w);
}

}  // namespace affsemi
