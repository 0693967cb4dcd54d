#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affsemi/rational.hpp"
#include "affsemi/vec.hpp"

namespace affsemi {

/*
 * Exact feasibility of  target = sum x_i * columns_i  with x_i in Q_{>=0}.
 *
 * Phase-1 simplex over Rat: minimize the sum of one artificial variable per
 * row (rows sign-normalized so the right-hand side is nonnegative); the
 * system is feasible iff the optimum is 0. Bland's rule (lowest index
 * entering, lowest basic-variable index leaving among ratio ties) guarantees
 * termination and makes the run deterministic. No floating point anywhere.
 */
inline std::optional<std::vector<Rat>> lp_nonneg_witness(const std::vector<IntVec>& columns,
                                                         const IntVec& target) {
  const std::size_t m = target.size();
  const std::size_t n = columns.size();
  for (const IntVec& c : columns)
    if (c.size() != m) throw InvalidInput("lp_nonneg_witness: dimension mismatch");

  // tableau[i][j]: structural columns first, then the m artificial columns.
  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(n + m, Rat(0)));
  std::vector<Rat> rhs(m, Rat(0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = Rat(flip ? Int(-columns[j][i]) : columns[j][i]);
    rhs[i] = Rat(flip ? Int(-target[i]) : target[i]);
    tab[i][n + i] = Rat(1);
    basis[i] = n + i;
  }

  auto is_artificial = [&](std::size_t j) { return j >= n; };

  while (true) {
    // Reduced cost of column j: c_j - sum over rows with artificial basic.
    std::size_t entering = n + m;
    for (std::size_t j = 0; j < n + m && entering == n + m; ++j) {
      Rat z(0);
      for (std::size_t i = 0; i < m; ++i) {
        if (is_artificial(basis[i])) z += tab[i][j];
      }
      Rat rc = (is_artificial(j) ? Rat(1) : Rat(0)) - z;
      if (rc.sign() < 0) entering = j;
    }
    if (entering == n + m) break;  // optimal

    std::size_t leave = m;
    Rat best(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][entering].sign() <= 0) continue;
      Rat ratio = rhs[i] / tab[i][entering];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) {
      // Unbounded phase-1 objective cannot happen (bounded below by 0);
      // reaching here would mean a broken tableau.
      throw Error("lp_nonneg_witness: internal pivot failure");
    }

    // Pivot on (leave, entering).
    Rat p = tab[leave][entering];
    for (auto& x : tab[leave]) x /= p;
    rhs[leave] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][entering].is_zero()) continue;
      Rat f = tab[i][entering];
      for (std::size_t j = 0; j < n + m; ++j) tab[i][j] -= f * tab[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    basis[leave] = entering;
  }

  Rat value(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (is_artificial(basis[i])) value += rhs[i];
  }
  if (!value.is_zero()) return std::nullopt;

  std::vector<Rat> witness(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_artificial(basis[i])) witness[basis[i]] = rhs[i];
  }
  return witness;
}

inline bool lp_feasible_nonneg(const std::vector<IntVec>& columns, const IntVec& target) {
  return lp_nonneg_witness(columns, target).has_value();
}

}  // namespace affsemi
