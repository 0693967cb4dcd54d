#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "affsemi/apery.hpp"
#include "affsemi/semigroup.hpp"

namespace affsemi {

/*
 * Ring-theoretic classification of K[S], computed combinatorially:
 *   - Cohen-Macaulay  <=>  every nonzero remainder class is a singleton;
 *   - Buchsbaum       <=>  every class is a singleton or {c+a_1,...,c+a_d}
 *                          with c + (S \ {0}) contained in S;
 *   - Gorenstein      <=>  Cohen-Macaulay with a single maximal Apery element;
 *   - normal          <=>  every Apery element lies in the open parallelotope
 *                          (all extremal-basis coordinates < 1).
 * typ(S) counts the quasi-Frobenius elements; it equals the Cohen-Macaulay
 * type of K[S] when K[S] is Cohen-Macaulay.
 */
struct Classification {
  std::size_t typ = 0;
  std::vector<IntVec> qf;  // may contain vectors with negative entries
  bool cohen_macaulay = false;
  bool buchsbaum = false;
  bool gorenstein = false;
  bool normal = false;
  bool neg_qf_in_cone = false;
};

// { m - (a_1 + ... + a_d) : m maximal in Ap(S,E) under the semigroup order }.
inline std::vector<IntVec> quasi_frobenius(const Semigroup& s, const AperyTable& table) {
  IntVec shift = zero_vec(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) add_in_place(shift, s.extremal(i));
  std::vector<IntVec> out;
  for (std::size_t idx : table.max_semigroup_idx) out.push_back(sub(table.elements[idx], shift));
  sort_lex(out);
  return out;
}

// cross_check additionally runs the pairwise congruence test modulo
// Gr(a_1,...,a_d) and insists the two criteria agree.
inline bool is_cohen_macaulay(const Semigroup& s, const AperyTable& table,
                              bool cross_check = false) {
  bool singletons = true;
  for (std::size_t j = 1; j < table.classes.size() && singletons; ++j) {
    if (table.classes[j].size() != 1) singletons = false;
  }
  if (cross_check) {
    bool pairwise = true;
    for (std::size_t i = 0; i < table.size() && pairwise; ++i) {
      for (std::size_t j = i + 1; j < table.size() && pairwise; ++j) {
        if (in_lattice(s.lattice_extremal(), sub(table.elements[i], table.elements[j]))) {
          pairwise = false;
        }
      }
    }
    if (pairwise != singletons) {
      throw Error("Cohen-Macaulay criteria disagree; this is a bug");
    }
  }
  return singletons;
}

inline bool is_buchsbaum(const Semigroup& s, const AperyTable& table) {
  const std::size_t d = s.dim();
  for (std::size_t j = 1; j < table.classes.size(); ++j) {
    const auto& cls = table.classes[j];
    if (cls.size() == 1) continue;
    if (cls.size() != d) return false;

    std::set<IntVec> class_set;
    for (std::size_t idx : cls) class_set.insert(table.elements[idx]);

    bool ok = false;
    for (std::size_t idx : cls) {
      for (std::size_t i = 0; i < d && !ok; ++i) {
        IntVec c = sub(table.elements[idx], s.extremal(i));
        if (!is_nonneg(c)) continue;
        std::set<IntVec> shifted;
        for (std::size_t t = 0; t < d; ++t) shifted.insert(add(c, s.extremal(t)));
        if (shifted != class_set) continue;
        bool stays = true;
        for (const IntVec& g : s.generators()) {
          if (!s.in_semigroup(add(c, g))) {
            stays = false;
            break;
          }
        }
        ok = stays;
      }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

inline bool is_gorenstein(const Semigroup& s, const AperyTable& table) {
  return is_cohen_macaulay(s, table) && table.max_semigroup_idx.size() == 1;
}

// Every Apery element strictly inside the fundamental parallelotope.
// cross_check verifies the equivalent characterizations: the conductor
// contains 0, and -QF(S) lies in S and in the relative interior of the cone.
inline bool is_normal(const Semigroup& s, const AperyTable& table, bool cross_check = false) {
  bool inside = true;
  for (const IntVec& mu : table.element_scaled_coords) {
    for (const Int& x : mu) {
      if (x >= s.extremal_det()) {
        inside = false;
        break;
      }
    }
    if (!inside) break;
  }
  if (cross_check) {
    bool conductor_has_zero = true;
    for (std::size_t j = 1; j < table.remainders.size(); ++j) {
      if (!s.in_semigroup(table.remainders[j])) {
        conductor_has_zero = false;
        break;
      }
    }
    bool neg_qf_interior = true;
    for (const IntVec& f : quasi_frobenius(s, table)) {
      IntVec v = neg(f);
      IntVec mu = s.scaled_coords(v);
      for (const Int& x : mu) {
        if (x <= 0) {
          neg_qf_interior = false;
          break;
        }
      }
      if (neg_qf_interior && !s.in_semigroup(v)) neg_qf_interior = false;
      if (!neg_qf_interior) break;
    }
    if (conductor_has_zero != inside || neg_qf_interior != inside) {
      throw Error("normality criteria disagree; this is a bug");
    }
  }
  return inside;
}

// Ap(S,E) inside the closed parallelotope, equivalently -QF(S) in co(S).
inline bool neg_qf_in_cone(const Semigroup& s, const AperyTable& table) {
  for (const IntVec& mu : table.element_scaled_coords) {
    for (const Int& x : mu) {
      if (x > s.extremal_det()) return false;
    }
  }
  return true;
}

inline Classification classify(const Semigroup& s, const AperyTable& table,
                               bool cross_check = false) {
  Classification c;
  c.qf = quasi_frobenius(s, table);
  c.typ = c.qf.size();
  c.cohen_macaulay = is_cohen_macaulay(s, table, cross_check);
  c.buchsbaum = is_buchsbaum(s, table);
  c.gorenstein = is_gorenstein(s, table);
  c.normal = is_normal(s, table, cross_check);
  c.neg_qf_in_cone = neg_qf_in_cone(s, table);
  return c;
}

}  // namespace affsemi
