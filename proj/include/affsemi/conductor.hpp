#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affsemi/apery.hpp"
#include "affsemi/semigroup.hpp"
#include "affsemi/structure.hpp"

namespace affsemi {

/*
 * The conductor c(S) = { a in S : a + b_j in S for the nonzero remainders
 * b_1..b_k } is the largest common ideal of S and its normalization
 * S-bar = Gr(S) cap co(S). Every minimal generator of c(S) as an ideal of
 * S-bar has the form
 *     f_{(w_1..w_k)} - b_j + sum_{i in I} a_i,   I a proper subset of {1..d},
 * where the tuple picks one representative per nonzero class and
 * f_i = max_j floor([w_j]_i). That finite candidate family is enumerated,
 * filtered by conductor membership, and minimalized by S-bar-domination.
 */

struct NormalizationGens {
  std::vector<IntVec> generators;  // sorted lexicographically
};

// Minimal generating set of S-bar: the distinct nonzero remainders together
// with the extremal generators, with every vector dominated inside S-bar
// removed. Domination is a strict partial order on a pointed cone, so the
// minimal elements are exactly the irreducibles.
inline NormalizationGens normalization_generators(const Semigroup& s, const AperyTable& table) {
  std::set<IntVec> cand;
  for (std::size_t j = 1; j < table.remainders.size(); ++j) cand.insert(table.remainders[j]);
  for (std::size_t i = 0; i < s.dim(); ++i) cand.insert(s.extremal(i));

  NormalizationGens out;
  for (const IntVec& g : cand) {
    bool minimal = true;
    for (const IntVec& h : cand) {
      if (h != g && s.in_normalization(sub(g, h))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.generators.push_back(g);
  }
  return out;  // set iteration is already lexicographic
}

inline bool conductor_membership(const Semigroup& s, const AperyTable& table, const IntVec& c) {
  if (!s.in_semigroup(c)) return false;
  for (std::size_t j = 1; j < table.remainders.size(); ++j) {
    if (!s.in_semigroup(add(c, table.remainders[j]))) return false;
  }
  return true;
}

struct FVector {
  std::vector<IntVec> tuple;  // one representative per nonzero class, in class order
  std::vector<Int> floors;    // f_1..f_d
  IntVec value;               // sum f_i a_i, always a conductor element
};

inline FVector f_vector(const Semigroup& s, const AperyTable& table,
                        const std::vector<IntVec>& tuple) {
  const std::size_t k = table.num_nonzero_classes();
  if (tuple.size() != k) {
    throw InvalidTuple("expected one representative per nonzero class (" + std::to_string(k) +
                       "), got " + std::to_string(tuple.size()));
  }
  FVector f;
  f.tuple = tuple;
  f.floors.assign(s.dim(), Int(0));
  for (std::size_t j = 0; j < k; ++j) {
    auto it = std::lower_bound(table.elements.begin(), table.elements.end(), tuple[j], lex_less);
    if (it == table.elements.end() || *it != tuple[j]) {
      throw InvalidTuple(vec_str(tuple[j]) + " is not an Apery element");
    }
    std::size_t idx = static_cast<std::size_t>(it - table.elements.begin());
    if (table.class_of[idx] != j + 1) {
      throw InvalidTuple(vec_str(tuple[j]) + " does not represent class " + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (table.element_floors[idx][i] > f.floors[i]) f.floors[i] = table.element_floors[idx][i];
    }
  }
  f.value = zero_vec(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t c = 0; c < s.dim(); ++c) f.value[c] += f.floors[i] * s.extremal(i)[c];
  }
  if (!conductor_membership(s, table, f.value)) {
    throw Error("f-vector " + vec_str(f.value) + " failed conductor membership; this is a bug");
  }
  return f;
}

enum class FastPath { none, single_class, principal };

inline const char* fast_path_name(FastPath fp) {
  switch (fp) {
    case FastPath::single_class:
      return "single_class";
    case FastPath::principal:
      return "principal";
    default:
      return "none";
  }
}

struct ConductorSet {
  std::vector<IntVec> minimal_generators;  // sorted lexicographically
  std::uint64_t candidates_examined = 0;
  FastPath fast_path_used = FastPath::none;
};

namespace detail {

// Distinct f-vector floor tuples over C_1 x ... x C_k, folded class by class
// with deduplication (f depends only on the componentwise max of floors).
inline std::set<std::vector<Int>> distinct_f_floors(const Semigroup& s, const AperyTable& table) {
  std::set<std::vector<Int>> partial;
  partial.insert(std::vector<Int>(s.dim(), Int(0)));
  Int raw_product = 1;
  for (std::size_t j = 1; j < table.classes.size(); ++j) {
    std::set<std::vector<Int>> class_floors;
    for (std::size_t idx : table.classes[j]) class_floors.insert(table.element_floors[idx]);
    raw_product *= Int(class_floors.size());
    if (raw_product > Int(s.limits().tuple_limit)) {
      throw ResourceLimit("class tuple family has " + raw_product.str() +
                          "+ floor combinations, over the limit of " +
                          std::to_string(s.limits().tuple_limit));
    }
    std::set<std::vector<Int>> next;
    for (const auto& p : partial) {
      for (const auto& q : class_floors) {
        std::vector<Int> m(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) m[i] = p[i] > q[i] ? p[i] : q[i];
        next.insert(std::move(m));
      }
    }
    partial = std::move(next);
  }
  return partial;
}

inline std::vector<IntVec> minimalize_over_normalization(const Semigroup& s,
                                                         const std::vector<IntVec>& elems) {
  std::vector<IntVec> out;
  for (const IntVec& c : elems) {
    bool minimal = true;
    for (const IntVec& other : elems) {
      if (other != c && s.in_normalization(sub(c, other))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace detail

inline ConductorSet conductor_min_gens(const Semigroup& s, const AperyTable& table) {
  const std::size_t d = s.dim();
  std::set<std::vector<Int>> floor_set = detail::distinct_f_floors(s, table);

  // Candidate family: f - b_j + sum_{i in I} a_i over all f, all j (b_0 = 0
  // included), and all proper subsets I of the extremal index set.
  std::set<IntVec> candidates;
  const std::uint32_t full_mask = (1u << d) - 1u;
  for (const std::vector<Int>& floors : floor_set) {
    IntVec base = zero_vec(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = 0; c < d; ++c) base[c] += floors[i] * s.extremal(i)[c];
    }
    for (const IntVec& b : table.remainders) {
      IntVec shifted = sub(base, b);
      for (std::uint32_t mask = 0; mask < full_mask; ++mask) {
        IntVec c = shifted;
        for (std::size_t i = 0; i < d; ++i) {
          if (mask & (1u << i)) add_in_place(c, s.extremal(i));
        }
        candidates.insert(std::move(c));
      }
    }
  }

  std::vector<IntVec> cand_list(candidates.begin(), candidates.end());
  s.membership_table_built();
  std::vector<char> keep = detail::parallel_flags(
      cand_list.size(), s.limits().threads,
      [&](std::size_t i) { return conductor_membership(s, table, cand_list[i]); });

  std::vector<IntVec> members;
  for (std::size_t i = 0; i < cand_list.size(); ++i) {
    if (keep[i]) members.push_back(cand_list[i]);
  }

  ConductorSet out;
  out.candidates_examined = cand_list.size();
  out.minimal_generators = detail::minimalize_over_normalization(s, members);
  out.fast_path_used = FastPath::none;
  return out;
}

// The shortcut routes: if one class dominates everything outside it under the
// cone order (and is a singleton, or its remainder is the coordinatewise
// minimum of the nonzero remainders), the conductor is generated by
// { w - b : w in C_j, b maximal among the nonzero remainders }. The
// Cohen-Macaulay case with a unique cone-order maximum is the same formula
// with C_j the class of that maximum. Returns nothing when neither applies.
inline std::optional<ConductorSet> conductor_fast_path(const Semigroup& s,
                                                       const AperyTable& table) {
  const std::size_t k = table.num_nonzero_classes();
  if (k == 0) {
    ConductorSet out;
    out.minimal_generators = {zero_vec(s.dim())};
    out.candidates_examined = 1;
    out.fast_path_used = FastPath::principal;
    return out;
  }

  auto remainder_maxima = [&]() {
    std::vector<std::size_t> maxima;
    for (std::size_t a = 1; a <= k; ++a) {
      bool maximal = true;
      for (std::size_t b = 1; b <= k && maximal; ++b) {
        if (b != a && dominated_by(table.remainder_scaled_coords[a],
                                   table.remainder_scaled_coords[b])) {
          maximal = false;
        }
      }
      if (maximal) maxima.push_back(a);
    }
    return maxima;
  };

  auto build = [&](std::size_t j) {
    ConductorSet out;
    std::set<IntVec> gens;
    const std::vector<std::size_t> maxima = remainder_maxima();
    for (std::size_t idx : table.classes[j]) {
      for (std::size_t b : maxima) {
        gens.insert(sub(table.elements[idx], table.remainders[b]));
      }
    }
    out.minimal_generators.assign(gens.begin(), gens.end());
    out.candidates_examined = gens.size();
    out.fast_path_used =
        out.minimal_generators.size() == 1 ? FastPath::principal : FastPath::single_class;
    return out;
  };

  for (std::size_t j = 1; j <= k; ++j) {
    bool dominates = true;
    for (std::size_t wi : table.classes[j]) {
      for (std::size_t other = 0; other < table.size() && dominates; ++other) {
        if (table.class_of[other] == j) continue;
        if (!dominated_by(table.element_scaled_coords[other],
                          table.element_scaled_coords[wi])) {
          dominates = false;
        }
      }
      if (!dominates) break;
    }
    if (!dominates) continue;

    bool singleton = table.classes[j].size() == 1;
    bool min_remainder = true;
    for (std::size_t b = 1; b <= k && min_remainder; ++b) {
      if (!dominated_by(table.remainder_scaled_coords[j], table.remainder_scaled_coords[b])) {
        min_remainder = false;
      }
    }
    if (singleton || min_remainder) return build(j);
  }

  if (table.max_cone_idx.size() == 1 && is_cohen_macaulay(s, table)) {
    std::size_t top = table.max_cone_idx[0];
    return build(table.class_of[top]);
  }
  return std::nullopt;
}

// d = 1 with gcd of generators 1: the single conductor generator minus one.
// Cross-checked against max Ap(S, e) - e.
inline Int frobenius_number(const Semigroup& s) {
  if (s.dim() != 1) throw NotNumerical("frobenius_number requires d = 1");
  Int g = 0;
  for (const IntVec& gen : s.generators()) g = gcd_int(g, gen[0]);
  if (g != 1) {
    throw NotNumerical("generators have gcd " + g.str() + "; not a numerical semigroup");
  }
  AperyTable table = apery_set(s);
  ConductorSet cond = conductor_min_gens(s, table);
  if (cond.minimal_generators.size() != 1) {
    throw Error("numerical conductor is not principal; this is a bug");
  }
  Int frob = cond.minimal_generators[0][0] - 1;
  Int w = 0;
  for (const IntVec& e : table.elements) {
    if (e[0] > w) w = e[0];
  }
  if (frob != w - s.extremal(0)[0]) {
    throw Error("Frobenius cross-check failed; this is a bug");
  }
  return frob;
}

}  // namespace affsemi
