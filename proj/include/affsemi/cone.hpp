#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affsemi/lattice.hpp"
#include "affsemi/matrix.hpp"
#include "affsemi/simplex.hpp"
#include "affsemi/vec.hpp"

namespace affsemi {

/*
 * Cone analysis for a generator list in N^d \ {0}:
 *   - generators are grouped into parallel classes (same primitive direction);
 *   - a direction is an extreme ray iff it is not a nonnegative rational
 *     combination of the generators outside its class;
 *   - on each extreme ray, the componentwise-smallest generator is the
 *     extremal generator;
 *   - the cone is simplicial iff there are exactly d extreme rays and the
 *     generators span Q^d.
 * Rank deficiency (generators not fully embedded in N^d) is a hard error,
 * never a silent projection.
 */
struct ConeInfo {
  std::size_t dimension = 0;                          // rank of the generator matrix
  std::vector<IntVec> extreme_ray_directions;         // primitive vectors
  std::vector<std::size_t> extremal_generator_indices;  // into the input list
  std::vector<IntVec> extremal_generators;
  bool is_simplicial = false;
};

inline IntVec primitive_direction(const IntVec& v) {
  Int g = content(v);
  IntVec dir(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) dir[i] = v[i] / g;
  return dir;
}

inline void validate_generators(const std::vector<IntVec>& gens) {
  if (gens.empty()) throw InvalidInput("no generators given");
  const std::size_t d = gens[0].size();
  if (d == 0) throw InvalidInput("generators must have dimension >= 1");
  for (const IntVec& g : gens) {
    if (g.size() != d) throw InvalidInput("generators have mixed dimensions");
    if (!is_nonneg(g)) throw InvalidInput("generator " + vec_str(g) + " has a negative entry");
    if (is_zero(g)) throw InvalidInput("the zero vector is not a valid generator");
  }
}

inline ConeInfo analyze_cone(const std::vector<IntVec>& gens) {
  validate_generators(gens);
  const std::size_t d = gens[0].size();

  ConeInfo info;
  info.dimension = hnf(IntMatrix::from_columns(gens)).rank();
  if (info.dimension < d) {
    throw RankDeficient("generators span rank " + std::to_string(info.dimension) +
                        " < ambient dimension " + std::to_string(d));
  }

  // Parallel classes keyed by primitive direction, ordered by first
  // occurrence in the generator list.
  std::vector<IntVec> directions;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntVec dir = primitive_direction(gens[i]);
    auto it = std::find(directions.begin(), directions.end(), dir);
    if (it == directions.end()) {
      directions.push_back(dir);
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it - directions.begin())].push_back(i);
    }
  }

  for (std::size_t ci = 0; ci < directions.size(); ++ci) {
    std::vector<IntVec> outside;
    for (std::size_t cj = 0; cj < directions.size(); ++cj) {
      if (cj == ci) continue;
      for (std::size_t gi : members[cj]) outside.push_back(gens[gi]);
    }
    if (lp_feasible_nonneg(outside, directions[ci])) continue;  // not extreme

    // Parallel nonnegative vectors are totally ordered; the smallest member
    // of the class is the extremal generator on this ray.
    std::size_t smallest = members[ci][0];
    for (std::size_t gi : members[ci]) {
      if (coordinate_sum(gens[gi]) < coordinate_sum(gens[smallest])) smallest = gi;
    }
    info.extreme_ray_directions.push_back(directions[ci]);
    info.extremal_generator_indices.push_back(smallest);
    info.extremal_generators.push_back(gens[smallest]);
  }

  info.is_simplicial = info.extreme_ray_directions.size() == d && info.dimension == d;
  return info;
}

// v in co(S), decided in exact rationals. Requires a simplicial cone.
inline bool in_cone(const ConeInfo& cone, const IntVec& v) {
  if (!cone.is_simplicial) throw NotSimplicial("in_cone requires a simplicial cone");
  std::vector<Rat> lambda = coords_in_basis(cone.extremal_generators, v);
  return std::all_of(lambda.begin(), lambda.end(), [](const Rat& r) { return r.sign() >= 0; });
}

// Is target an N-combination of gens? Depth-first search with a failure memo,
// run on an explicit stack: redundancy certificates can be chains of length
// target/|g|, far beyond any recursion limit. Each subtraction strictly
// decreases the coordinate sum, so the search terminates. A nonzero budget
// caps the number of visited states and raises ResourceLimit when exhausted.
inline bool nat_combo_membership(const std::vector<IntVec>& gens, const IntVec& target,
                                 std::set<IntVec>* failed = nullptr,
                                 std::uint64_t budget = 0) {
  std::set<IntVec> local;
  std::set<IntVec>& memo = failed ? *failed : local;

  // Descending coordinate sum to fail fast.
  std::vector<IntVec> order = gens;
  std::sort(order.begin(), order.end(), [](const IntVec& a, const IntVec& b) {
    Int sa = coordinate_sum(a), sb = coordinate_sum(b);
    if (sa != sb) return sa > sb;
    return lex_less(a, b);
  });

  if (is_zero(target)) return true;
  if (memo.count(target)) return false;

  // (pending vector, index of the next generator to try)
  std::vector<std::pair<IntVec, std::size_t>> stack;
  stack.emplace_back(target, 0);
  std::uint64_t visited = 1;
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.second == order.size()) {
      memo.insert(top.first);
      stack.pop_back();
      continue;
    }
    const IntVec& g = order[top.second++];
    IntVec w(top.first.size());
    bool fits = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = top.first[i] - g[i];
      if (w[i] < 0) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    if (is_zero(w)) return true;
    if (memo.count(w)) continue;
    if (budget != 0 && ++visited > budget) {
      throw ResourceLimit("membership search for " + vec_str(target) + " exceeded " +
                          std::to_string(budget) + " states");
    }
    stack.emplace_back(std::move(w), 0);
  }
  return false;
}

struct MinimalizedGenerators {
  std::vector<IntVec> kept;     // the minimal generating set, input order
  std::vector<IntVec> removed;  // duplicates and redundant generators, input order
};

// Drops duplicates and any generator expressible in the semigroup of the
// others. The survivors form the unique minimal generating set: the monoid is
// pointed, so an element reducible at all is reducible over generators of
// strictly smaller coordinate sum. The search budget turns pathological
// inputs (one giant generator over one tiny one) into a ResourceLimit error
// rather than an unbounded walk.
inline MinimalizedGenerators minimalize_generators(const std::vector<IntVec>& gens) {
  constexpr std::uint64_t kRedundancyBudget = 1'000'000;
  validate_generators(gens);
  MinimalizedGenerators out;
  std::vector<IntVec> deduped;
  for (const IntVec& g : gens) {
    if (std::find(deduped.begin(), deduped.end(), g) == deduped.end()) {
      deduped.push_back(g);
    } else {
      out.removed.push_back(g);
    }
  }
  for (std::size_t i = 0; i < deduped.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < deduped.size(); ++j) {
      if (j != i) others.push_back(deduped[j]);
    }
    if (!others.empty() && nat_combo_membership(others, deduped[i], nullptr, kRedundancyBudget)) {
      out.removed.push_back(deduped[i]);
    } else {
      out.kept.push_back(deduped[i]);
    }
  }
  return out;
}

}  // namespace affsemi
