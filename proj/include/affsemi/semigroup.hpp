#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affsemi/cone.hpp"
#include "affsemi/lattice.hpp"
#include "affsemi/matrix.hpp"
#include "affsemi/vec.hpp"

namespace affsemi {

struct Limits {
  std::uint64_t tuple_limit = 10'000'000;  // cap on Gamma-box / class-tuple enumerations
  std::uint64_t box_limit = 1'000'000;     // cap on oracle box sizes
  int threads = 1;
};

// r(a) with its floors: a = sum floors_i * a_i + vector, and every
// extremal-basis coordinate of vector lies in [0, 1).
struct Remainder {
  IntVec vector;
  std::vector<Int> floors;
};

/*
 * A validated simplicial affine semigroup.
 *
 * Construction minimalizes the generator list, analyzes the cone, and orders
 * the extremal generators a_1..a_d first. Membership queries are answered
 * from a residue index over the Gamma box: writing mu(v) = adj * v (so the
 * extremal-basis coordinates of v are mu(v)/det), every element of S reduces
 * to  v = u + (N-combination of a_1..a_d)  with u = sum n_i a_{d+i},
 * 0 <= n_i < l_i. Grouping the mu(u) by coset mod det and keeping only the
 * componentwise-minimal ones gives a complete test:
 *     v in S  iff  mu(v) >= some stored minimum of its own coset.
 * One query is d^2 bigint multiplications plus a map lookup, which is what
 * makes the conductor search's membership volume affordable. If the Gamma box
 * exceeds the tuple limit the class falls back to a memoized depth-first
 * search subtracting generators (descending coordinate sum), synchronized so
 * results never depend on the number of calling threads.
 */
class Semigroup {
 public:
  explicit Semigroup(std::vector<IntVec> generators, Limits limits = {})
      : limits_(limits),
        input_generators_(std::move(generators)),
        cache_(std::make_unique<MembershipCache>()) {
    MinimalizedGenerators min = minimalize_generators(input_generators_);
    removed_ = min.removed;
    cone_ = analyze_cone(min.kept);
    dim_ = input_generators_[0].size();
    if (!cone_.is_simplicial) {
      throw NotSimplicial("cone has " + std::to_string(cone_.extreme_ray_directions.size()) +
                          " extreme rays in dimension " + std::to_string(dim_) +
                          "; the semigroup is not simplicial");
    }

    // Extremal generators first, the rest in input order.
    std::vector<bool> is_extremal(min.kept.size(), false);
    for (std::size_t idx : cone_.extremal_generator_indices) is_extremal[idx] = true;
    generators_ = cone_.extremal_generators;
    for (std::size_t i = 0; i < min.kept.size(); ++i) {
      if (!is_extremal[i]) generators_.push_back(min.kept[i]);
    }

    lattice_full_ = hnf(IntMatrix::from_columns(generators_));
    lattice_extremal_ = hnf(IntMatrix::from_columns(cone_.extremal_generators));

    IntMatrix basis = IntMatrix::from_columns(cone_.extremal_generators);
    Int det_raw = determinant(basis);
    adj_ = adjugate(basis);
    if (det_raw < 0) {
      det_ = -det_raw;
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) adj_.at(i, j) = -adj_.at(i, j);
    } else {
      det_ = det_raw;
    }

    // l_i: smallest positive integer with l_i * a_{d+i} in the N-span of the
    // extremal generators = lcm of the coordinate denominators.
    for (std::size_t i = dim_; i < generators_.size(); ++i) {
      IntVec mu = scaled_coords(generators_[i]);
      Int g = det_;
      for (const Int& x : mu) {
        if (x < 0) throw Error("internal: generator outside its own cone");
        g = gcd_int(g, x);
      }
      gamma_bounds_.push_back(det_ / g);
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  std::size_t embedding_dimension() const { return generators_.size(); }
  std::size_t num_nonextremal() const { return generators_.size() - dim_; }
  const IntVec& extremal(std::size_t i) const { return generators_[i]; }
  const IntVec& nonextremal(std::size_t i) const { return generators_[dim_ + i]; }
  const ConeInfo& cone() const { return cone_; }
  const LatticeBasis& lattice_full() const { return lattice_full_; }
  const LatticeBasis& lattice_extremal() const { return lattice_extremal_; }
  const std::vector<IntVec>& input_generators() const { return input_generators_; }
  const std::vector<IntVec>& removed_generators() const { return removed_; }
  const Limits& limits() const { return limits_; }
  const Int& extremal_det() const { return det_; }
  const std::vector<Int>& gamma_bounds() const { return gamma_bounds_; }

  // mu(v) = adj * v; the extremal-basis coordinates of v are mu(v) / det.
  IntVec scaled_coords(const IntVec& v) const {
    if (v.size() != dim_) throw InvalidInput("scaled_coords: dimension mismatch");
    return mat_vec(adj_, v);
  }

  std::vector<Rat> coords(const IntVec& v) const {
    IntVec mu = scaled_coords(v);
    std::vector<Rat> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = Rat(mu[i], det_);
    return out;
  }

  // v in S. Exact; thread-safe; result independent of thread count.
  bool in_semigroup(const IntVec& v) const {
    if (v.size() != dim_) throw InvalidInput("in_semigroup: dimension mismatch");
    cache_->queries.fetch_add(1, std::memory_order_relaxed);
    for (const Int& x : v)
      if (x < 0) return false;
    ensure_table();
    IntVec mu = scaled_coords(v);
    for (const Int& x : mu)
      if (x < 0) return false;  // outside the cone
    if (cache_->table_available) {
      IntVec residue(dim_);
      for (std::size_t i = 0; i < dim_; ++i) residue[i] = mod_floor(mu[i], det_);
      auto it = cache_->residue_classes.find(residue);
      if (it == cache_->residue_classes.end()) return false;  // wrong Gr(S)-coset
      for (const IntVec& m : it->second) {
        if (dominated_by(m, mu)) return true;
      }
      return false;
    }
    return membership_dfs(v);
  }

  // Maximum expression length: ord(0) = 0, ord(v) = 1 + max ord(v - g).
  Int ord(const IntVec& v) const {
    if (!in_semigroup(v)) throw NotInSemigroup("ord: " + vec_str(v) + " is not in S");
    std::map<IntVec, Int> memo;
    return ord_rec(v, memo);
  }

  Remainder remainder(const IntVec& v) const {
    if (v.size() != dim_) throw InvalidInput("remainder: dimension mismatch");
    if (!is_nonneg(v)) throw OutsideCone("remainder: " + vec_str(v) + " has a negative entry");
    IntVec mu = scaled_coords(v);
    for (const Int& x : mu)
      if (x < 0) throw OutsideCone("remainder: " + vec_str(v) + " lies outside co(S)");
    Remainder r;
    r.floors.resize(dim_);
    r.vector = v;
    for (std::size_t i = 0; i < dim_; ++i) {
      r.floors[i] = mu[i] / det_;  // mu >= 0, so truncation is the floor
      if (r.floors[i] != 0) {
        for (std::size_t c = 0; c < dim_; ++c) r.vector[c] -= r.floors[i] * generators_[i][c];
      }
    }
    return r;
  }

  // v in S-bar = Gr(S) cap co(S).
  bool in_normalization(const IntVec& v) const {
    if (v.size() != dim_) throw InvalidInput("in_normalization: dimension mismatch");
    IntVec mu = scaled_coords(v);
    for (const Int& x : mu)
      if (x < 0) return false;
    return in_lattice(lattice_full_, v);
  }

  // v in N^d \ S with v + g in S for every generator g. Checking the
  // generators suffices: S is generated by them.
  bool is_pseudo_frobenius(const IntVec& v) const {
    if (v.size() != dim_) throw InvalidInput("is_pseudo_frobenius: dimension mismatch");
    if (!is_nonneg(v)) return false;
    if (in_semigroup(v)) return false;
    for (const IntVec& g : generators_) {
      if (!in_semigroup(add(v, g))) return false;
    }
    return true;
  }

  std::uint64_t membership_queries() const {
    return cache_->queries.load(std::memory_order_relaxed);
  }
  bool membership_table_built() const {
    ensure_table();
    return cache_->table_available;
  }
  std::size_t membership_residue_classes() const {
    ensure_table();
    return cache_->residue_classes.size();
  }

 private:
  Int ord_rec(const IntVec& v, std::map<IntVec, Int>& memo) const {
    if (is_zero(v)) return 0;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    Int best = -1;
    for (const IntVec& g : generators_) {
      IntVec w = sub(v, g);
      if (!is_nonneg(w) || !in_semigroup(w)) continue;
      Int cand = ord_rec(w, memo);
      if (cand > best) best = cand;
    }
    // v in S \ {0} always has at least one expression.
    Int result = best + 1;
    memo.emplace(v, result);
    return result;
  }

  void ensure_table() const {
    std::call_once(cache_->once, [this]() {
      Int product = 1;
      for (const Int& l : gamma_bounds_) {
        product *= l;
        if (product > Int(limits_.tuple_limit)) {
          cache_->table_available = false;
          return;
        }
      }
      build_table();
      cache_->table_available = true;
    });
  }

  void build_table() const {
    std::vector<IntVec> nu;  // scaled coordinates of the non-extremal generators
    for (std::size_t i = 0; i < num_nonextremal(); ++i) nu.push_back(scaled_coords(nonextremal(i)));

    IntVec current(dim_, Int(0));
    insert_minimum(current);
    // Odometer over 0 <= n_i < l_i, keeping mu = sum n_i nu_i incrementally.
    std::vector<Int> digits(nu.size(), Int(0));
    while (true) {
      std::size_t pos = 0;
      while (pos < nu.size()) {
        digits[pos] += 1;
        if (digits[pos] < gamma_bounds_[pos]) {
          add_in_place(current, nu[pos]);
          break;
        }
        // Roll over: remove (l_pos - 1) copies of nu_pos.
        for (std::size_t c = 0; c < dim_; ++c) current[c] -= (gamma_bounds_[pos] - 1) * nu[pos][c];
        digits[pos] = 0;
        ++pos;
      }
      if (pos == nu.size()) break;
      insert_minimum(current);
    }
  }

  void insert_minimum(const IntVec& mu) const {
    IntVec residue(dim_);
    for (std::size_t i = 0; i < dim_; ++i) residue[i] = mod_floor(mu[i], det_);
    std::vector<IntVec>& minima = cache_->residue_classes[residue];
    for (const IntVec& m : minima) {
      if (dominated_by(m, mu)) return;
    }
    std::erase_if(minima, [&](const IntVec& m) { return dominated_by(mu, m); });
    minima.push_back(mu);
  }

  // Fallback when the Gamma box exceeds the tuple limit. Coarse lock: the
  // failure memo is shared between queries.
  bool membership_dfs(const IntVec& v) const {
    if (!in_lattice(lattice_full_, v)) return false;
    std::lock_guard<std::mutex> lock(cache_->dfs_mutex);
    return nat_combo_membership(generators_, v, &cache_->dfs_failed);
  }

  // Synchronized query state, boxed so the Semigroup itself stays movable.
  struct MembershipCache {
    std::once_flag once;
    bool table_available = false;
    std::map<IntVec, std::vector<IntVec>> residue_classes;
    std::mutex dfs_mutex;
    std::set<IntVec> dfs_failed;
    std::atomic<std::uint64_t> queries{0};
  };

  Limits limits_;
  std::vector<IntVec> input_generators_;
  std::vector<IntVec> removed_;
  std::vector<IntVec> generators_;  // extremal first
  std::size_t dim_ = 0;
  ConeInfo cone_;
  LatticeBasis lattice_full_;
  LatticeBasis lattice_extremal_;
  IntMatrix adj_;  // sign-normalized adjugate of the extremal basis
  Int det_ = 1;    // |det| of the extremal basis
  std::vector<Int> gamma_bounds_;
  mutable std::unique_ptr<MembershipCache> cache_;
};

}  // namespace affsemi
