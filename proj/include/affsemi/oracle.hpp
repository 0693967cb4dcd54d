#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "affsemi/lattice.hpp"
#include "affsemi/matrix.hpp"
#include "affsemi/semigroup.hpp"

namespace affsemi {

/*
 * Brute-force reference implementations for the test suites. These read only
 * the generator data off the Semigroup and rebuild everything else from
 * exact_linalg primitives (their own HNF, their own Cramer coordinates), so
 * a bug in the membership index cannot hide here. Slowness is fine; these
 * never run outside tests.
 */
struct BoxEnumeration {
  std::int64_t bound = 0;  // box is [0, bound]^d
  std::size_t dim = 0;
  std::vector<char> s_flags;     // dynamic-programming closure of the generators
  std::vector<char> sbar_flags;  // lattice + cone test per point
  std::vector<IntVec> in_s;      // sorted lexicographically
  std::vector<IntVec> in_sbar;

  std::size_t index_of(const IntVec& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      idx = idx * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(v[i]);
    }
    return idx;
  }

  bool in_box(const IntVec& v) const {
    for (const Int& x : v) {
      if (x < 0 || x > bound) return false;
    }
    return true;
  }

  bool contains_s(const IntVec& v) const { return in_box(v) && s_flags[index_of(v)] != 0; }
  bool contains_sbar(const IntVec& v) const { return in_box(v) && sbar_flags[index_of(v)] != 0; }
};

inline BoxEnumeration enumerate_box(const Semigroup& s, std::int64_t bound) {
  const std::size_t d = s.dim();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < d; ++i) {
    points *= static_cast<std::uint64_t>(bound + 1);
    if (points > s.limits().box_limit) {
      throw ResourceLimit("oracle box of " + std::to_string(bound + 1) + "^" +
                          std::to_string(d) + " points exceeds the box limit");
    }
  }

  BoxEnumeration box;
  box.bound = bound;
  box.dim = d;
  box.s_flags.assign(points, 0);
  box.sbar_flags.assign(points, 0);

  // Generators as machine integers; any generator outside the box can never
  // be subtracted and is skipped.
  std::vector<std::vector<std::int64_t>> gens;
  for (const IntVec& g : s.generators()) {
    bool fits = true;
    std::vector<std::int64_t> gi(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (g[i] > bound) fits = false;
      gi[i] = static_cast<std::int64_t>(g[i]);
    }
    if (fits) gens.push_back(gi);
  }

  const std::vector<IntVec>& basis = s.cone().extremal_generators;
  IntMatrix bm = IntMatrix::from_columns(basis);
  Int det = determinant(bm);
  IntMatrix adj = adjugate(bm);
  if (det < 0) {
    det = -det;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) adj.at(i, j) = -adj.at(i, j);
  }
  LatticeBasis lattice = hnf(IntMatrix::from_columns(s.generators()));

  // Row-major sweep: p - g is always earlier in the sweep, so one pass
  // suffices for the additive closure.
  std::vector<std::int64_t> p(d, 0);
  IntVec pv(d, Int(0));
  std::size_t idx = 0;
  while (true) {
    bool member = std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 0; });
    for (const auto& g : gens) {
      if (member) break;
      std::size_t qidx = 0;
      bool ok = true;
      for (std::size_t i = 0; i < d; ++i) {
        std::int64_t q = p[i] - g[i];
        if (q < 0) {
          ok = false;
          break;
        }
        qidx = qidx * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(q);
      }
      if (ok && box.s_flags[qidx]) member = true;
    }
    if (member) {
      box.s_flags[idx] = 1;
      box.in_s.push_back(pv);
    }

    IntVec mu = mat_vec(adj, pv);
    bool cone_ok = std::all_of(mu.begin(), mu.end(), [](const Int& x) { return x >= 0; });
    if (cone_ok && in_lattice(lattice, pv)) {
      box.sbar_flags[idx] = 1;
      box.in_sbar.push_back(pv);
    }

    // Odometer.
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (p[pos] < bound) {
        ++p[pos];
        pv[pos] = p[pos];
        break;
      }
      p[pos] = 0;
      pv[pos] = 0;
      if (pos == 0) return box;
    }
    idx = 0;
    for (std::size_t i = 0; i < d; ++i) {
      idx = idx * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(p[i]);
    }
  }
}

// Gamma bounds recomputed from scratch (Cramer + lcm of denominators), then
// the box bound needed to contain sum (l_i - 1) * a_{d+i}.
inline std::int64_t oracle_gamma_bound(const Semigroup& s) {
  const std::vector<IntVec>& basis = s.cone().extremal_generators;
  IntVec total = zero_vec(s.dim());
  for (std::size_t i = 0; i < s.num_nonextremal(); ++i) {
    const IntVec& g = s.nonextremal(i);
    std::vector<Rat> lambda = coords_in_basis(basis, g);
    Int l = 1;
    for (const Rat& r : lambda) l = lcm_int(l, r.den());
    for (std::size_t c = 0; c < s.dim(); ++c) total[c] += (l - 1) * g[c];
  }
  Int mx = 0;
  for (const Int& x : total) {
    if (x > mx) mx = x;
  }
  return static_cast<std::int64_t>(mx);
}

inline std::vector<IntVec> oracle_apery(const Semigroup& s, std::int64_t bound) {
  BoxEnumeration box = enumerate_box(s, bound);
  std::vector<IntVec> out;
  for (const IntVec& v : box.in_s) {
    bool apery = true;
    for (std::size_t j = 0; j < s.dim() && apery; ++j) {
      IntVec w = sub(v, s.cone().extremal_generators[j]);
      if (is_nonneg(w) && box.s_flags[box.index_of(w)]) apery = false;
    }
    if (apery) out.push_back(v);
  }
  return out;
}

inline std::vector<IntVec> oracle_conductor_elements(const Semigroup& s, std::int64_t bound) {
  std::vector<IntVec> ap = oracle_apery(s, bound);

  // Remainders of the Apery elements, from scratch.
  const std::vector<IntVec>& basis = s.cone().extremal_generators;
  std::set<IntVec> remainders;
  Int max_entry = 0;
  for (const IntVec& w : ap) {
    std::vector<Rat> lambda = coords_in_basis(basis, w);
    IntVec rem = w;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Int fl = lambda[i].floor();
      if (fl != 0) {
        for (std::size_t c = 0; c < s.dim(); ++c) rem[c] -= fl * basis[i][c];
      }
    }
    if (!is_zero(rem)) {
      for (const Int& x : rem) {
        if (x > max_entry) max_entry = x;
      }
      remainders.insert(rem);
    }
  }

  const std::int64_t extended = bound + static_cast<std::int64_t>(max_entry);
  BoxEnumeration big = enumerate_box(s, extended);

  std::vector<IntVec> out;
  for (const IntVec& c : big.in_s) {
    bool inside = true;
    for (const Int& x : c) {
      if (x > bound) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    bool member = true;
    for (const IntVec& b : remainders) {
      IntVec cb = add(c, b);
      if (!big.s_flags[big.index_of(cb)]) {
        member = false;
        break;
      }
    }
    if (member) out.push_back(c);
  }
  return out;
}

}  // namespace affsemi
