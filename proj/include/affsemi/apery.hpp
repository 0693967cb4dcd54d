#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "affsemi/semigroup.hpp"

namespace affsemi {

/*
 * Ap(S, E) for E = {a_1, ..., a_d}: the elements w of S with w - a_j not in S
 * for every extremal a_j. Enumerated from the Gamma box
 *     { sum n_i a_{d+i} : 0 <= n_i < l_i },
 * which contains Ap(S, E), then filtered by the defining predicate. The table
 * also records the remainder classes C_j (fibers of the remainder map) and
 * the maxima under both partial orders.
 */
struct AperyTable {
  std::vector<IntVec> elements;  // sorted lexicographically; contains 0
  std::vector<IntVec> element_scaled_coords;
  std::vector<std::vector<Int>> element_floors;
  std::vector<std::size_t> class_of;  // element index -> remainder index

  std::vector<IntVec> remainders;  // b_0 = 0 first, then lexicographic
  std::vector<IntVec> remainder_scaled_coords;
  std::vector<std::vector<std::size_t>> classes;  // remainder index -> element indices

  std::vector<Int> gamma_bounds;
  std::vector<std::size_t> max_semigroup_idx;
  std::vector<std::size_t> max_cone_idx;

  std::size_t size() const { return elements.size(); }
  std::size_t num_nonzero_classes() const { return remainders.size() - 1; }

  std::vector<IntVec> max_semigroup() const {
    std::vector<IntVec> out;
    for (std::size_t i : max_semigroup_idx) out.push_back(elements[i]);
    return out;
  }
  std::vector<IntVec> max_cone() const {
    std::vector<IntVec> out;
    for (std::size_t i : max_cone_idx) out.push_back(elements[i]);
    return out;
  }
};

inline std::vector<Int> gamma_bounds(const Semigroup& s) { return s.gamma_bounds(); }

namespace detail {

// Runs pred over [0, n) with the configured worker count; results are
// written by index, so the output is identical to the sequential run.
template <typename Pred>
inline std::vector<char> parallel_flags(std::size_t n, int threads, Pred pred) {
  std::vector<char> flags(n, 0);
  const std::size_t min_chunk = 256;
  if (threads <= 1 || n < 2 * min_chunk) {
    for (std::size_t i = 0; i < n; ++i) flags[i] = pred(i) ? 1 : 0;
    return flags;
  }
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += nthreads) flags[i] = pred(i) ? 1 : 0;
    });
  }
  for (auto& th : pool) th.join();
  return flags;
}

}  // namespace detail

inline AperyTable apery_set(const Semigroup& s) {
  const std::size_t d = s.dim();
  const std::size_t r = s.num_nonextremal();

  Int product = 1;
  for (const Int& l : s.gamma_bounds()) {
    product *= l;
    if (product > Int(s.limits().tuple_limit)) {
      throw ResourceLimit("Gamma box has " + product.str() + "+ tuples, over the limit of " +
                          std::to_string(s.limits().tuple_limit) +
                          " (raise --limit-tuples to proceed)");
    }
  }

  // Distinct tuples can share a value when the semigroup has relations, so
  // collect into a set first; std::set on IntVec is lexicographic, which is
  // the canonical element order.
  std::set<IntVec> values;
  {
    IntVec current = zero_vec(d);
    values.insert(current);
    std::vector<Int> digits(r, Int(0));
    while (true) {
      std::size_t pos = 0;
      while (pos < r) {
        digits[pos] += 1;
        if (digits[pos] < s.gamma_bounds()[pos]) {
          add_in_place(current, s.nonextremal(pos));
          break;
        }
        for (std::size_t c = 0; c < d; ++c)
          current[c] -= (s.gamma_bounds()[pos] - 1) * s.nonextremal(pos)[c];
        digits[pos] = 0;
        ++pos;
      }
      if (pos == r) break;
      values.insert(current);
    }
  }
  std::vector<IntVec> candidates(values.begin(), values.end());

  s.membership_table_built();  // warm the cache before any worker threads
  std::vector<char> keep = detail::parallel_flags(
      candidates.size(), s.limits().threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (s.in_semigroup(sub(candidates[i], s.extremal(j)))) return false;
        }
        return true;
      });

  AperyTable table;
  table.gamma_bounds = s.gamma_bounds();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) table.elements.push_back(candidates[i]);
  }

  // Remainders and classes.
  const std::size_t n = table.elements.size();
  table.element_scaled_coords.resize(n);
  table.element_floors.resize(n);
  std::vector<IntVec> remainder_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec mu = s.scaled_coords(table.elements[i]);
    std::vector<Int> floors(d);
    IntVec rem = table.elements[i];
    for (std::size_t c = 0; c < d; ++c) {
      floors[c] = mu[c] / s.extremal_det();
      if (floors[c] != 0) {
        for (std::size_t cc = 0; cc < d; ++cc) rem[cc] -= floors[c] * s.extremal(c)[cc];
      }
    }
    table.element_scaled_coords[i] = std::move(mu);
    table.element_floors[i] = std::move(floors);
    remainder_of[i] = std::move(rem);
  }

  std::set<IntVec> distinct_nonzero;
  for (const IntVec& b : remainder_of) {
    if (!is_zero(b)) distinct_nonzero.insert(b);
  }
  table.remainders.push_back(zero_vec(d));
  table.remainders.insert(table.remainders.end(), distinct_nonzero.begin(),
                          distinct_nonzero.end());
  for (const IntVec& b : table.remainders) {
    table.remainder_scaled_coords.push_back(s.scaled_coords(b));
  }

  std::map<IntVec, std::size_t> remainder_index;
  for (std::size_t j = 0; j < table.remainders.size(); ++j) {
    remainder_index[table.remainders[j]] = j;
  }
  table.classes.resize(table.remainders.size());
  table.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = remainder_index.at(remainder_of[i]);
    table.class_of[i] = j;
    table.classes[j].push_back(i);
  }

  // Maxima. Under the semigroup order, m is kept iff no other element w has
  // w - m in S; under the cone order, iff no other element's coordinates
  // dominate componentwise.
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      if (j != i && s.in_semigroup(sub(table.elements[j], table.elements[i]))) maximal = false;
    }
    if (maximal) table.max_semigroup_idx.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      if (j != i &&
          dominated_by(table.element_scaled_coords[i], table.element_scaled_coords[j])) {
        maximal = false;
      }
    }
    if (maximal) table.max_cone_idx.push_back(i);
  }

  return table;
}

enum class ApOrder { semigroup, cone };

inline std::vector<IntVec> maxima(const AperyTable& table, ApOrder order) {
  return order == ApOrder::semigroup ? table.max_semigroup() : table.max_cone();
}

}  // namespace affsemi
