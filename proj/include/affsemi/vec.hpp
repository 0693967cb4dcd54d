#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "affsemi/errors.hpp"
#include "affsemi/integer.hpp"

namespace affsemi {

// A point of Z^d. Elements of the semigroup, generators, remainders and
// quasi-Frobenius elements (which may have negative entries) all use this.
using IntVec = std::vector<Int>;

inline IntVec zero_vec(std::size_t d) { return IntVec(d, 0); }

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool is_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline void add_in_place(IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// a <= b componentwise.
inline bool dominated_by(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Int coordinate_sum(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

// gcd of the entries; 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_lex(std::vector<IntVec>& vs) { std::sort(vs.begin(), vs.end(), lex_less); }

inline std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// Parses one vector in the CLI syntax: comma-separated integers, whitespace
// ignored, e.g. " 3 , 0 ".
inline IntVec parse_vec(const std::string& text) {
  IntVec out;
  std::string entry;
  auto flush = [&]() {
    if (entry.empty()) throw InvalidInput("empty vector entry in \"" + text + "\"");
    try {
      out.emplace_back(entry);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer \"" + entry + "\"");
    }
    entry.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == ',') {
      flush();
    } else {
      entry.push_back(c);
    }
  }
  flush();
  return out;
}

// Parses a generator list: semicolon-separated vectors.
inline std::vector<IntVec> parse_vec_list(const std::string& text) {
  std::vector<IntVec> out;
  std::string part;
  auto flush = [&]() {
    out.push_back(parse_vec(part));
    part.clear();
  };
  for (char c : text) {
    if (c == ';') {
      flush();
    } else {
      part.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace affsemi
