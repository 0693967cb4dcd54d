// Acceptance suite: the golden results from the worked examples plus the
// randomized differential criterion. One line per criterion; exact set
// equality everywhere (all arithmetic is exact, there is no tolerance).
// Exit status 0 iff every criterion passes.

#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "affsemi/affsemi.hpp"
#include "property_suite.hpp"
#include "test_util.hpp"

using namespace affsemi;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string show_set(const std::vector<IntVec>& vs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ", ";
    os << vec_str(vs[i]);
  }
  os << "}";
  return os.str();
}

void expect_set_eq(const std::vector<IntVec>& got, std::vector<IntVec> want,
                   const std::string& label) {
  sort_lex(want);
  std::vector<IntVec> g = got;
  sort_lex(g);
  expect(g == want, label + ": got " + show_set(g) + ", want " + show_set(want));
}

struct Built {
  Semigroup s;
  AperyTable t;
  explicit Built(std::vector<IntVec> gens, Limits lim = {})
      : s(std::move(gens), lim), t(apery_set(s)) {}
};

void criterion_1() {
  Built b(VS({{5, 3, 1}, {1, 5, 2}, {8, 3, 5}, {2, 1, 1}, {2, 2, 1}}));
  expect(b.t.elements.size() == 91,
         "|Ap(S,E)| = " + show(b.t.elements.size()) + ", want 91");

  const IntVec a4 = V({2, 1, 1});
  const IntVec a5 = V({2, 2, 1});
  std::vector<IntVec> expected = {zero_vec(3)};
  for (long long r = 0; r <= 18; ++r) {
    expected.push_back(add(scale(Int(r), a4), a5));
    expected.push_back(add(scale(Int(r), a4), scale(Int(2), a5)));
  }
  for (long long s = 0; s <= 16; ++s) {
    expected.push_back(add(scale(Int(s), a4), scale(Int(3), a5)));
    expected.push_back(add(scale(Int(s), a4), scale(Int(4), a5)));
  }
  for (long long t = 1; t <= 18; ++t) expected.push_back(scale(Int(t), a4));
  expect_set_eq(b.t.elements, expected, "Ap(S,E) parametrized description");

  expect(is_cohen_macaulay(b.s, b.t, true), "instance should be Cohen-Macaulay");

  std::vector<IntVec> tuple;
  for (std::size_t j = 1; j < b.t.classes.size(); ++j) {
    tuple.push_back(b.t.elements[b.t.classes[j][0]]);
  }
  FVector f = f_vector(b.s, b.t, tuple);
  expect(f.value == V({40, 23, 20}),
         "f-vector value = " + vec_str(f.value) + ", want (40, 23, 20)");

  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators,
                VS({{29, 15, 14},
                    {29, 16, 14},
                    {29, 18, 15},
                    {30, 15, 14},
                    {30, 16, 14},
                    {31, 15, 15},
                    {31, 16, 14},
                    {31, 18, 16},
                    {33, 18, 17},
                    {33, 19, 15},
                    {35, 18, 18}}),
                "conductor minimal generators");
}

void criterion_2() {
  Built b(VS({{3, 0}, {0, 3}, {5, 2}, {2, 5}}));
  expect_set_eq(b.t.elements, VS({{0, 0}, {5, 2}, {2, 5}, {7, 7}, {10, 4}, {4, 10}}),
                "Ap(S,E)");
  expect_set_eq(b.t.remainders, VS({{0, 0}, {1, 1}, {2, 2}}), "remainders");
  std::vector<IntVec> c1, c2;
  for (std::size_t i : b.t.classes[1]) c1.push_back(b.t.elements[i]);
  for (std::size_t i : b.t.classes[2]) c2.push_back(b.t.elements[i]);
  expect_set_eq(c1, VS({{7, 7}, {10, 4}, {4, 10}}), "class C_1");
  expect_set_eq(c2, VS({{5, 2}, {2, 5}}), "class C_2");
  expect(!is_cohen_macaulay(b.s, b.t, true), "should not be Cohen-Macaulay");
  expect(quasi_frobenius(b.s, b.t).size() == 3, "typ should be 3");
  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators,
                VS({{5, 5}, {8, 2}, {2, 8}}), "conductor");
  expect_set_eq(normalization_generators(b.s, b.t).generators,
                VS({{3, 0}, {0, 3}, {1, 1}}), "normalization generators");
}

void criterion_3() {
  Built n1(VS({{3, 0}, {0, 3}, {5, 2}, {2, 5}}));
  expect(quasi_frobenius(n1.s, n1.t).size() == 3, "typ should be 3 for n = 1");
  expect(!is_cohen_macaulay(n1.s, n1.t), "n = 1 member should not be Cohen-Macaulay");

  Built n2(VS({{3, 0}, {0, 9}, {5, 2}, {2, 11}}));
  expect(quasi_frobenius(n2.s, n2.t).size() == 9, "typ should be 9 for n = 2");
  expect(!is_cohen_macaulay(n2.s, n2.t), "n = 2 member should not be Cohen-Macaulay");
}

void criterion_4() {
  for (long long a : {3, 4, 5}) {
    const long long q = a * a;
    Built fam(VS({{q, 0}, {0, q}, {q - a, q - a}, {q - a + 1, q - a + 1}, {q - 1, q - 1}}));
    expect(is_cohen_macaulay(fam.s, fam.t, true),
           "a = " + show(a) + " member should be Cohen-Macaulay");
    std::size_t typ = quasi_frobenius(fam.s, fam.t).size();
    expect(typ == static_cast<std::size_t>(2 * a - 4),
           "a = " + show(a) + ": typ = " + show(typ) + ", want " + show(2 * a - 4));
  }
}

void criterion_5() {
  Built b(VS({{5, 2}, {2, 2}, {2, 1}, {5, 3}}));
  expect_set_eq(b.t.elements, VS({{0, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}, {5, 3}}), "Ap(S,E)");
  expect_set_eq(b.t.remainders, VS({{0, 0}, {2, 1}, {4, 2}, {1, 1}, {3, 2}, {5, 3}}),
                "remainders");
  expect(is_cohen_macaulay(b.s, b.t, true), "should be Cohen-Macaulay");
  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators, VS({{5, 2}, {4, 2}}),
                "conductor");
  expect_set_eq(normalization_generators(b.s, b.t).generators, VS({{1, 1}, {2, 1}, {5, 2}}),
                "normalization generators");
}

void criterion_6() {
  Built b(VS({{2, 0}, {0, 2}, {4, 1}, {2, 3}}));
  expect(!is_cohen_macaulay(b.s, b.t, true), "should not be Cohen-Macaulay");
  expect_set_eq(b.t.max_semigroup(), VS({{4, 1}, {2, 3}}), "semigroup-order maxima");
  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators, VS({{4, 0}, {2, 2}}),
                "conductor");
  expect_set_eq(normalization_generators(b.s, b.t).generators, VS({{2, 0}, {0, 1}}),
                "normalization generators");
}

void criterion_7() {
  Built b(VS({{2, 1}, {1, 5}, {1, 1}, {4, 5}}));
  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators,
                VS({{4, 5}, {4, 4}, {4, 3}, {4, 2}}), "conductor");
  expect_set_eq(b.t.max_cone(), VS({{6, 7}}), "cone-order maxima");
  expect(is_cohen_macaulay(b.s, b.t, true), "should be Cohen-Macaulay");
}

void criterion_8() {
  Built b(VS({{1, 5}, {5, 1}, {2, 2}, {3, 3}}));
  expect(is_cohen_macaulay(b.s, b.t, true), "should be Cohen-Macaulay");
  expect(is_gorenstein(b.s, b.t), "should be Gorenstein");
  ConductorSet cond = conductor_min_gens(b.s, b.t);
  expect_set_eq(cond.minimal_generators, VS({{2, 2}}), "conductor");
  auto fast = conductor_fast_path(b.s, b.t);
  expect(fast.has_value() && fast->fast_path_used == FastPath::principal,
         "fast path should mark the conductor principal");
}

void criterion_9() {
  Built b(VS({{3, 0}, {0, 3}, {2, 1}}));
  expect(is_cohen_macaulay(b.s, b.t, true), "should be Cohen-Macaulay");
  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators, VS({{2, 1}, {3, 0}}),
                "conductor");
  expect_set_eq(normalization_generators(b.s, b.t).generators,
                VS({{3, 0}, {0, 3}, {1, 2}, {2, 1}}), "normalization generators");
}

void criterion_10() {
  Built b(VS({{1, 2, 1}, {2, 3, 1}, {2, 1, 3}, {2, 3, 2}, {2, 2, 2}, {3, 3, 3}}));
  expect_set_eq(conductor_min_gens(b.s, b.t).minimal_generators,
                VS({{1, 2, 1}, {2, 2, 2}}), "conductor");
}

void criterion_11() {
  prop::SuiteResult main_pool = prop::run_main_pool(0xA5EED5, 72);
  expect(main_pool.instances == 216, "main pool size");
  expect(main_pool.checks > 50'000, "differential volume");
  prop::SuiteResult d2_pool = prop::run_d2_pool(0xBEEF01, 60);
  expect(d2_pool.instances == 60, "d+2 pool size");
  expect(main_pool.cm_d2_hits + d2_pool.cm_d2_hits >= 25,
         "type bound exercised on too few Cohen-Macaulay instances");
}

void criterion_12() {
  Built b357(VS({{3}, {5}, {7}}));
  expect(quasi_frobenius(b357.s, b357.t).size() == 2, "typ of <3,5,7> should be 2");
  expect_set_eq(quasi_frobenius(b357.s, b357.t), VS({{2}, {4}}), "QF of <3,5,7>");
  expect(frobenius_number(b357.s) == 4, "Frobenius number of <3,5,7> should be 4");
  expect_set_eq(conductor_min_gens(b357.s, b357.t).minimal_generators, VS({{5}}),
                "conductor of <3,5,7>");

  Built b23(VS({{2}, {3}}));
  expect(is_gorenstein(b23.s, b23.t), "<2,3> should be Gorenstein");
  expect(frobenius_number(b23.s) == 1, "Frobenius number of <2,3> should be 1");
}

struct Criterion {
  int id;
  std::string label;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "3D five-generator example: 91 Apery elements, CM, f-vector, 11 conductor generators",
       criterion_1},
      {2, "running 2D example: Apery set, classes, typ 3, conductor, normalization", criterion_2},
      {3, "3^n family: typ 3 and 9, never Cohen-Macaulay", criterion_3},
      {4, "2a-4 family: Cohen-Macaulay with typ 2, 4, 6", criterion_4},
      {5, "singleton-class example: Apery data, conductor {(5,2),(4,2)}", criterion_5},
      {6, "Buchsbaum example: maxima, conductor {(4,0),(2,2)}", criterion_6},
      {7, "unique cone-order maximum example: conductor {(4,5),(4,4),(4,3),(4,2)}", criterion_7},
      {8, "Gorenstein example: principal conductor {(2,2)}", criterion_8},
      {9, "three-generator example: conductor {(2,1),(3,0)}, four normalization generators",
       criterion_9},
      {10, "3D six-generator example: conductor {(1,2,1),(2,2,2)}", criterion_10},
      {11, "randomized property suite: oracle differentials and structural laws", criterion_11},
      {12, "numerical regression: <3,5,7> and <2,3>", criterion_12},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::cout << "PASS criterion " << c.id << ": " << c.label << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << c.id << ": " << c.label << " -- " << e.what() << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
