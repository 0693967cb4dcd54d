#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "affsemi/apery.hpp"
#include "affsemi/conductor.hpp"
#include "affsemi/semigroup.hpp"
#include "affsemi/structure.hpp"

namespace affsemi {

// Wall time and cache counters. Rendered by the text view only; the JSON
// serialization must be byte-identical across runs and thread counts, so
// nothing here goes into it.
struct ReportStats {
  double total_ms = 0.0;
  std::uint64_t membership_queries = 0;
  bool membership_table_built = false;
  std::size_t membership_residue_classes = 0;
};

struct AnalysisReport {
  std::string schema = "asg-report/1";

  std::vector<IntVec> input_generators;
  std::vector<IntVec> minimal_generators;  // extremal first, as analyzed
  std::vector<IntVec> removed_redundant;

  std::size_t dimension = 0;
  std::vector<IntVec> extreme_ray_directions;
  std::vector<IntVec> extremal_generators;
  bool simplicial = false;

  std::vector<Int> gamma_bounds;
  std::vector<IntVec> apery_elements;
  std::vector<IntVec> apery_remainders;            // b_0 = 0 first
  std::vector<std::vector<IntVec>> apery_classes;  // one list per remainder
  std::vector<IntVec> max_semigroup;
  std::vector<IntVec> max_cone;

  std::size_t typ = 0;
  std::vector<IntVec> quasi_frobenius_set;
  bool cohen_macaulay = false;
  bool buchsbaum = false;
  bool gorenstein = false;
  bool normal = false;
  bool neg_qf_in_cone = false;

  std::vector<IntVec> normalization_gens;

  std::vector<IntVec> conductor_generators;
  std::uint64_t conductor_candidates_examined = 0;
  std::string conductor_fast_path = "none";

  ReportStats stats;  // not serialized, not compared

  friend bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
    return a.schema == b.schema && a.input_generators == b.input_generators &&
           a.minimal_generators == b.minimal_generators &&
           a.removed_redundant == b.removed_redundant && a.dimension == b.dimension &&
           a.extreme_ray_directions == b.extreme_ray_directions &&
           a.extremal_generators == b.extremal_generators && a.simplicial == b.simplicial &&
           a.gamma_bounds == b.gamma_bounds && a.apery_elements == b.apery_elements &&
           a.apery_remainders == b.apery_remainders && a.apery_classes == b.apery_classes &&
           a.max_semigroup == b.max_semigroup && a.max_cone == b.max_cone && a.typ == b.typ &&
           a.quasi_frobenius_set == b.quasi_frobenius_set &&
           a.cohen_macaulay == b.cohen_macaulay && a.buchsbaum == b.buchsbaum &&
           a.gorenstein == b.gorenstein && a.normal == b.normal &&
           a.neg_qf_in_cone == b.neg_qf_in_cone &&
           a.normalization_gens == b.normalization_gens &&
           a.conductor_generators == b.conductor_generators &&
           a.conductor_candidates_examined == b.conductor_candidates_examined &&
           a.conductor_fast_path == b.conductor_fast_path;
  }
};

namespace detail {

// Entries that fit in int64 are emitted as JSON numbers, anything larger as a
// decimal string; parsing accepts both.
inline nlohmann::json json_int(const Int& x) {
  if (x >= Int(std::numeric_limits<std::int64_t>::min()) &&
      x <= Int(std::numeric_limits<std::int64_t>::max())) {
    return nlohmann::json(static_cast<std::int64_t>(x));
  }
  return nlohmann::json(x.str());
}

inline Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

inline nlohmann::json json_vec(const IntVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Int& x : v) out.push_back(json_int(x));
  return out;
}

inline IntVec vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("expected a vector, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

inline nlohmann::json json_vec_list(const std::vector<IntVec>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const IntVec& v : vs) out.push_back(json_vec(v));
  return out;
}

inline std::vector<IntVec> vec_list_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("expected a list of vectors, got " + j.dump());
  std::vector<IntVec> vs;
  for (const auto& v : j) vs.push_back(vec_from_json(v));
  return vs;
}

}  // namespace detail

inline nlohmann::json to_json(const AnalysisReport& r) {
  using detail::json_int;
  using detail::json_vec_list;
  nlohmann::json j;
  j["schema"] = r.schema;
  j["input"] = {{"generators", json_vec_list(r.input_generators)},
                {"minimal_generators", json_vec_list(r.minimal_generators)},
                {"removed_redundant", json_vec_list(r.removed_redundant)}};
  j["cone"] = {{"dimension", r.dimension},
               {"extreme_ray_directions", json_vec_list(r.extreme_ray_directions)},
               {"extremal_generators", json_vec_list(r.extremal_generators)},
               {"simplicial", r.simplicial}};
  nlohmann::json gb = nlohmann::json::array();
  for (const Int& l : r.gamma_bounds) gb.push_back(json_int(l));
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : r.apery_classes) classes.push_back(json_vec_list(cls));
  j["apery"] = {{"gamma_bounds", gb},
                {"size", r.apery_elements.size()},
                {"elements", json_vec_list(r.apery_elements)},
                {"remainders", json_vec_list(r.apery_remainders)},
                {"classes", classes},
                {"max_semigroup_order", json_vec_list(r.max_semigroup)},
                {"max_cone_order", json_vec_list(r.max_cone)}};
  j["classification"] = {{"typ", r.typ},
                         {"quasi_frobenius", json_vec_list(r.quasi_frobenius_set)},
                         {"cohen_macaulay", r.cohen_macaulay},
                         {"buchsbaum", r.buchsbaum},
                         {"gorenstein", r.gorenstein},
                         {"normal", r.normal},
                         {"neg_qf_in_cone", r.neg_qf_in_cone}};
  j["normalization"] = {{"generators", json_vec_list(r.normalization_gens)}};
  j["conductor"] = {{"minimal_generators", json_vec_list(r.conductor_generators)},
                    {"candidates_examined", r.conductor_candidates_examined},
                    {"fast_path", r.conductor_fast_path}};
  return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
  using detail::vec_list_from_json;
  AnalysisReport r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != "asg-report/1") throw InvalidInput("unknown report schema " + r.schema);
  const auto& input = j.at("input");
  r.input_generators = vec_list_from_json(input.at("generators"));
  r.minimal_generators = vec_list_from_json(input.at("minimal_generators"));
  r.removed_redundant = vec_list_from_json(input.at("removed_redundant"));
  const auto& cone = j.at("cone");
  r.dimension = cone.at("dimension").get<std::size_t>();
  r.extreme_ray_directions = vec_list_from_json(cone.at("extreme_ray_directions"));
  r.extremal_generators = vec_list_from_json(cone.at("extremal_generators"));
  r.simplicial = cone.at("simplicial").get<bool>();
  const auto& ap = j.at("apery");
  for (const auto& l : ap.at("gamma_bounds")) r.gamma_bounds.push_back(detail::int_from_json(l));
  r.apery_elements = vec_list_from_json(ap.at("elements"));
  r.apery_remainders = vec_list_from_json(ap.at("remainders"));
  for (const auto& cls : ap.at("classes")) r.apery_classes.push_back(vec_list_from_json(cls));
  r.max_semigroup = vec_list_from_json(ap.at("max_semigroup_order"));
  r.max_cone = vec_list_from_json(ap.at("max_cone_order"));
  const auto& cl = j.at("classification");
  r.typ = cl.at("typ").get<std::size_t>();
  r.quasi_frobenius_set = vec_list_from_json(cl.at("quasi_frobenius"));
  r.cohen_macaulay = cl.at("cohen_macaulay").get<bool>();
  r.buchsbaum = cl.at("buchsbaum").get<bool>();
  r.gorenstein = cl.at("gorenstein").get<bool>();
  r.normal = cl.at("normal").get<bool>();
  r.neg_qf_in_cone = cl.at("neg_qf_in_cone").get<bool>();
  r.normalization_gens = vec_list_from_json(j.at("normalization").at("generators"));
  const auto& cond = j.at("conductor");
  r.conductor_generators = vec_list_from_json(cond.at("minimal_generators"));
  r.conductor_candidates_examined = cond.at("candidates_examined").get<std::uint64_t>();
  r.conductor_fast_path = cond.at("fast_path").get<std::string>();
  return r;
}

// Full pipeline: cone -> semigroup -> Apery -> classification -> normalization
// -> conductor, with the fast path cross-checked against the general search
// whenever it fires.
inline AnalysisReport analyze(const std::vector<IntVec>& generators, Limits limits = {}) {
  const auto t0 = std::chrono::steady_clock::now();

  Semigroup s(generators, limits);
  AperyTable table = apery_set(s);
  Classification cls = classify(s, table);
  NormalizationGens norm = normalization_generators(s, table);
  ConductorSet cond = conductor_min_gens(s, table);
  std::optional<ConductorSet> fast = conductor_fast_path(s, table);
  if (fast) {
    if (fast->minimal_generators != cond.minimal_generators) {
      throw Error("conductor fast path disagrees with the general search; this is a bug");
    }
    cond.fast_path_used = fast->fast_path_used;
  }

  AnalysisReport r;
  r.input_generators = s.input_generators();
  r.minimal_generators = s.generators();
  r.removed_redundant = s.removed_generators();
  r.dimension = s.dim();
  r.extreme_ray_directions = s.cone().extreme_ray_directions;
  r.extremal_generators = s.cone().extremal_generators;
  r.simplicial = s.cone().is_simplicial;
  r.gamma_bounds = table.gamma_bounds;
  r.apery_elements = table.elements;
  r.apery_remainders = table.remainders;
  for (const auto& cls_idx : table.classes) {
    std::vector<IntVec> members;
    for (std::size_t i : cls_idx) members.push_back(table.elements[i]);
    r.apery_classes.push_back(std::move(members));
  }
  r.max_semigroup = table.max_semigroup();
  r.max_cone = table.max_cone();
  r.typ = cls.typ;
  r.quasi_frobenius_set = cls.qf;
  r.cohen_macaulay = cls.cohen_macaulay;
  r.buchsbaum = cls.buchsbaum;
  r.gorenstein = cls.gorenstein;
  r.normal = cls.normal;
  r.neg_qf_in_cone = cls.neg_qf_in_cone;
  r.normalization_gens = norm.generators;
  r.conductor_generators = cond.minimal_generators;
  r.conductor_candidates_examined = cond.candidates_examined;
  r.conductor_fast_path = fast_path_name(cond.fast_path_used);

  // Internal consistency: normal <=> the conductor is all of S <=> 0 is a
  // conductor generator.
  const bool zero_in_conductor =
      std::find(r.conductor_generators.begin(), r.conductor_generators.end(),
                zero_vec(s.dim())) != r.conductor_generators.end();
  if (zero_in_conductor != r.normal) {
    throw Error("normality and conductor disagree; this is a bug");
  }

  const auto t1 = std::chrono::steady_clock::now();
  r.stats.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.stats.membership_queries = s.membership_queries();
  r.stats.membership_table_built = s.membership_table_built();
  r.stats.membership_residue_classes = s.membership_residue_classes();
  return r;
}

inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto list = [&](const std::vector<IntVec>& vs) {
    std::ostringstream ls;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) ls << " ";
      ls << vec_str(vs[i]);
    }
    return ls.str();
  };
  os << "generators (input):     " << list(r.input_generators) << "\n";
  if (!r.removed_redundant.empty()) {
    os << "removed as redundant:   " << list(r.removed_redundant) << "\n";
  }
  os << "minimal generators:     " << list(r.minimal_generators) << "\n";
  os << "extremal generators:    " << list(r.extremal_generators) << "\n";
  os << "Ap(S,E):                " << r.apery_elements.size() << " elements\n";
  if (r.apery_elements.size() <= 24) {
    os << "  elements:             " << list(r.apery_elements) << "\n";
  }
  os << "remainders r(Ap(S,E)):  " << list(r.apery_remainders) << "\n";
  os << "class sizes:            ";
  for (std::size_t i = 0; i < r.apery_classes.size(); ++i) {
    if (i) os << " ";
    os << r.apery_classes[i].size();
  }
  os << "\n";
  os << "max under semigroup order: " << list(r.max_semigroup) << "\n";
  os << "max under cone order:      " << list(r.max_cone) << "\n";
  os << "typ(S) (equals Cohen-Macaulay type of K[S] when CM): " << r.typ << "\n";
  os << "quasi-Frobenius:        " << list(r.quasi_frobenius_set) << "\n";
  os << "Cohen-Macaulay:         " << (r.cohen_macaulay ? "true" : "false") << "\n";
  os << "Buchsbaum:              " << (r.buchsbaum ? "true" : "false")
     << (r.cohen_macaulay ? "" : " (per criterion)") << "\n";
  os << "Gorenstein:             " << (r.gorenstein ? "true" : "false") << "\n";
  os << "normal:                 " << (r.normal ? "true" : "false") << "\n";
  os << "-QF(S) in co(S):        " << (r.neg_qf_in_cone ? "true" : "false") << "\n";
  os << "normalization gens:     " << list(r.normalization_gens) << "\n";
  os << "conductor min gens:     " << list(r.conductor_generators) << "\n";
  os << "conductor fast path:    " << r.conductor_fast_path << " ("
     << r.conductor_candidates_examined << " candidates examined)\n";
  os << "time: " << r.stats.total_ms << " ms, membership queries: " << r.stats.membership_queries
     << ", residue classes: " << r.stats.membership_residue_classes << "\n";
  return os.str();
}

}  // namespace affsemi
