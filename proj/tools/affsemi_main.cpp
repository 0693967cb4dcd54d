// Command-line front end.
//
// Subcommands: analyze, apery, type, check <cm|gorenstein|buchsbaum|normal>,
// normalization, conductor, frobenius (d = 1 only).
// Exit codes: 0 success, 2 malformed input, 3 not simplicial / rank-deficient,
// 4 resource limit exceeded. Diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affsemi/affsemi.hpp"

namespace {

struct Options {
  std::string gens_text;
  std::string file_path;
  bool json = false;
  std::uint64_t limit_tuples = 10'000'000;
  std::uint64_t limit_box = 1'000'000;
  int threads = 1;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--gens", opt.gens_text,
                  "generators, semicolon-separated vectors of comma-separated entries, "
                  "e.g. \"3,0;0,3;5,2;2,5\"");
  cmd->add_option("--file", opt.file_path, "JSON input file: {\"generators\": [[...], ...]}");
  cmd->add_flag("--json", opt.json, "emit JSON instead of text");
  cmd->add_option("--limit-tuples", opt.limit_tuples,
                  "cap on Gamma-box / class-tuple enumerations (default 10^7)");
  cmd->add_option("--limit-box", opt.limit_box, "cap on oracle box sizes (default 10^6)");
  cmd->add_option("--threads", opt.threads, "worker threads for the enumeration scans");
}

std::vector<affsemi::IntVec> load_generators(const Options& opt) {
  using affsemi::InvalidInput;
  if (!opt.gens_text.empty() && !opt.file_path.empty()) {
    throw InvalidInput("give either --gens or --file, not both");
  }
  if (!opt.gens_text.empty()) return affsemi::parse_vec_list(opt.gens_text);
  if (!opt.file_path.empty()) {
    std::ifstream in(opt.file_path);
    if (!in) throw InvalidInput("cannot open " + opt.file_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw InvalidInput(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("generators")) throw InvalidInput("input file lacks a \"generators\" key");
    return affsemi::detail::vec_list_from_json(j.at("generators"));
  }
  throw InvalidInput("no generators given; use --gens or --file");
}

affsemi::Limits make_limits(const Options& opt) {
  affsemi::Limits lim;
  lim.tuple_limit = opt.limit_tuples;
  lim.box_limit = opt.limit_box;
  lim.threads = opt.threads < 1 ? 1 : opt.threads;
  return lim;
}

// The d = 1 reduction by the gcd is reported, never applied.
void note_gcd(const std::vector<affsemi::IntVec>& gens) {
  if (gens.empty() || gens[0].size() != 1) return;
  affsemi::Int g = 0;
  for (const auto& v : gens) g = affsemi::gcd_int(g, v[0]);
  if (g > 1) {
    std::cerr << "note: d = 1 generators have gcd " << g
              << " > 1; analyzing as-is in N^1 without rescaling (the quotient semigroup is "
                 "isomorphic but not computed)\n";
  }
}

void print_vectors(const std::vector<affsemi::IntVec>& vs) {
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << v[i];
    }
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact invariants of simplicial affine semigroups"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  CLI::App* apery_cmd = app.add_subcommand("apery", "Apery set Ap(S,E)");
  CLI::App* type_cmd = app.add_subcommand("type", "typ(S)");
  CLI::App* check_cmd = app.add_subcommand("check", "decide a ring property");
  CLI::App* norm_cmd = app.add_subcommand("normalization", "minimal generators of S-bar");
  CLI::App* cond_cmd =
      app.add_subcommand("conductor", "minimal generators of the conductor ideal");
  CLI::App* frob_cmd = app.add_subcommand("frobenius", "Frobenius number (d = 1 only)");

  std::string property;
  check_cmd->add_option("property", property, "one of: cm, gorenstein, buchsbaum, normal")
      ->required();

  for (CLI::App* cmd :
       {analyze_cmd, apery_cmd, type_cmd, check_cmd, norm_cmd, cond_cmd, frob_cmd}) {
    add_common_flags(cmd, opt);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message to stderr
    return 2;
  }

  std::vector<affsemi::IntVec> gens = load_generators(opt);
  note_gcd(gens);
  affsemi::Limits limits = make_limits(opt);

  if (frob_cmd->parsed()) {
    affsemi::Semigroup s(gens, limits);
    affsemi::Int f = affsemi::frobenius_number(s);
    if (opt.json) {
      nlohmann::json j{{"schema", "asg-report/1"}, {"frobenius", affsemi::detail::json_int(f)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << f << "\n";
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    affsemi::Semigroup s(gens, limits);
    affsemi::AperyTable table = affsemi::apery_set(s);
    bool verdict;
    if (property == "cm") {
      verdict = affsemi::is_cohen_macaulay(s, table);
    } else if (property == "gorenstein") {
      verdict = affsemi::is_gorenstein(s, table);
    } else if (property == "buchsbaum") {
      verdict = affsemi::is_buchsbaum(s, table);
    } else if (property == "normal") {
      verdict = affsemi::is_normal(s, table);
    } else {
      throw affsemi::InvalidInput("unknown property \"" + property +
                                  "\"; expected cm, gorenstein, buchsbaum or normal");
    }
    std::cout << (verdict ? "true" : "false") << "\n";
    return 0;
  }

  if (type_cmd->parsed()) {
    affsemi::Semigroup s(gens, limits);
    affsemi::AperyTable table = affsemi::apery_set(s);
    std::cout << table.max_semigroup_idx.size() << "\n";
    return 0;
  }

  if (apery_cmd->parsed()) {
    affsemi::Semigroup s(gens, limits);
    affsemi::AperyTable table = affsemi::apery_set(s);
    if (opt.json) {
      nlohmann::json j{{"schema", "asg-report/1"},
                       {"size", table.elements.size()},
                       {"elements", affsemi::detail::json_vec_list(table.elements)},
                       {"remainders", affsemi::detail::json_vec_list(table.remainders)}};
      std::cout << j.dump() << "\n";
    } else {
      print_vectors(table.elements);
    }
    return 0;
  }

  if (norm_cmd->parsed() || cond_cmd->parsed()) {
    affsemi::Semigroup s(gens, limits);
    affsemi::AperyTable table = affsemi::apery_set(s);
    std::vector<affsemi::IntVec> out;
    if (norm_cmd->parsed()) {
      out = affsemi::normalization_generators(s, table).generators;
    } else {
      out = affsemi::conductor_min_gens(s, table).minimal_generators;
    }
    if (opt.json) {
      nlohmann::json j{{"schema", "asg-report/1"},
                       {"generators", affsemi::detail::json_vec_list(out)}};
      std::cout << j.dump() << "\n";
    } else {
      print_vectors(out);
    }
    return 0;
  }

  // analyze
  affsemi::AnalysisReport report = affsemi::analyze(gens, limits);
  if (opt.json) {
    std::cout << affsemi::to_json(report).dump() << "\n";
  } else {
    std::cout << affsemi::render_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const affsemi::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const affsemi::NotNumerical& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const affsemi::RankDeficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const affsemi::NotSimplicial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const affsemi::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
