// negsphere: negative spheres in elliptic surfaces and their blow-ups.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "negsphere/fiber_catalog.hpp"
#include "negsphere/fibration.hpp"
#include "negsphere/report.hpp"
#include "negsphere/search.hpp"
#include "negsphere/serialize.hpp"

using namespace negsphere;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInvalidInput = 2;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

// "2:12" or "5"
std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InvalidInput("bad range '" + text + "', expected LO:HI");
  }
}

struct Common {
  bool json_out = false;
  std::string dot_path;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json_out, "Machine-readable JSON on stdout");
  cmd->add_option("--dot", c.dot_path, "Write the resulting plumbing tree as Graphviz DOT");
}

int run_formula(int n, const Common& c) {
  const std::int64_t built = s_construction(n);
  const Rational printed = s_formula_printed(n);
  const bool agrees = printed == Rational(built);
  if (c.json_out) {
    std::cout << json{{"n", n},
                      {"s_construction", built},
                      {"s_formula_printed", to_json(printed)},
                      {"agrees", agrees}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "s(" << n << ") = " << built << "\n";
    if (!agrees) {
      std::cout << "note: printed closed formula gives " << rational_str(printed)
                << " for n = 0 mod 5; the construction value above is the smoothed tree\n";
    }
  }
  if (!c.dot_path.empty()) {
    const FibrationSpec spec = paper_decomposition(n);
    write_file(c.dot_path, to_dot(build_tree(spec, default_choices(spec)).graph));
  }
  return kOk;
}

int run_build(const std::string& spec_path, const std::string& plan_path, const Common& c) {
  const json doc = read_json_file(spec_path);
  FibrationSpec spec;
  BlowupPlan plan;
  try {
    spec = spec_from_json(doc);
    if (!plan_path.empty()) {
      plan = plan_from_json(read_json_file(plan_path));
    } else if (doc.contains("plan")) {
      plan = plan_from_json(doc.at("plan"));
    } else {
      plan.choices = default_choices(spec);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed spec or plan: ") + e.what());
  }
  const ValidationResult v = validate(spec);
  if (!v) throw InvalidInput(v.message);

  const Realization r = realize(spec, plan);
  const AmbientSurface surface = betti(spec.n, r.blowups);
  const Rational ratio(r.square, surface.b2);
  if (c.json_out) {
    std::cout << json{{"spec", to_json(spec)},
                      {"plan", to_json(plan)},
                      {"square", r.square},
                      {"blowups", r.blowups},
                      {"b2", surface.b2},
                      {"ratio", to_json(ratio)},
                      {"satisfies_C5", r.square >= -5 * surface.b2},
                      {"provenance", provenance_name(classify(spec, plan))},
                      {"trace", r.narrative},
                      {"graph", to_json(r.graph)}}
                     .dump(2)
              << "\n";
  } else {
    for (const std::string& line : r.narrative) std::cout << line << "\n";
    std::cout << "square " << r.square << ", b2 = " << surface.b2
              << ", square / b2 = " << rational_str(ratio) << "\n";
  }
  if (!c.dot_path.empty()) write_file(c.dot_path, to_dot(r.graph));
  return kOk;
}

int run_search(int n, int k, const SearchOptions& opts, const Common& c) {
  const auto result = best_sphere(n, k, opts);
  if (!result) {
    if (c.json_out) {
      std::cout << json{{"n", n}, {"k", k}, {"solution", nullptr}}.dump(2) << "\n";
    } else {
      std::cout << "E(" << n << ") # " << k << "(-CP^2): no solution over the allowed fibers\n";
    }
    return kOk;
  }
  if (c.json_out) {
    std::cout << to_json(*result).dump(2) << "\n";
  } else {
    print_result(std::cout, *result);
  }
  if (!c.dot_path.empty()) write_file(c.dot_path, to_dot(result->realization.graph));
  return kOk;
}

int run_verify(const Common& c) {
  const auto lines = verify_paper_battery();
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (c.json_out) {
    json arr = json::array();
    for (const auto& l : lines) arr.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    std::cout << json{{"pass", all}, {"checks", arr}}.dump(2) << "\n";
  } else {
    print_checks(std::cout, lines);
    std::cout << (all ? "all checks passed" : "VERIFICATION FAILED") << "\n";
  }
  return all ? kOk : kVerificationFailure;
}

int run_conjecture(const std::string& n_range, const std::string& k_range,
                   const SearchOptions& opts, const Common& c) {
  const auto [n_lo, n_hi] = parse_range(n_range);
  const auto [k_lo, k_hi] = parse_range(k_range);
  if (n_lo < 2 || n_hi < n_lo || k_lo < 0 || k_hi < k_lo) {
    throw InvalidInput("ranges must satisfy 2 <= n_lo <= n_hi and 0 <= k_lo <= k_hi");
  }
  bool all = true;
  json rows = json::array();
  if (!c.json_out) std::cout << "   n    k   square     b2  square/b2    C=-5\n";
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int k = k_lo; k <= k_hi; ++k) {
      const auto r = best_sphere(n, k, opts);
      if (!r) continue;
      const ConjectureCheck check = conjecture_check(*r);
      all = all && check.satisfies_c5;
      if (c.json_out) {
        rows.push_back({{"n", n},
                        {"k", k},
                        {"best_square", r->best_square},
                        {"b2", r->b2},
                        {"ratio", to_json(check.ratio)},
                        {"satisfies_C5", check.satisfies_c5}});
      } else {
        std::printf("%4d %4d %8lld %6lld %10.4f %7s\n", n, k,
                    static_cast<long long>(r->best_square), static_cast<long long>(r->b2),
                    boost::rational_cast<double>(check.ratio), check.satisfies_c5 ? "ok" : "FAIL");
      }
    }
  }
  if (c.json_out) std::cout << json{{"all_satisfy_C5", all}, {"rows", rows}}.dump(2) << "\n";
  return all ? kOk : kVerificationFailure;
}

int run_catalog(const Common& c) {
  if (c.json_out) {
    std::cout << catalog_json().dump(2) << "\n";
  } else {
    for (const FiberType& t : catalog()) {
      std::cout << t.name << "  word " << t.word.str() << "  euler " << t.euler;
      if (t.fragment) std::cout << "  fragment " << t.fragment->vertices.size() << " spheres";
      if (t.resolution) {
        std::cout << "  resolves in " << t.resolution->blowups << " blow-up(s)";
      }
      std::cout << "\n";
    }
  }
  if (!c.dot_path.empty()) {
    std::ostringstream dot;
    for (const FiberType& t : catalog()) {
      if (t.fragment) dot << to_dot(*t.fragment, t.name);
      if (t.resolution) dot << to_dot(t.resolution->fragment, t.name + "_resolved");
    }
    write_file(c.dot_path, dot.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative spheres in elliptic surfaces E(n) and their blow-ups"};
  app.require_subcommand(1, 1);

  Common common;
  SearchOptions opts;
  std::vector<std::string> allowed_names;
  int n = 2;
  int k = 0;
  std::string spec_path;
  std::string plan_path;
  std::string n_range = "2:12";
  std::string k_range = "0:10";

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--extended-fibers", opts.extended,
                  "Also allow E7t, III and I1_nodal (ordered monodromy validation)");
    cmd->add_option("--allowed", allowed_names, "Fiber types to search over")->delimiter(',');
    cmd->add_option("--max-n", opts.max_n, "Largest n accepted by the search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-k", opts.max_k, "Largest k accepted by the search")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", opts.threads, "Worker threads for the search")
        ->check(CLI::PositiveNumber);
  };

  auto* formula = app.add_subcommand("formula", "s(n) for E(n)");
  formula->add_option("n", n, "n >= 2")->required();
  add_common(formula, common);

  auto* build = app.add_subcommand("build", "Build and smooth the tree of a fibration spec file");
  build->add_option("spec", spec_path, "JSON {n, fibers, provenance[, plan]}")->required();
  build->add_option("--plan", plan_path, "JSON {choices, edge_blowups, point_blowups}");
  add_common(build, common);

  auto* search = app.add_subcommand("search", "Most negative sphere in E(n) # k(-CP^2)");
  search->add_option("n", n, "n >= 2")->required();
  search->add_option("k", k, "blow-ups, k >= 0")->required();
  add_search_flags(search);
  add_common(search, common);

  auto* verify = app.add_subcommand("verify-paper", "Check every published value");
  add_common(verify, common);

  auto* conj = app.add_subcommand("conjecture", "Screen best spheres against [S]^2 >= -5 b2");
  conj->add_option("--n-range", n_range, "LO:HI");
  conj->add_option("--k-range", k_range, "LO:HI");
  add_search_flags(conj);
  add_common(conj, common);

  auto* cat = app.add_subcommand("catalog", "List the singular fiber catalog");
  add_common(cat, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (!allowed_names.empty()) {
      opts.allowed.clear();
      for (const auto& name : allowed_names) opts.allowed.push_back(parse_fiber_name(name));
    } else if (opts.extended) {
      opts.allowed = {FiberKind::E8t, FiberKind::E7t, FiberKind::E6t, FiberKind::I0star,
                      FiberKind::II_cusp, FiberKind::III, FiberKind::IV};
    }

    if (*formula) return run_formula(n, common);
    if (*build) return run_build(spec_path, plan_path, common);
    if (*search) return run_search(n, k, opts, common);
    if (*verify) return run_verify(common);
    if (*conj) return run_conjecture(n_range, k_range, opts, common);
    if (*cat) return run_catalog(common);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kOk;
}
