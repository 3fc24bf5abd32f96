// bethe_cli: enumeration, limit subspaces and verification suites as JSON reports.
//
//   bethe_cli enumerate layers B2
//   bethe_cli subspace tools/points/a2_interior.json --type A2
//   bethe_cli check all --type A2 --seed 7
//
// Exit codes: 0 pass, 1 check failure, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bethe/bethe.hpp"
#include "bethe/io/json.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string type = "A2";
  int field_order = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::string out;
  std::string format = "json";
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  bethe::require(static_cast<bool>(f), "io", "cannot write " + opt.out);
  f << text;
}

void emit(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

int cmd_enumerate(const Options& opt, const std::string& what) {
  bethe::RootSystem rs = bethe::RootSystem::build(opt.type);
  const int N = opt.field_order;
  if (opt.format == "dot") {
    bethe::require(what == "layers", "usage", "DOT output is only available for 'enumerate layers'");
    emit(opt, bethe::io::layers_dot(rs, bethe::layers(rs, N)));
    return 0;
  }
  if (what == "roots") emit(opt, bethe::io::roots_json(rs, N));
  else if (what == "layers") emit(opt, bethe::io::layers_json(rs, N, bethe::layers(rs, N), "layers"));
  else if (what == "building-set") emit(opt, bethe::io::layers_json(rs, N, bethe::building_set(rs, N), "building-set"));
  else if (what == "nested-sets") emit(opt, bethe::io::nested_sets_json(rs, N));
  else if (what == "boundary-strata") emit(opt, bethe::io::boundary_strata_json(rs, N));
  else bethe::fail("usage", "unknown enumeration '" + what + "'");
  return 0;
}

int cmd_subspace(const Options& opt, const std::string& path) {
  std::ifstream f(path);
  bethe::require(static_cast<bool>(f), "io", "cannot read " + path);
  json spec;
  try {
    spec = json::parse(f);
  } catch (const json::parse_error& e) {
    bethe::fail("schema", std::string("not valid JSON: ") + e.what());
  }
  // a spec may carry its own type and field order; flags fill the gaps
  std::string type = spec.is_object() && spec.contains("type") ? spec["type"].get<std::string>() : opt.type;
  int N = spec.is_object() && spec.contains("field_order") ? spec["field_order"].get<int>() : opt.field_order;
  bethe::RootSystem rs = bethe::RootSystem::build(type);
  const json& pj = spec.is_object() && spec.contains("point") ? spec["point"] : spec;
  bethe::XPoint x = bethe::io::parse_point(pj, rs, N);
  json j = bethe::io::subspace_json(rs, N, bethe::limit_subspace(rs, x));
  j["input"] = spec;
  j["point"] = bethe::io::point_json(x);
  emit(opt, j);
  return 0;
}

int cmd_check(const Options& opt, const std::string& suite) {
  bethe::CheckConfig cfg{opt.type, opt.field_order, opt.seed, opt.samples};
  auto results = bethe::run_check(suite, cfg);
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
  });
  json rows = json::array();
  for (const auto& r : results) {
    json row = {{"suite", r.suite}, {"name", r.name},       {"pass", r.pass},
                {"informational", r.informational},          {"samples", r.samples},
                {"detail", r.detail}};
    if (!r.pass) row["counterexample"] = r.counterexample;
    rows.push_back(row);
  }
  const bool ok = bethe::all_pass(results);
  json j = {{"schema", bethe::io::kSchemaVersion},
            {"kind", "check"},
            {"suite", suite},
            {"type", opt.type},
            {"field_order", opt.field_order},
            {"seed", opt.seed},
            {"samples", opt.samples},
            {"results", rows},
            {"pass", ok}};
  emit(opt, j);
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bethe and Gaudin subalgebras of trigonometric holonomy algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--type", opt.type, "root system label, e.g. A2, B3, G2, A1xA2")->capture_default_str();
  app.add_option("--field-order", opt.field_order, "order N of the cyclotomic field Q(zeta_N)")
      ->capture_default_str()
      ->check(CLI::Range(1, 60));
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "samples per randomized check")->capture_default_str();
  app.add_option("--out", opt.out, "write the report to a file instead of stdout");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  std::string what, type_arg, path, suite;
  auto* en = app.add_subcommand("enumerate", "list roots, layers, the building set, nested sets or boundary strata");
  en->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"roots", "layers", "building-set", "nested-sets", "boundary-strata"}));
  en->add_option("type", type_arg, "root system label (same as --type)");
  auto* sub = app.add_subcommand("subspace", "RREF of the limit subspace at a chart point");
  sub->add_option("point", path, "XPoint spec (JSON)")->required();
  auto* chk = app.add_subcommand("check", "run a verification suite");
  chk->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"commutativity", "rank", "injectivity", "triangularity", "hecke", "typeA", "all"}));
  for (auto* s : {en, sub, chk}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!type_arg.empty()) opt.type = type_arg;

  try {
    if (*en) return cmd_enumerate(opt, what);
    if (*sub) return cmd_subspace(opt, path);
    return cmd_check(opt, suite);
  } catch (const bethe::Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "schema"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}
