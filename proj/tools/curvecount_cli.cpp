/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvecount.h"

using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 usage, 2 unresolvable query, 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnresolvable = 2;
constexpr int kExitVerifyFailed = 3;

struct StringOut {
  char* s = nullptr;
  ~StringOut() { cc_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

int status_to_exit(cc_status st) {
  switch (st) {
    case CC_OK: return kExitOk;
    case CC_ERR_UNRESOLVABLE: return kExitUnresolvable;
    default: return kExitUsage;
  }
}

int report_error(cc_status st) {
  std::cerr << "error: " << cc_last_error() << "\n";
  return status_to_exit(st);
}

struct QueryArgs {
  std::string surface_spec;
  std::string sing;
  int delta = 0;
  std::string flavor = "plain";
  int n1 = 0, m1 = 0, m2 = 0, theta = 0;
  bool ordered = false;
  std::string format = "text";
};

void add_query_flags(CLI::App* cmd, QueryArgs& args, bool need_sing) {
  cmd->add_option("--surface", args.surface_spec, "surface: p2:<d> | p1xp1:<a>,<b> | file:<path>");
  auto* sing = cmd->add_option("--sing", args.sing, "singularity: A1..A8, D4..D8, E6..E8, X9");
  if (need_sing) sing->required();
  cmd->add_option("--delta", args.delta, "number of free nodes")->check(CLI::NonNegativeNumber);
  cmd->add_option("--flavor", args.flavor, "plain | proj | hat (default plain)");
  cmd->add_option("--n1", args.n1, "power of c1(L) at the marked point")->check(CLI::NonNegativeNumber);
  cmd->add_option("--m1", args.m1, "power of c1(T*X) at the marked point")->check(CLI::NonNegativeNumber);
  cmd->add_option("--m2", args.m2, "power of c2(T*X) at the marked point")->check(CLI::NonNegativeNumber);
  cmd->add_option("--theta", args.theta, "power of lambda (proj/hat flavors)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--ordered", args.ordered, "report the ordered count (no factorial division)");
  cmd->add_option("--format", args.format, "text | json | csv (default text)");
}

cc_flavor parse_flavor(const std::string& name) {
  if (name == "plain") return CC_FLAVOR_PLAIN;
  if (name == "proj") return CC_FLAVOR_PROJ;
  if (name == "hat") return CC_FLAVOR_HAT;
  throw CLI::ValidationError("--flavor", "expected plain, proj or hat");
}

using SurfacePtr = std::unique_ptr<cc_surface, decltype(&cc_surface_free)>;

int run_count(cc_engine* engine, const QueryArgs& args) {
  SurfacePtr surface(nullptr, cc_surface_free);
  if (!args.surface_spec.empty()) {
    cc_surface* raw = nullptr;
    if (cc_status st = cc_surface_from_spec(args.surface_spec.c_str(), &raw); st != CC_OK)
      return report_error(st);
    surface.reset(raw);
  }
  StringOut out;
  cc_status st = cc_count_json(engine, surface.get(), args.sing.c_str(), args.delta,
                               parse_flavor(args.flavor), args.n1, args.m1, args.m2, args.theta,
                               args.ordered ? 1 : 0, &out.s);
  if (st != CC_OK) return report_error(st);
  const json rec = json::parse(out.str());

  if (!rec["points"].is_null() && rec["points"].get<long>() < 0)
    std::cerr << "warning: no generic points remain (points = " << rec["points"] << ")\n";
  if (rec["ampleness_status"] == "not_guaranteed")
    std::cerr << "warning: surface is below the guaranteed ampleness level ("
              << rec["ampleness_required"] << " needed); the count is still computed\n";

  if (args.format == "json") {
    std::cout << out.str() << "\n";
  } else if (args.format == "csv") {
    std::cout << "delta,singularity,points,count\n";
    std::cout << rec["delta"] << "," << rec["singularity"].get<std::string>() << ",";
    if (!rec["points"].is_null()) std::cout << rec["points"].get<long>();
    std::cout << ",";
    if (!rec["count"].is_null()) std::cout << rec["count"].get<std::string>();
    std::cout << "\n";
  } else if (args.format == "text") {
    std::cout << "query: " << (args.ordered ? "ordered" : "unordered") << " delta=" << args.delta
              << " sing=" << rec["singularity"].get<std::string>()
              << " flavor=" << rec["flavor"].get<std::string>() << " n1=" << args.n1
              << " m1=" << args.m1 << " m2=" << args.m2 << " theta=" << args.theta << "\n";
    if (!rec["surface"].is_null()) {
      std::cout << "surface: " << rec["surface"]["name"].get<std::string>() << "\n";
      std::cout << "points: " << rec["points"].get<long>() << "\n";
    }
    std::cout << "ampleness: required " << rec["ampleness_required"] << ", "
              << rec["ampleness_status"].get<std::string>() << "\n";
    std::cout << "formula: " << rec["formula"].get<std::string>() << "\n";
    if (!rec["count"].is_null())
      std::cout << "count: " << rec["count"].get<std::string>() << "\n";
  } else {
    std::cerr << "error: unknown format '" << args.format << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_table(cc_engine* engine, const QueryArgs& args) {
  SurfacePtr surface(nullptr, cc_surface_free);
  if (!args.surface_spec.empty()) {
    cc_surface* raw = nullptr;
    if (cc_status st = cc_surface_from_spec(args.surface_spec.c_str(), &raw); st != CC_OK)
      return report_error(st);
    surface.reset(raw);
  }
  StringOut out;
  if (cc_status st = cc_table_json(engine, surface.get(), &out.s); st != CC_OK)
    return report_error(st);
  const json rows = json::parse(out.str());
  const bool with_counts = surface != nullptr;

  if (args.format == "json") {
    std::cout << out.str() << "\n";
  } else if (args.format == "csv") {
    std::cout << (with_counts ? "delta,singularity,points,count\n" : "delta,singularity,formula\n");
    for (const auto& row : rows) {
      if (with_counts)
        std::cout << row["delta"] << "," << row["singularity"].get<std::string>() << ","
                  << row["points"].get<long>() << "," << row["count"].get<std::string>() << "\n";
      else
        std::cout << row["delta"] << "," << row["singularity"].get<std::string>() << ","
                  << row["formula"].get<std::string>() << "\n";
    }
  } else if (args.format == "text") {
    for (const auto& row : rows) {
      std::cout << "delta=" << row["delta"] << " sing=" << row["singularity"].get<std::string>();
      if (with_counts)
        std::cout << " points=" << row["points"].get<long>()
                  << " count=" << row["count"].get<std::string>();
      else
        std::cout << " formula=" << row["formula"].get<std::string>();
      std::cout << "\n";
    }
  } else {
    std::cerr << "error: unknown format '" << args.format << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_formula(cc_engine* engine, const QueryArgs& args) {
  StringOut out;
  cc_status st = cc_formula(engine, args.sing.c_str(), args.delta, parse_flavor(args.flavor),
                            args.n1, args.m1, args.m2, args.theta, args.ordered ? 1 : 0, &out.s);
  if (st != CC_OK) return report_error(st);
  if (args.format == "json") {
    json rec;
    rec["formula"] = out.str();
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << out.str() << "\n";
  }
  return kExitOk;
}

int run_classify(const std::string& input, const std::string& format) {
  std::string germ;
  if (input == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    germ = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot open germ file '" << input << "'\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    germ = buf.str();
  }
  StringOut out;
  if (cc_status st = cc_classify(germ.c_str(), &out.s); st != CC_OK) return report_error(st);
  if (format == "json") {
    json rec;
    rec["label"] = out.str();
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << out.str() << "\n";
  }
  return kExitOk;
}

int run_verify(cc_engine* engine, const std::string& suite, const std::string& format) {
  StringOut out;
  int failures = 0;
  if (cc_status st = cc_verify_json(engine, suite.c_str(), &out.s, &failures); st != CC_OK)
    return report_error(st);
  const json rows = json::parse(out.str());
  if (format == "json") {
    std::cout << out.str() << "\n";
  } else {
    for (const auto& row : rows)
      std::cout << (row["passed"].get<bool>() ? "PASS " : "FAIL ")
                << row["check_id"].get<std::string>() << ": expected "
                << row["expected"].get<std::string>() << ", computed "
                << row["computed"].get<std::string>() << " ["
                << row["provenance"].get<std::string>() << "]\n";
    std::cout << "verify: " << rows.size() - failures << "/" << rows.size() << " checks passed\n";
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of nodal curves with one further singularity"};
  app.require_subcommand(1);

  QueryArgs count_args, table_args, formula_args;
  std::string classify_input = "-";
  std::string classify_format = "text";
  std::string verify_suite = "all";
  std::string verify_format = "text";

  auto* count_cmd = app.add_subcommand("count", "evaluate one count on a surface");
  add_query_flags(count_cmd, count_args, true);

  auto* table_cmd = app.add_subcommand("table", "all counts with delta + codim <= 8");
  table_cmd->add_option("--surface", table_args.surface_spec,
                        "surface: p2:<d> | p1xp1:<a>,<b> | file:<path> (omit for formulas)");
  table_cmd->add_option("--format", table_args.format, "text | json | csv (default text)");

  auto* formula_cmd = app.add_subcommand("formula", "universal polynomial for one count");
  add_query_flags(formula_cmd, formula_args, true);

  auto* classify_cmd = app.add_subcommand("classify", "classify a polynomial germ at the origin");
  classify_cmd->add_option("--input", classify_input, "germ file, or - for standard input");
  classify_cmd->add_option("--format", classify_format, "text | json (default text)");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", verify_suite,
                         "base | quintic | quartic | quadric | calibration | properties | all");
  verify_cmd->add_option("--format", verify_format, "text | json (default text)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::unique_ptr<cc_engine, decltype(&cc_engine_free)> engine(cc_engine_new(), cc_engine_free);
  if (!engine) {
    std::cerr << "error: cannot create engine\n";
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return run_count(engine.get(), count_args);
    if (table_cmd->parsed()) return run_table(engine.get(), table_args);
    if (formula_cmd->parsed()) return run_formula(engine.get(), formula_args);
    if (classify_cmd->parsed()) return run_classify(classify_input, classify_format);
    if (verify_cmd->parsed()) return run_verify(engine.get(), verify_suite, verify_format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no command given\n";
  return kExitUsage;
}
