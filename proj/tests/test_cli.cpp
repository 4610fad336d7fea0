/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  const std::string dir = TEST_TMPDIR;
  const std::string out_path = dir + "/cli_stdout.txt";
  std::string cmd = std::string(CLI_BINARY) + " " + args + " > " + out_path + " 2>" + dir +
                    "/cli_stderr.txt";
  if (!stdin_text.empty()) {
    const std::string in_path = dir + "/cli_stdin.txt";
    std::ofstream(in_path) << stdin_text;
    cmd += " < " + in_path;
  }
  const int raw = std::system(cmd.c_str());
  return {WEXITSTATUS(raw), slurp(out_path)};
}

}  // namespace

TEST_CASE("formula command") {
  const auto r = run_cli("formula --delta 0 --sing A1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3*D + 2*K + X2\n");
}

TEST_CASE("count command text and json") {
  const auto r = run_cli("count --surface p1xp1:2,5 --delta 3 --sing A1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count: 7038") != std::string::npos);

  const auto j = run_cli("count --surface p2:5 --delta 6 --sing A2 --format json");
  CHECK(j.exit_code == 0);
  const json rec = json::parse(j.out);
  CHECK(rec["count"] == "171072");
  CHECK(rec["points"] == 12);
}

TEST_CASE("emitted JSON re-serializes byte-identically") {
  const auto j = run_cli("count --surface p2:4 --delta 2 --sing A2 --format json");
  REQUIRE(j.exit_code == 0);
  std::string text = j.out;
  REQUIRE_FALSE(text.empty());
  REQUIRE(text.back() == '\n');
  text.pop_back();
  CHECK(json::parse(text).dump() == text);

  const auto t = run_cli("table --surface p2:3 --format json");
  std::string ttext = t.out;
  ttext.pop_back();
  CHECK(json::parse(ttext).dump() == ttext);
}

TEST_CASE("table csv has stable ordering") {
  const auto r = run_cli("table --surface p2:5 --format csv");
  CHECK(r.exit_code == 0);
  std::stringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "delta,singularity,points,count");
  std::getline(lines, line);
  CHECK(line == "0,A1,19,48");
  std::getline(lines, line);
  CHECK(line == "0,A2,18,144");
  int rows = 0;
  std::vector<std::string> all;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 56);  // 58 total minus the two consumed above

  // Symbolic table renders formulas.
  const auto sym = run_cli("table --format csv");
  CHECK(sym.exit_code == 0);
  CHECK(sym.out.find("delta,singularity,formula") == 0);
  CHECK(sym.out.find("0,A1,3*D + 2*K + X2") != std::string::npos);
}

TEST_CASE("classify command from file and stdin") {
  const std::string germ_path = std::string(TEST_TMPDIR) + "/germ.txt";
  std::ofstream(germ_path) << "x^4+y^4\n";
  const auto r = run_cli("classify --input " + germ_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "X9\n");

  const auto s = run_cli("classify", "y^3 + y*x^3\n");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "E7\n");

  const auto j = run_cli("classify --format json", "y^2+x^3");
  CHECK(j.exit_code == 0);
  CHECK(json::parse(j.out)["label"] == "A2");

  const auto bad = run_cli("classify", "x + ");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("surface files and flavored queries") {
  const std::string path = std::string(TEST_TMPDIR) + "/surface.json";
  std::ofstream(path) << R"({"name":"plane-cubics","c1L_sq":9,"c1L_c1TstarX":-9,)"
                      << R"("c1TstarX_sq":9,"c2X":3,"dim_linear_system":9,"ample_level":null})";
  const auto r = run_cli("count --surface file:" + path + " --delta 0 --sing A1 --format json");
  CHECK(r.exit_code == 0);
  const json rec = json::parse(r.out);
  CHECK(rec["count"] == "12");
  CHECK(rec["ampleness_status"] == "unknown");

  // Marked-direction count: PA1 at theta 0 doubles the plain count.
  const auto h = run_cli(
      "count --surface p2:3 --delta 0 --sing A1 --flavor proj --ordered --format json");
  CHECK(h.exit_code == 0);
  CHECK(json::parse(h.out)["count"] == "24");

  // Hat counts vanish at theta 0.
  const auto hat = run_cli(
      "count --surface p2:3 --delta 0 --sing D4 --flavor hat --ordered --format json");
  CHECK(hat.exit_code == 0);
  CHECK(json::parse(hat.out)["count"] == "0");
}

TEST_CASE("verify command exit codes") {
  const auto r = run_cli("verify --suite quadric");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("8/8 checks passed") != std::string::npos);

  const auto j = run_cli("verify --suite base --format json");
  CHECK(j.exit_code == 0);
  CHECK(json::parse(j.out).size() == 4);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("count --surface p2:5 --delta 9 --sing A1").exit_code == 1);
  CHECK(run_cli("count --surface p2:5 --delta 1 --sing Q5").exit_code == 1);
  CHECK(run_cli("count --delta 1").exit_code == 1);          // missing --sing
  CHECK(run_cli("nosuchcommand").exit_code == 1);
  CHECK(run_cli("count --surface p2:x --delta 0 --sing A1").exit_code == 1);
  CHECK(run_cli("count --surface p2:5 --delta 0 --sing A2 --theta 4 --flavor proj").exit_code ==
        1);
}

TEST_CASE("unresolvable queries exit with code 2") {
  const auto r = run_cli("count --surface p2:5 --delta 1 --sing A7 --flavor proj --theta 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("warnings go to the diagnostic stream, not stdout") {
  const auto r = run_cli("count --surface p2:5 --delta 7 --sing A1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).is_object());  // stdout holds pure JSON
  const std::string err = slurp(std::string(TEST_TMPDIR) + "/cli_stderr.txt");
  CHECK(err.find("warning") != std::string::npos);
}
