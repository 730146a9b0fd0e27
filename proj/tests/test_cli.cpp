#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SPECTRA4_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string fixture(const char* name) {
  return std::string(SPECTRA4_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("solve: CSV shape and 17-significant-digit values") {
  const auto r = run("solve --config " + fixture("basic.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,z,mu,residual,iterations,low_region", 0) == 0);
  // A 17-significant-digit mantissa means at least 16 digits after the
  // leading one somewhere in the mu column.
  const auto line2 = r.out.substr(r.out.find('\n') + 1);
  const auto mu_field_start = line2.find(',', line2.find(',') + 1) + 1;
  const auto mu_field = line2.substr(
      mu_field_start, line2.find(',', mu_field_start) - mu_field_start);
  int digits = 0;
  for (char c : mu_field) {
    if (c >= '0' && c <= '9') ++digits;
  }
  CHECK(digits >= 16);
}

TEST_CASE("solve: JSON output parses and carries the eigenvalue array") {
  const auto r = run("solve --config " + fixture("basic.json") +
                     " --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("command") == "solve");
  CHECK(doc.at("status") == "ok");
  REQUIRE(doc.contains("eigenvalues"));
  CHECK(doc.at("eigenvalues").size() == 4);
  for (const auto& e : doc.at("eigenvalues")) {
    CHECK(e.contains("n"));
    CHECK(e.contains("z"));
    CHECK(e.contains("mu"));
  }
}

TEST_CASE("asymptote and compare run end to end") {
  const auto a = run("asymptote --config " + fixture("basic.json") +
                     " --order p2");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("term_z0") != std::string::npos);

  const auto c = run("compare --config " + fixture("basic.json") +
                     " --order L1 --format json");
  CHECK(c.exit_code == 0);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc.at("command") == "compare");
  CHECK(doc.contains("fit_slope"));
}

TEST_CASE("verify-algebra: clean run exits 0, tampered run exits 1") {
  const auto ok = run("verify-algebra");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("fail") == std::string::npos);
  const auto bad = run("verify-algebra --tamper");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("fail") != std::string::npos);
}

TEST_CASE("localize emits one count per index") {
  const auto r = run("localize --config " + fixture("localize.json"));
  CHECK(r.exit_code == 0);
  // Header plus one line per n in [5, 8].
  int lines = 0;
  for (char ch : r.out) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 5);
}

TEST_CASE("exit codes: config errors are 2") {
  CHECK(run("solve --config /does/not/exist.json").exit_code == 2);
  CHECK(run("solve --config " + fixture("bad_field.json")).exit_code == 2);
}

TEST_CASE("order flag is validated by the parser") {
  const auto r = run("asymptote --config " + fixture("basic.json") +
                     " --order p7");
  CHECK(r.exit_code != 0);
}
