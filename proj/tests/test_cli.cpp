#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "glq/commands.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(GLQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string without_timing(const std::string& text) {
  auto doc = glq::Json::parse(text);
  for (auto& c : doc["checks"]) c.erase("millis");
  return doc.dump();
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run_cli("verify algebra --q 0.5 --modes 2 --cutoff 5").status == 0);
  CHECK(run_cli("verify algebra --q 1.5").status == 2);
  CHECK(run_cli("verify algebra --q 0.5 --bogus").status == 2);
  CHECK(run_cli("verify").status == 2);
  CHECK(run_cli("verify algebra --q 0.5 --inject-fault").status == 1);
  CHECK(run_cli("coherent check --q 0.5 --z 3").status == 1);
  CHECK(run_cli("qsym norm --word 1,2,3 --q 0.7").status == 0);
}

TEST_CASE("printed norms") {
  const auto a = run_cli("qsym norm --word 2,1 --q 0.5");
  CHECK(a.out.find("value=0.25") != std::string::npos);
  const auto b = run_cli("qsym norm --word 1,2,3 --q 0.7");
  CHECK(b.out.find("value=1.0") != std::string::npos);
}

TEST_CASE("json report is a single document and reproducible") {
  const auto a = run_cli("verify algebra --q 0.5 --format json");
  const auto b = run_cli("verify algebra --q 0.5 --format json");
  const auto doc = glq::Json::parse(a.out);
  CHECK(doc["checks"].is_array());
  CHECK(doc["schema_version"] == 1);
  CHECK(without_timing(a.out) == without_timing(b.out));
  const auto report = glq::Report::from_json(doc);
  CHECK(report.to_json().dump(2) + "\n" == a.out);
}

TEST_CASE("report written to a file") {
  const auto path = std::filesystem::temp_directory_path() / "glq_cli_test_report.json";
  CHECK(run_cli("jackson moments --q 0.5 --format json --out " + path.string()).status == 0);
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(glq::Json::parse(body.str())["pass"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("runners") {
  glq::RunConfig cfg;
  cfg.qs = {0.5};
  CHECK(glq::run_coherent_check(cfg).pass());
  cfg.exact = true;
  cfg.particles = 6;
  cfg.modes = 3;
  const auto identity = glq::run_qsym_identity(cfg);
  CHECK(identity.pass());
  CHECK(identity.checks.size() == 84);
  cfg = {};
  cfg.qs = {0.5};
  cfg.cutoff = 3;
  cfg.z = {0.4, 0.3};
  const auto small = glq::run_coherent_check(cfg);
  CHECK_FALSE(small.pass());
  bool insufficient = false;
  for (const auto& c : small.checks)
    if (c.note && c.note->find("insufficient cutoff") != std::string::npos) insufficient = true;
  CHECK(insufficient);
  cfg = {};
  cfg.qs = {2.0};
  CHECK_THROWS_AS(glq::validate(cfg), glq::ConfigError);
  CHECK(glq::parse_complex("0.5:-1") == glq::complex(0.5, -1));
  CHECK_THROWS_AS(glq::parse_complex("abc"), glq::ConfigError);
}
