#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
  int rc = -1;
  std::string out;
};

std::string bin() {
  const char* p = std::getenv("PTB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "PTB_BIN must point at the ptb executable");
  return p;
}

Run run(const std::string& args) {
  Run r;
  const std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(f);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ptb_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").rc == 2);
  CHECK(run("cohomology --family Q --alpha 1").rc == 2);
  CHECK(run("cohomology --family E").rc == 2);
  CHECK(run("cohomology --family E --alpha 0").rc == 2);
  CHECK(run("cohomology --family M --a 2 --sphere 1").rc == 2);
  CHECK(run("curvature --family M --a 2 --t-list 0.5").rc == 2);
  CHECK(run("curvature --family M --a 2 --t-list 1.5 --seed 1").rc == 2);
  CHECK(run("cohomology --family E --alpha 1 --format yaml").rc == 2);
}

TEST_CASE("cohomology report") {
  const Run r = run("cohomology --family E --alpha 2");
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(r.out.find("x1^2*x3 + 2*x1*x3^2") != std::string::npos);
  CHECK(run("cohomology --family E --alpha 2").out == r.out);
}

TEST_CASE("iso-check") {
  const Run same = run("iso-check --family M --a 4 --a 4");
  CHECK(same.rc == 0);
  CHECK(nlohmann::json::parse(same.out)["result"] == "iso");
  CHECK(run("iso-check --family E --alpha 1").rc == 2);
}

TEST_CASE("sampling output is byte-identical for a fixed seed") {
  const std::string args = "curvature --family M --a 2 --t-list 0.5 --samples 4 --refine-steps 5 --seed 7";
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  CHECK(nlohmann::json::parse(a.out)["schema_version"] == 1);
}

TEST_CASE("certificate round trip") {
  const auto path = tmp("cert.json");
  REQUIRE(run("certify --criteria 1,12 --seed 1 --out " + path.string()).rc == 0);
  CHECK(run("certify --verify " + path.string()).rc == 0);

  std::stringstream ss;
  ss << std::ifstream(path).rdbuf();
  auto j = nlohmann::ordered_json::parse(ss.str());
  CHECK(j["schema_version"] == 1);
  j["checks"][0]["pass"] = !j["checks"][0]["pass"].get<bool>();
  const auto bad = tmp("tampered.json");
  std::ofstream(bad) << j.dump(2);
  CHECK(run("certify --verify " + bad.string()).rc == 1);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}
