#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootres/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootres");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rootres::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rootres_cli_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST_CASE("closed") {
  auto r = run({"closed", "--group", "S3", "--subgroup", "A3", "--class", "p:2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["closed"] == true);
  r = run({"closed", "--group", "S3", "--subgroup", "(1 2)", "--class", "p:2"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["closed"] == false);
  CHECK(run({"closed", "--group", "S3", "--subgroup", "(1 2)"}).code == 0);
  CHECK(run({"closed", "--group", "S3", "--subgroup", "A3", "--class", "p:4"}).code == 2);
}

TEST_CASE("separate and verify") {
  auto r = run({"separate", "--scheme", "power:2:S3:A3", "--word", "(0:a)(1:a b)", "--class", "p:2"});
  REQUIRE(r.code == 0);
  const auto cert = json::parse(r.out);
  CHECK(cert["claims"]["kernel_order"] == 3);

  const auto path = temp_path("cert.json");
  write(path, r.out);
  auto v = run({"verify", path});
  CHECK(v.code == 0);
  CHECK(v.out.find("accepted") != std::string::npos);

  auto flipped = cert;
  flipped["claims"]["image_nontrivial"] = false;
  write(path, flipped.dump(2));
  v = run({"verify", path});
  CHECK(v.code == 1);
  CHECK(v.out.find("rejected") != std::string::npos);

  write(path, r.out.substr(0, r.out.size() / 2));
  v = run({"verify", path});
  CHECK(v.code == 2);
  CHECK(v.err.find("malformed") != std::string::npos);

  write(path, json::array({cert, cert}).dump());
  CHECK(run({"verify", path}).code == 0);
  CHECK(run({"verify", temp_path("missing.json")}).code == 2);
}

TEST_CASE("separate edge cases") {
  auto r = run({"separate", "--scheme", "power:2:S3:A3", "--word", "(0:a)(0:a)", "--class", "p:2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("trivial word") != std::string::npos);
  r = run({"separate", "--scheme", "power:2:S3:A3", "--word", "(0:b)", "--class", "p:2"});
  CHECK(r.code == 1);
  const auto out = temp_path("out.json");
  r = run({"separate", "--scheme", "power:2:S3:A3", "--word", "(0:a)(1:a b)", "--out", out});
  CHECK(r.code == 0);
  CHECK(run({"verify", out}).code == 0);
}

TEST_CASE("separate-free") {
  auto r = run({"separate-free", "--word", "x1 x2^-1 x1^-1 x2", "--class", "p:2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["data"]["degree"] == 2);
  r = run({"separate-free", "--word", "x1^3", "--class", "solvable", "--modulus", "0"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["data"]["degree"] == 1);
  CHECK(run({"separate-free", "--word", "x1^8", "--class", "p:2", "--max-degree", "7"}).code == 1);
  CHECK(run({"separate-free", "--word", "x1 x1^-1", "--class", "p:2"}).code == 2);
  CHECK(run({"separate-free", "--word", "x1 y2"}).code == 2);
}

TEST_CASE("axioms, normal-form and core") {
  auto r = run({"axioms", "--class", "p:2", "--max-order", "8"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);

  r = run({"normal-form", "--scheme", "power:2:S3:A3", "--word", "(0:a)(1:a)(0:a)"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["length"] == 3);

  r = run({"core", "--group", "S4", "--class", "p:2"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["core_order"] == 12);
  CHECK(run({"core", "--group", "D4", "--class", "p:2"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({"closed", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
