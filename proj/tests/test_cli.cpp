#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qent/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qent::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fig3 writes CSV with a metadata header") {
  const auto r = invoke({"fig3", "--kind", "rebit", "--samples", "1000", "--seed", "7"});
  REQUIRE(r.code == qent::cli::kExitOk);
  CHECK(r.err.empty());
  CHECK(r.out.rfind("# name=fig3_c2_pure\n", 0) == 0);
  CHECK(r.out.find("# seed=7\n") != std::string::npos);
  CHECK(r.out.find("# kind=rebit\n") != std::string::npos);
  CHECK(r.out.find("\nc2_lo,c2_hi,empirical_density,analytic_density\n") != std::string::npos);
}

TEST_CASE("fig4 JSON output") {
  const auto r = invoke({"fig4", "--format", "json"});
  REQUIRE(r.code == qent::cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["kind"] == "quaterbit");
  bool found = false;
  for (const auto& row : doc["rows"])
    if (row["x"] == 0.25 && row["y"] == 0.25) {
      found = true;
      CHECK(row["E"].get<double>() == doctest::Approx(1.0));
    }
  CHECK(found);
}

TEST_CASE("usage errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"fig3", "--bogus"},
           {"fig3", "--kind", "quaterbit"},
           {"fig4", "--kind", "rebit"},
           {"boundary", "--kind", "qubit"},
           {"fig1", "--kind", "complex"},
           {"fig1", "--samples", "0"},
           {"fig1", "--workers", "0"},
           {"fig1", "--format", "xml"},
           {"fig5"},
       }) {
    CAPTURE(args.size());
    const auto r = invoke(args);
    CHECK(r.code == qent::cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("qent: ", 0) == 0);
    CHECK(r.err.find("usage: qent") != std::string::npos);
  }
}

TEST_CASE("help and version") {
  const auto help = invoke({"--help"});
  CHECK(help.code == qent::cli::kExitOk);
  CHECK(help.out.find("fig1") != std::string::npos);
  const auto version = invoke({"--version"});
  CHECK(version.code == qent::cli::kExitOk);
  CHECK(version.out.find("1.0.0") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::vector<std::string> base{"fig2", "--samples", "2000", "--workers", "3", "--seed", "11"};
  const auto first = invoke(base);
  const auto second = invoke(base);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);

  const auto path = std::filesystem::temp_directory_path() / "qent_cli_test_out.csv";
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto r = invoke(with_out);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == first.out);
  std::filesystem::remove(path);
}

TEST_CASE("--bins overrides the default") {
  const auto r = invoke({"fig1", "--samples", "500", "--bins", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["rows"].size() == 10);
}

TEST_CASE("verify fails honestly on a tiny sample") {
  const auto r = invoke({"verify", "--samples", "200"});
  CHECK(r.code == qent::cli::kExitVerifyFailed);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
  CHECK(r.out.find("acceptance criteria FAILED") != std::string::npos);
}
