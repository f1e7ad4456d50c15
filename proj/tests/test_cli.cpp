#include "cli.hpp"
#include "cli_cases.hpp"
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

using namespace testing_support;

namespace {

const std::string kGolden = HOPF_GOLDEN_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("scripted invocations in process") {
  const auto scratch = std::filesystem::temp_directory_path() / "hopf_test_cli_out.json";
  for (const auto& c : cli_cases()) {
    CAPTURE(c.name);
    std::filesystem::remove(scratch);
    std::vector<std::string> args{"hopfplumb"};
    for (auto& a : expand_args(c, kGolden, scratch.string())) args.push_back(a);
    std::ostringstream out, err;
    CHECK(hopf::cli::run(args, out, err) == c.exit_code);
    if (c.exit_code == 2) CHECK(err.str().rfind("error: ", 0) == 0);
    if (c.golden) {
      const std::string got = writes_file(c) ? slurp(scratch.string()) : out.str();
      CHECK(got == slurp(kGolden + "/expected/" + c.name + ".json"));
    }
  }
  std::filesystem::remove(scratch);
}

TEST_CASE("quiet suppresses stdout") {
  std::ostringstream out, err;
  CHECK(hopf::cli::run({"hopfplumb", "cartan", "2", "--quiet"}, out, err) == 0);
  CHECK(out.str().empty());
}

TEST_CASE("parse errors name the line") {
  std::ostringstream out, err;
  CHECK(hopf::cli::run({"hopfplumb", "check", kGolden + "/inputs/malformed.json"}, out, err) == 2);
  CHECK(err.str().find("line 4") != std::string::npos);
}

TEST_CASE("golden files round trip through the typed readers") {
  std::vector<hopf::Kind> kinds;
  for (const auto& dir : {"/inputs", "/expected"})
    for (const auto& f : std::filesystem::directory_iterator(kGolden + dir)) {
      if (f.path().filename() == "malformed.json" || f.path().filename().string().rfind("bad_", 0) == 0) continue;
      CAPTURE(f.path().string());
      CHECK(round_trips(slurp(f.path().string()), kinds));
    }
  CHECK(std::set<hopf::Kind>(kinds.begin(), kinds.end()).size() == 7);
}

TEST_SUITE_END();
