// Copyright 2026 The qnumrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qnr/cli.hpp"

namespace fs = std::filesystem;
using qnr::cli::RunConfig;

namespace {

std::string data(const char* name) { return std::string(QNR_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qnr_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig cheap(const std::string& command, const std::string& input, const fs::path& out) {
  RunConfig c;
  c.command = command;
  c.input_path = input;
  c.samples = 4000;
  c.angles = 90;
  c.section = 50;
  c.depth = 50;
  c.out_dir = out.string();
  return c;
}

int run_argv(std::vector<std::string> args) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return qnr::cli::main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("malformed input exits with 2") {
  const fs::path out = scratch("malformed");
  std::ostringstream log;
  CHECK(qnr::cli::run(cheap("bild", data("malformed.json"), out), log) == qnr::cli::kParseError);
  CHECK_FALSE(log.str().empty());
  CHECK(qnr::cli::run(cheap("bild", data("missing.json"), out), log) == qnr::cli::kParseError);
  // Operator-only commands on a matrix.
  CHECK(qnr::cli::run(cheap("essential", data("diag_ij.json"), out), log) == qnr::cli::kParseError);
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run_argv({"qnr", "frobnicate", data("diag_ij.json")}) == 2);
  CHECK(run_argv({"qnr", "bild"}) == 2);
  CHECK(run_argv({"qnr", "bild", data("diag_ij.json"), "--samples", "-3"}) == 2);
}

TEST_CASE("sspec of diag(i, j)") {
  const fs::path out = scratch("sspec");
  std::ostringstream log;
  REQUIRE(qnr::cli::run(cheap("sspec", data("diag_ij.json"), out), log) == qnr::cli::kOk);
  const auto summary = nlohmann::json::parse(slurp(out / "summary.json"));
  REQUIRE(summary.at("spheres").size() == 1);
  CHECK(summary["spheres"][0][0].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(summary["spheres"][0][1].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fs::exists(out / "sspec.csv"));
}

TEST_CASE("essential and verify on the segment example") {
  const fs::path out = scratch("verify");
  std::ostringstream log;
  REQUIRE(qnr::cli::run(cheap("essential", data("segment_tail.json"), out), log) == qnr::cli::kOk);
  const auto ess = nlohmann::json::parse(slurp(out / "summary.json"));
  CHECK(ess.at("validated").get<bool>());
  const auto seg = ess.at("essential").at("segment");
  CHECK(seg[0][0].get<double>() == 0.0);
  CHECK(std::fabs(seg[0][1].get<double>()) == 0.5);
  CHECK(std::fabs(seg[1][1].get<double>()) == 0.5);

  CHECK(qnr::cli::run(cheap("verify", data("segment_tail.json"), out), log) == qnr::cli::kOk);
  const std::string csv = slurp(out / "verify.csv");
  CHECK(csv.find("check,pass") == 0);
  CHECK(csv.find(",false") == std::string::npos);
}

TEST_CASE("summary echoes the configuration") {
  const fs::path out = scratch("config");
  std::ostringstream log;
  RunConfig c = cheap("bild", data("jordan.json"), out);
  c.seed = 99;
  c.svg = true;
  REQUIRE(qnr::cli::run(c, log) == qnr::cli::kOk);
  const auto summary = nlohmann::json::parse(slurp(out / "summary.json"));
  const auto cfg = summary.at("config");
  CHECK(cfg == nlohmann::json::parse(qnr::cli::config_json(c)));
  CHECK(cfg.at("seed").get<std::uint64_t>() == 99);
  CHECK(cfg.at("samples").get<std::size_t>() == 4000);
  CHECK(cfg.at("command") == "bild");
  CHECK(fs::exists(out / "bild.svg"));
  CHECK(slurp(out / "bild.svg").find("<svg") != std::string::npos);
}

TEST_CASE("identical configurations give identical bytes") {
  for (const char* cmd : {"bild", "lancaster"}) {
    const fs::path a = scratch(std::string(cmd) + "_a");
    const fs::path b = scratch(std::string(cmd) + "_b");
    std::ostringstream log;
    const std::string input = std::string(cmd) == "bild" ? data("jordan.json") : data("segment_tail.json");
    RunConfig ca = cheap(cmd, input, a);
    RunConfig cb = cheap(cmd, input, b);
    ca.svg = cb.svg = true;
    REQUIRE(qnr::cli::run(ca, log) == qnr::cli::kOk);
    REQUIRE(qnr::cli::run(cb, log) == qnr::cli::kOk);
    for (const auto& entry : fs::directory_iterator(a)) {
      const fs::path name = entry.path().filename();
      const std::string lhs = slurp(a / name);
      std::string rhs = slurp(b / name);
      // The output directory is echoed in the summary; nothing else may differ.
      for (std::size_t at = rhs.find(b.string()); at != std::string::npos; at = rhs.find(b.string(), at)) {
        rhs.replace(at, b.string().size(), a.string());
        at += a.string().size();
      }
      CHECK_MESSAGE(lhs == rhs, name.string());
    }
  }
}
