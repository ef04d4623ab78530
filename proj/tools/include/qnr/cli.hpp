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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace qnr::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kNumericalFailure = 3,
};

struct RunConfig {
  std::string command;  // bild, essential, lancaster, sspec, verify
  std::string input_path;
  std::uint64_t seed = 1;
  std::size_t samples = 200000;
  std::size_t angles = 360;
  std::size_t section = 500;
  std::size_t depth = 200;
  double tol = 0.02;
  std::string out_dir = ".";
  bool svg = false;
};

/// The effective configuration as a JSON object (stable key order).
std::string config_json(const RunConfig& config);

/// Runs one command, writing <command>.csv, summary.json and, with svg set,
/// <command>.svg into out_dir. Diagnostics go to log. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& log);

/// Command-line front end; returns the process exit status.
int main(int argc, char** argv);

}  // namespace qnr::cli
