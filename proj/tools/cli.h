// Copyright 2026 The ghzcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZCAT_TOOLS_CLI_H
#define GHZCAT_TOOLS_CLI_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ghzcat/dicke.h"
#include "ghzcat/ramsey.h"

namespace ghzcat::cli {

enum class ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
};

enum class Command { kCoherent, kEvolve, kVerify, kGhzFidelity, kFringes };

/// Fully resolved parameters of one invocation; all angles in radians.
struct RunConfig {
    Command command = Command::kVerify;
    std::size_t n = 12;
    double theta = kPi / 2;
    double phi = -kPi / 2;
    double alpha = kPi / 2;
    double tau = kPi / 2;
    double beta_min = -kPi;
    double beta_max = kPi;
    std::size_t beta_steps = 256;
    double tolerance = 1e-10;
    std::optional<std::string> output_path;
};

/// Decimal with 17 significant digits; negative zero prints as 0.
std::string format_real(double x);

/// Header `beta,p_coherent,p_mixture,p_no_cavity`, then one LF-terminated row per grid point.
void write_fringe_csv(const FringeSeries &series, std::ostream &out);

/// Parses argv-style arguments (without the program name), runs the command and
/// returns the process exit status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ghzcat::cli

#endif
