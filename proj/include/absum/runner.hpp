// Copyright 2026 The absum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABSUM_RUNNER_HPP
#define ABSUM_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <set>

#include "absum/identities.hpp"
#include "absum/oracle.hpp"

namespace absum {

enum class Command { Verify, Table, Oracle, Mc };
enum class OutputFormat { Json, Csv, Text };
enum class ExitPolicy { Collect, FailFast };

// Exit codes shared by run() and the CLI.
inline constexpr int kExitPass = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Verify;
    unsigned k_min = 0;
    unsigned k_max = kMaxProofStepDefault;
    std::set<IdentityId> identity_filter;  // empty selects all identities
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    unsigned oracle_max = kOracleMaxDefault;
    ExitPolicy exit_policy = ExitPolicy::Collect;
    unsigned threads = 0;  // 0: take ABSUM_THREADS, else hardware concurrency
};

/// Executes one command, writing records to `out` in ascending k order
/// (json and csv are stable formats, text is human-oriented) and
/// diagnostics to `err`. Returns kExitPass, kExitIdentityFailure on any
/// exact-identity failure, or kExitUsage on an invalid config. Monte Carlo
/// z-exceedances are reported as warnings and do not fail the run.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace absum

#endif  // ABSUM_RUNNER_HPP
