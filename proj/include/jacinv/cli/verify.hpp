/*
   Copyright 2026 The jacinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JACINV_CLI_VERIFY_HPP
#define JACINV_CLI_VERIFY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacinv/rational.hpp"
#include "jacinv/report.hpp"

namespace jacinv::cli {

/// Invalid command-line configuration (exit code 2).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct VerifyConfig {
    std::string identity;
    int order_max = 6;
    int grid = 1;
    std::uint64_t seed = 0;
    /// Parameters fixed on the command line; the rest are drawn from the seed.
    std::map<std::string, Rational> pinned;
    double tolerance = 0.0;
};

/// Identity ids accepted by run_verify, in documentation order.
const std::vector<std::string>& identity_ids();

/// Parameter names the identity draws per grid point, in draw order.
const std::vector<std::string>& identity_parameters(const std::string& id);

/// Sweeps the identity over `grid` parameter points; one report per point, in
/// grid order. Points are evaluated concurrently. Throws ConfigError.
std::vector<IdentityReport> run_verify(const VerifyConfig& config);

/// The single-point sweep behind run_verify.
IdentityReport verify_point(const std::string& id, const std::map<std::string, Rational>& params, int order_max,
                            double tolerance = 0.0);

}  // namespace jacinv::cli

#endif
