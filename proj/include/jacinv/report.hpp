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

#ifndef JACINV_REPORT_HPP
#define JACINV_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jacinv/poly.hpp"
#include "jacinv/rational.hpp"

namespace jacinv {

struct IdentityFailure {
    std::vector<long> indices;
    std::string expected;
    std::string actual;
};

/// Index tuple that was not checked because it sits on a Gamma pole.
struct SkippedPoint {
    std::vector<long> indices;
    std::string reason;
};

/// Outcome of checking one identity at one parameter point over a range of
/// orders. `passed` is true exactly when `failure` is empty; only the first
/// counterexample is kept.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::pair<long, long> range{0, 0};
    std::optional<IdentityFailure> failure;
    std::vector<SkippedPoint> skipped;

    IdentityReport() = default;
    IdentityReport(std::string id, std::pair<long, long> order_range) : identity(std::move(id)), range(order_range) {}

    bool passed() const noexcept { return !failure.has_value(); }

    IdentityReport& with_param(std::string name, const Rational& value);

    /// Records a mismatch unless one is already recorded. Returns false on
    /// mismatch so callers can stop early.
    bool expect_equal(std::vector<long> indices, const Rational& expected, const Rational& actual);
    bool expect_equal(std::vector<long> indices, const Poly& expected, const Poly& actual);
    void fail(std::vector<long> indices, std::string expected, std::string actual);
    void skip(std::vector<long> indices, std::string reason);

    /// Folds another report's failure and skips into this one.
    void absorb(const IdentityReport& other);
};

nlohmann::ordered_json to_json(const IdentityReport& report);

}  // namespace jacinv

#endif
