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

#include "jacinv/report.hpp"

namespace jacinv {

IdentityReport& IdentityReport::with_param(std::string name, const Rational& value) {
    params.emplace_back(std::move(name), value.to_string());
    return *this;
}

bool IdentityReport::expect_equal(std::vector<long> indices, const Rational& expected, const Rational& actual) {
    if (expected == actual) return true;
    fail(std::move(indices), expected.to_string(), actual.to_string());
    return false;
}

bool IdentityReport::expect_equal(std::vector<long> indices, const Poly& expected, const Poly& actual) {
    if (expected == actual) return true;
    fail(std::move(indices), expected.to_string(), actual.to_string());
    return false;
}

void IdentityReport::fail(std::vector<long> indices, std::string expected, std::string actual) {
    if (failure) return;
    failure = IdentityFailure{std::move(indices), std::move(expected), std::move(actual)};
}

void IdentityReport::skip(std::vector<long> indices, std::string reason) {
    skipped.push_back(SkippedPoint{std::move(indices), std::move(reason)});
}

void IdentityReport::absorb(const IdentityReport& other) {
    if (other.failure) fail(other.failure->indices, other.failure->expected, other.failure->actual);
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["range"] = {report.range.first, report.range.second};
    j["passed"] = report.passed();
    if (report.failure) {
        j["failure"] = {{"indices", report.failure->indices},
                        {"expected", report.failure->expected},
                        {"actual", report.failure->actual}};
    } else {
        j["failure"] = nullptr;
    }
    nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
    for (const auto& s : report.skipped) skipped.push_back({{"indices", s.indices}, {"reason", s.reason}});
    j["skipped"] = skipped;
    return j;
}

}  // namespace jacinv
