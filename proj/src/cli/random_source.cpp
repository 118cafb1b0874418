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

#include "jacinv/cli/random_source.hpp"

namespace jacinv::cli {

std::int64_t ParameterSampler::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational ParameterSampler::small_rational() {
    const std::int64_t num = uniform(-9, 9);
    const std::int64_t den = uniform(1, 9);
    return Rational(num, den);
}

Rational ParameterSampler::greater_than_minus_one() {
    for (;;) {
        Rational r = small_rational();
        if (r > Rational(-1)) return r;
    }
}

Rational ParameterSampler::nonnegative() {
    const std::int64_t num = uniform(0, 9);
    const std::int64_t den = uniform(1, 9);
    return Rational(num, den);
}

}  // namespace jacinv::cli
