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

#ifndef JACINV_CLI_RANDOM_SOURCE_HPP
#define JACINV_CLI_RANDOM_SOURCE_HPP

#include <cstdint>
#include <random>

#include "jacinv/rational.hpp"

namespace jacinv::cli {

/// Seeded source of small rationals for parameter grids. Draws are reduced
/// with plain modulo arithmetic so that a seed gives the same sequence on
/// every standard library.
class ParameterSampler {
   public:
    explicit ParameterSampler(std::uint64_t seed) : rng_(seed) {}

    /// numerator in [-9, 9], denominator in [1, 9].
    Rational small_rational();
    /// Uniform over small_rational() values strictly greater than -1.
    Rational greater_than_minus_one();
    /// numerator in [0, 9], denominator in [1, 9].
    Rational nonnegative();

   private:
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    std::mt19937_64 rng_;
};

}  // namespace jacinv::cli

#endif
