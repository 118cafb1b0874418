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

#ifndef JACINV_TESTS_SUPPORT_GEN_HPP
#define JACINV_TESTS_SUPPORT_GEN_HPP

#include <cstdint>
#include <vector>

#include "jacinv/poly.hpp"
#include "jacinv/rational.hpp"

namespace jacinv::testing {

/// Seeded generator for property tests. splitmix64 keeps sequences identical
/// across standard libraries.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(std::int64_t bound = 9, std::int64_t max_den = 9) {
        return Rational(integer(-bound, bound), integer(1, max_den));
    }

    Rational nonzero_rational(std::int64_t bound = 9, std::int64_t max_den = 9) {
        for (;;) {
            Rational r = rational(bound, max_den);
            if (!r.is_zero()) return r;
        }
    }

    /// A rational that is not an integer, so no Pochhammer built on it vanishes.
    Rational fraction(std::int64_t bound = 9) {
        for (;;) {
            Rational r = rational(bound, 9);
            if (!r.is_integer()) return r;
        }
    }

    Rational nonnegative_rational() { return Rational(integer(0, 9), integer(1, 9)); }

    Rational greater_than(const Rational& floor) {
        for (;;) {
            Rational r = rational();
            if (r > floor) return r;
        }
    }

    Poly poly(int max_degree) {
        std::vector<Rational> c;
        const int d = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= d; ++i) c.push_back(rational());
        return Poly(std::move(c));
    }

   private:
    std::uint64_t state_;
};

}  // namespace jacinv::testing

#endif
