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

#include <doctest.h>

#include <vector>

#include "jacinv/errors.hpp"
#include "jacinv/solver.hpp"
#include "jacinv/special.hpp"
#include "support/gen.hpp"

using jacinv::JacobiParams;
using jacinv::LaguerreShift;
using jacinv::Poly;
using jacinv::Rational;
using jacinv::TriangularSystem;
using jacinv::testing::Gen;

namespace {

Poly P(const char* text) { return Poly::parse(text); }

}  // namespace

TEST_CASE("T and U are mutually inverse") {
    Gen g(51);
    for (int trial = 0; trial < 6; ++trial) {
        const JacobiParams ab{g.fraction(), g.fraction()};
        for (int n = 0; n <= 7; ++n) {
            const auto t = jacinv::build_T(n, ab);
            const auto u = jacinv::build_U(n, ab);
            CHECK((t * u).is_identity());
            CHECK((u * t).is_identity());
        }
    }
}

TEST_CASE("diagonal of T") {
    const JacobiParams ab{Rational(1, 2), Rational(2, 3)};
    const auto t = jacinv::build_T(6, ab);
    for (int i = 0; i <= 6; ++i)
        CHECK(t.at(i, i) ==
              Poly(jacinv::pochhammer(Rational(i) + ab.alpha + ab.beta + Rational(1), i) / pow(Rational(2), i)));
    CHECK(t.entry(1, 3).is_zero());
}

TEST_CASE("singularity condition") {
    for (int k = 0; k <= 5; ++k) {
        // a + b + 2 = -k
        const JacobiParams ab{Rational(1, 2), Rational(-k - 2) - Rational(1, 2)};
        CHECK(jacinv::jacobi_system_singular(ab));
        CHECK_THROWS_AS(jacinv::build_U(3, ab), jacinv::SingularError);
    }
    CHECK(!jacinv::jacobi_system_singular({Rational(0), Rational(0)}));
    CHECK(!jacinv::jacobi_system_singular({Rational(1, 2), Rational(-7, 3)}));
    CHECK(!jacinv::jacobi_system_singular({Rational(1), Rational(-2)}));
}

TEST_CASE("jacobi system against an independent oracle") {
    TriangularSystem sys{JacobiParams{Rational(1, 2), Rational(1, 3)}, {P("1"), P("x"), P("x^2 - 1/2")}};
    const std::vector<Poly> expected{P("12/17"), P("-5556/11339*x - 12/493"),
                                     P("2905638/16271465*x^2 + 8868/464899*x + 978/24395")};
    CHECK(jacinv::solve_closed_form(sys) == expected);
    CHECK(jacinv::solve_backsub(sys) == expected);
}

TEST_CASE("laguerre system with shift against an independent oracle") {
    TriangularSystem sys{LaguerreShift{{Rational(1, 4)}, 2}, {P("2"), P("x - 1"), P("3*x^2")}};
    const std::vector<Poly> expected{P("-2"), P("3*x - 19/2"), P("-5*x^2 + 59/4*x - 441/16")};
    CHECK(jacinv::solve_closed_form(sys) == expected);
    CHECK(jacinv::solve_backsub(sys) == expected);
}

TEST_CASE("solver errors") {
    TriangularSystem empty{JacobiParams{Rational(0), Rational(0)}, {}};
    CHECK_THROWS_AS(jacinv::solve_closed_form(empty), jacinv::ParameterError);
    TriangularSystem singular{JacobiParams{Rational(-1), Rational(-1)}, {P("1"), P("x")}};
    CHECK_THROWS_AS(jacinv::solve_closed_form(singular), jacinv::SingularError);
    CHECK_THROWS_AS(jacinv::solve_backsub(singular), jacinv::SingularError);
}

TEST_CASE("random right-hand sides are seeded") {
    CHECK(jacinv::random_rhs(5, 1, 3) == jacinv::random_rhs(5, 1, 3));
    CHECK(jacinv::random_rhs(5, 1, 3) != jacinv::random_rhs(5, 1, 4));
    const auto rhs = jacinv::random_rhs(6, 2, 17);
    REQUIRE(rhs.size() == 6);
    for (int m = 1; m <= 6; ++m) {
        const auto& f = rhs[static_cast<std::size_t>(m - 1)];
        if (!f.is_zero()) CHECK(*f.degree() <= m + 2);
    }
}

TEST_CASE("property: closed form equals back-substitution") {
    Gen g(52);
    for (int trial = 0; trial < 12; ++trial) {
        const int order = static_cast<int>(g.integer(1, 6));
        const auto seed = g.next();
        TriangularSystem sys;
        if (trial % 2 == 0) {
            JacobiParams ab{g.rational(), g.rational()};
            if (jacinv::jacobi_system_singular(ab)) continue;
            sys = TriangularSystem{ab, jacinv::random_rhs(order, 0, seed)};
        } else {
            const int shift = static_cast<int>(g.integer(0, 2));
            sys = TriangularSystem{LaguerreShift{{g.rational()}, shift}, jacinv::random_rhs(order, shift, seed)};
        }
        const auto solved = jacinv::solve_and_check(sys, seed);
        CHECK(solved.agrees);
        CHECK(solved.residuals_zero);
    }
}

TEST_CASE("a perturbed solution leaves a residual") {
    TriangularSystem sys{JacobiParams{Rational(1, 2), Rational(1, 3)}, jacinv::random_rhs(4, 0, 5)};
    auto sol = jacinv::solve_backsub(sys);
    sol[1] += Poly(Rational(1, 1000));
    bool any = false;
    for (const auto& r : jacinv::residuals(sys, sol)) any = any || !r.is_zero();
    CHECK(any);
}

TEST_CASE("solved system JSON") {
    TriangularSystem sys{LaguerreShift{{Rational(1, 4)}, 2}, {P("2"), P("x - 1"), P("3*x^2")}};
    const auto j = to_json(jacinv::solve_and_check(sys, 9));
    CHECK(j["order"] == 3);
    CHECK(j["family"] == "laguerre");
    CHECK(j["shift"] == 2);
    CHECK(j["params"]["alpha"] == "1/4");
    CHECK(j["solution"][1] == "3*x - 19/2");
    CHECK(j["residuals_zero"] == true);
    CHECK(j["seed"] == 9);
    const auto no_seed = to_json(jacinv::solve_and_check(sys));
    CHECK(no_seed["seed"].is_null());
}
