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
#include "jacinv/identities.hpp"
#include "jacinv/special.hpp"
#include "support/gen.hpp"

using jacinv::LaguerreInversion;
using jacinv::Poly;
using jacinv::Rational;
using jacinv::testing::Gen;

namespace {

Rational delta(int i, int j) { return Rational(i == j ? 1 : 0); }

}  // namespace

TEST_CASE("inversion sums on fixed points") {
    CHECK(jacinv::inv_jacobi(Rational(1, 2), Rational(1, 3), 0, 0) == Rational(1));
    CHECK(jacinv::inv_jacobi(Rational(1, 2), Rational(1, 3), 4, 1) == Rational(0));
    CHECK(jacinv::inv_laguerre(Rational(2, 7), 5, 5, LaguerreInversion::main) == Rational(1));
    CHECK(jacinv::inv_laguerre(Rational(2, 7), 5, 2, LaguerreInversion::star) == Rational(0));
    CHECK(jacinv::inv_charlier(Rational(-3, 4), 6, 0) == Rational(0));
}

TEST_CASE("inv_jacobi pole guard") {
    // (a+b+1)_{i+1} = (-1)_2 = 0 at a = b = -1, i = 1, j = k = 0.
    CHECK_THROWS_AS(jacinv::inv_jacobi(Rational(-1), Rational(-1), 1, 0), jacinv::PoleError);
}

TEST_CASE("constant_value rejects non-constant input") {
    CHECK(jacinv::constant_value(Poly(Rational(3)), "c") == Rational(3));
    CHECK_THROWS_AS(jacinv::constant_value(Poly::x(), "c"), jacinv::NonConstantError);
}

TEST_CASE("property: inversions give the Kronecker delta") {
    Gen g(41);
    for (int trial = 0; trial < 4; ++trial) {
        const Rational a = g.fraction();
        Rational b = g.fraction();
        // Keep a + b off the integers so no inversion weight has a pole.
        while ((a + b).is_integer()) b = g.fraction();
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= i; ++j) {
                CHECK(jacinv::inv_jacobi(a, b, i, j) == delta(i, j));
                CHECK(jacinv::inv_laguerre(a, i, j, LaguerreInversion::main) == delta(i, j));
                CHECK(jacinv::inv_laguerre(a, i, j, LaguerreInversion::star) == delta(i, j));
                CHECK(jacinv::inv_charlier(b, i, j) == delta(i, j));
            }
    }
}

TEST_CASE("generalized laguerre inversion") {
    const Rational a(1, 5);
    CHECK(jacinv::gen_inv_laguerre(a, Rational(1, 2), Rational(1, 3), 3) ==
          jacinv::pochhammer(Rational(13, 6), 3) / Rational(6));
    for (int n = 1; n <= 8; ++n)
        for (int d = -n - 1; d <= -2; ++d)
            CHECK(jacinv::gen_inv_laguerre(a, Rational(d), Rational(0), n) == Rational(0));
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= i; ++j) {
            CHECK(jacinv::gen_inv_laguerre(a, Rational(j), Rational(i + 1), i - j) ==
                  jacinv::inv_laguerre(a, i, j, LaguerreInversion::main));
            CHECK(jacinv::gen_inv_laguerre(a, Rational(0), Rational(2), i - j) ==
                  jacinv::inv_laguerre(a, i, j, LaguerreInversion::star));
        }
}

TEST_CASE("property: generalized laguerre inversion value") {
    Gen g(42);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = g.rational(), p = g.rational(), q = g.rational();
        for (int n = 0; n <= 8; ++n)
            CHECK(jacinv::gen_inv_laguerre(a, p, q, n) ==
                  jacinv::pochhammer(p - q + Rational(2), n) / jacinv::factorial(n));
    }
}

TEST_CASE("master identity") {
    CHECK(jacinv::master_jacobi_lhs(Rational(0), Rational(0), 2, Rational(0)) == Poly::parse("1/8*x^2"));
    CHECK(jacinv::bivariate_samples(5) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)});
    Gen g(43);
    for (int trial = 0; trial < 3; ++trial) {
        const Rational a = g.fraction(), b = g.fraction();
        for (int n = 0; n <= 6; ++n) CHECK(jacinv::master_jacobi(a, b, n).passed());
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= i; ++j) CHECK(jacinv::master_jacobi_specializations(a, b, i, j).passed());
    }
}

TEST_CASE("reflected inversion sum is a scaled monomial") {
    const Rational a(2, 3), b(-1, 4);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(jacinv::master_jacobi_reflected_sum(a, b, i, j) ==
                  Poly::monomial(Rational(1) / jacinv::factorial(i - j), i - j));
}

TEST_CASE("monomial expansions") {
    Gen g(44);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational a = g.fraction(), b = g.fraction();
        for (int n = 0; n <= 8; ++n) {
            CHECK(jacinv::monomial_expansion(n, jacinv::LaguerreParams{a}).passed());
            CHECK(jacinv::monomial_expansion(n, jacinv::JacobiParams{a, b}).passed());
        }
    }
}

TEST_CASE("summation lemma and Vandermonde") {
    CHECK(jacinv::nulalg_sum(Rational(1, 3), 5) == Rational(0));
    CHECK(jacinv::nulalg_sum(Rational(7, 2), 0) == Rational(7, 2));
    CHECK(jacinv::vandermonde(Rational(1), Rational(3), 2) == Rational(1, 2));
    CHECK_THROWS_AS(jacinv::vandermonde(Rational(1), Rational(-1), 3), jacinv::PoleError);
    CHECK(jacinv::vandermonde_general(Rational(1), Rational(-1), 3) == jacinv::pochhammer(Rational(-2), 3));

    Gen g(45);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational b = g.fraction(), c = g.fraction();
        for (int n = 1; n <= 15; ++n) {
            CHECK(jacinv::nulalg_sum(b, n) == Rational(0));
            CHECK(jacinv::vandermonde(b, c, n) == jacinv::pochhammer(c - b, n) / jacinv::pochhammer(c, n));
        }
    }
}

TEST_CASE("laguerre convolution and its master form") {
    Gen g(46);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational a = g.rational(), b = g.rational();
        for (int n = 0; n <= 8; ++n) {
            CHECK(jacinv::laguerre_convolution(a, b, n).passed());
            CHECK(jacinv::master_laguerre(a, n).passed());
        }
    }
    // A fixed-y value: sum_k L_k^{(a)}(x) L_{1-k}^{(b)}(0) = L_1^{(a+b+1)}(x).
    const Rational a(1, 2), b(1, 3);
    CHECK(jacinv::laguerre_convolution_lhs(a, b, 1, Rational(0)) == jacinv::laguerre(1, {a + b + Rational(1)}));
}

TEST_CASE("inversion limit certificate") {
    const std::vector<Rational> samples{Rational(1, 2), Rational(1), Rational(2)};
    const std::vector<Rational> schedule{Rational(16), Rational(256), Rational(4096), Rational(65536)};
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(jacinv::limit_check_inversion(Rational(1, 3), i, j, samples, schedule).passed());
}

TEST_CASE("report serialization") {
    jacinv::IdentityReport r("demo", {0, 3});
    r.with_param("alpha", Rational(1, 2));
    CHECK(r.expect_equal({1, 0}, Rational(0), Rational(0)));
    CHECK(!r.expect_equal({2, 1}, Rational(0), Rational(1, 3)));
    r.expect_equal({3, 1}, Rational(0), Rational(5));
    r.skip({4, 0}, "pole");
    const auto j = to_json(r);
    CHECK(j.dump() ==
          R"({"identity":"demo","params":{"alpha":"1/2"},"range":[0,3],"passed":false,)"
          R"("failure":{"indices":[2,1],"expected":"0","actual":"1/3"},"skipped":[{"indices":[4,0],"reason":"pole"}]})");
    jacinv::IdentityReport ok("demo", {0, 0});
    CHECK(to_json(ok)["failure"].is_null());
    CHECK(to_json(ok)["passed"] == true);
}
