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
#include "jacinv/genfamilies.hpp"
#include "jacinv/special.hpp"
#include "support/gen.hpp"
#include "support/quadrature.hpp"

using jacinv::GeneralizedJacobiParams;
using jacinv::Poly;
using jacinv::Rational;
using jacinv::SobolevLaguerreParams;
using jacinv::UltrasphericalVariant;
using jacinv::testing::Gen;

namespace {

Poly P(const char* text) { return Poly::parse(text); }

Poly monic(const Poly& p) { return (Rational(1) / p.coeff(*p.degree())) * p; }

}  // namespace

TEST_CASE("parameter gates") {
    CHECK_THROWS_AS(GeneralizedJacobiParams(Rational(0), Rational(-1), Rational(0), Rational(0)),
                    jacinv::ParameterError);
    CHECK_THROWS_AS(GeneralizedJacobiParams(Rational(0), Rational(0), Rational(-1, 2), Rational(0)),
                    jacinv::ParameterError);
    CHECK_THROWS_AS(GeneralizedJacobiParams(Rational(-1, 2), Rational(-1, 2), Rational(0), Rational(0)),
                    jacinv::ContinuityCaseError);
    CHECK_THROWS_AS(SobolevLaguerreParams(Rational(-3, 2), Rational(0), Rational(0)), jacinv::ParameterError);
    CHECK_THROWS_AS(SobolevLaguerreParams(Rational(0), Rational(0), Rational(-1)), jacinv::ParameterError);
    CHECK_THROWS_AS(jacinv::sym_ultraspherical(2, Rational(-1, 2), Rational(1), UltrasphericalVariant::P),
                    jacinv::ContinuityCaseError);
}

TEST_CASE("without masses the classical families return") {
    const Rational a(1, 3), b(3, 4);
    for (int n = 0; n <= 6; ++n) {
        CHECK(jacinv::gen_jacobi(n, {a, b, Rational(0), Rational(0)}) == jacinv::jacobi(n, {a, b}));
        CHECK(jacinv::sobolev_laguerre(n, {a, Rational(0), Rational(0)}) == jacinv::laguerre(n, {a}));
    }
}

TEST_CASE("generalized jacobi against Gram-Schmidt") {
    // Monic orthogonal polynomials from tests/oracle/freeze_values.py.
    CHECK(monic(jacinv::gen_jacobi(2, {Rational(1), Rational(2), Rational(1, 3), Rational(2, 5)})) ==
          P("x^2 - 2/203*x - 109/203"));
    CHECK(monic(jacinv::gen_jacobi(3, {Rational(0), Rational(3), Rational(1, 2), Rational(0)})) ==
          P("x^3 - 27/227*x^2 - 200/227*x + 1054/4767"));
    CHECK(monic(jacinv::gen_jacobi(3, {Rational(2), Rational(1), Rational(0), Rational(3)})) ==
          P("x^3 - 149/453*x^2 - 301/453*x - 1/3171"));
}

TEST_CASE("sobolev laguerre against Gram-Schmidt") {
    CHECK(monic(jacinv::sobolev_laguerre(2, {Rational(1), Rational(1, 2), Rational(1, 3)})) ==
          P("x^2 - 48/11*x + 20/11"));
    CHECK(monic(jacinv::sobolev_laguerre(3, {Rational(1, 2), Rational(2), Rational(1)})) ==
          P("x^3 - 686/97*x^2 + 2625/388*x + 105/97"));
    CHECK(monic(jacinv::sobolev_laguerre(3, {Rational(0), Rational(0), Rational(5, 2)})) ==
          P("x^3 - 17/3*x^2 + 4/3*x + 4"));
}

TEST_CASE("moments against exact integrals") {
    CHECK(jacinv::gen_jacobi_moment(3, {Rational(1), Rational(2), Rational(1, 3), Rational(2, 5)}) ==
          Rational(16, 105));
    CHECK(jacinv::gen_jacobi_moment(4, {Rational(0), Rational(3), Rational(1, 2), Rational(0)}) ==
          Rational(57, 70));
    CHECK(jacinv::gen_jacobi_moment(0, {Rational(1, 7), Rational(2, 9), Rational(1), Rational(2)}) ==
          Rational(4));
}

TEST_CASE("moments against numerical quadrature") {
    struct Case {
        Rational a, b, m, n;
    };
    const std::vector<Case> cases{
        {Rational(1, 2), Rational(-1, 3), Rational(0), Rational(0)},
        {Rational(-1, 2), Rational(2, 3), Rational(1, 4), Rational(0)},
        {Rational(3, 2), Rational(5, 4), Rational(0), Rational(2)},
        {Rational(-2, 3), Rational(-1, 4), Rational(1), Rational(1, 3)},
        {Rational(7, 3), Rational(1, 5), Rational(2, 7), Rational(5, 2)},
    };
    for (const auto& c : cases) {
        const GeneralizedJacobiParams params(c.a, c.b, c.m, c.n);
        for (int k = 0; k <= 6; ++k) {
            const double exact = jacinv::gen_jacobi_moment(k, params).to_double();
            const double numeric = jacinv::testing::jacobi_moment_quadrature(
                k, c.a.to_double(), c.b.to_double(), c.m.to_double(), c.n.to_double());
            CHECK(jacinv::testing::relative_error(exact, numeric) < 1e-12);
        }
    }
    for (const auto& a : {Rational(-1, 2), Rational(0), Rational(2, 3), Rational(5, 2), Rational(-3, 4)})
        for (int k = 0; k <= 6; ++k) {
            const double exact = jacinv::pochhammer(a + Rational(1), k).to_double();
            const double numeric = jacinv::testing::laguerre_moment_quadrature(k, a.to_double());
            CHECK(jacinv::testing::relative_error(exact, numeric) < 1e-12);
        }
}

TEST_CASE("property: generalized jacobi orthogonality") {
    Gen g(61);
    for (int trial = 0; trial < 6; ++trial) {
        Rational a = g.greater_than(Rational(-1)), b = g.greater_than(Rational(-1));
        if ((a + b + Rational(1)).is_zero()) b += Rational(1, 7);
        const GeneralizedJacobiParams params(a, b, g.nonnegative_rational(), g.nonnegative_rational());
        std::vector<Poly> ps;
        for (int n = 0; n <= 6; ++n) ps.push_back(jacinv::gen_jacobi(n, params));
        for (int n = 1; n <= 6; ++n)
            for (int m = 0; m < n; ++m) CHECK(jacinv::inner_product(ps[m], ps[n], params) == Rational(0));
        CHECK(jacinv::inner_product(ps[3], ps[3], params) != Rational(0));
    }
}

TEST_CASE("property: sobolev laguerre orthogonality") {
    Gen g(62);
    for (int trial = 0; trial < 6; ++trial) {
        const SobolevLaguerreParams params(g.greater_than(Rational(-1)), g.nonnegative_rational(),
                                           g.nonnegative_rational());
        std::vector<Poly> ls;
        for (int n = 0; n <= 6; ++n) ls.push_back(jacinv::sobolev_laguerre(n, params));
        for (int n = 1; n <= 6; ++n)
            for (int m = 0; m < n; ++m) CHECK(jacinv::sobolev_inner_product(ls[m], ls[n], params) == Rational(0));
    }
}

TEST_CASE("symmetric ultraspherical") {
    CHECK(jacinv::sym_ultraspherical(3, Rational(1, 2), Rational(1, 4), UltrasphericalVariant::Q) ==
          P("105/8*x^3 - 175/16*x"));
    Gen g(63);
    for (int trial = 0; trial < 8; ++trial) {
        Rational a = g.greater_than(Rational(-1));
        if ((Rational(2) * a + Rational(1)).is_zero()) a = Rational(1, 3);
        const Rational m = g.nonnegative_rational();
        for (int n = 0; n <= 12; ++n) {
            const auto c = jacinv::sym_ultraspherical_coefficients(n, a, m);
            CHECK(c.c0 == c.c0_factored);
            CHECK(c.c1 == c.c1_factored);
            const Poly p = jacinv::sym_ultraspherical(n, a, m, UltrasphericalVariant::P);
            CHECK(p == jacinv::gen_jacobi(n, {a, a, m, m}));
            CHECK(compose_affine(p, Rational(-1), Rational(0)) == Rational(n % 2 == 0 ? 1 : -1) * p);
            const Poly q = jacinv::sym_ultraspherical(n, a, m, UltrasphericalVariant::Q);
            CHECK(compose_affine(q, Rational(-1), Rational(0)) == Rational(n % 2 == 0 ? 1 : -1) * q);
        }
    }
}

TEST_CASE("generalized limit certificate") {
    const std::vector<Rational> samples{Rational(1, 2), Rational(1), Rational(2)};
    const std::vector<Rational> schedule{Rational(16), Rational(256), Rational(4096), Rational(65536)};
    for (int n = 0; n <= 4; ++n)
        CHECK(jacinv::limit_check_gen_jacobi_to_laguerre(n, Rational(1, 2), Rational(1, 3), samples, schedule)
                  .passed());
}
