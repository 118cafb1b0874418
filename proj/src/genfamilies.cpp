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

#include "jacinv/genfamilies.hpp"

#include <string>

#include "jacinv/errors.hpp"
#include "jacinv/special.hpp"

namespace jacinv {

namespace {

void require_gt_minus_one(const Rational& v, const char* name) {
    if (!(v > Rational(-1))) throw ParameterError(std::string(name) + " must be > -1, got " + v.to_string());
}

void require_nonnegative(const Rational& v, const char* name) {
    if (v.sign() < 0) throw ParameterError(std::string(name) + " must be >= 0, got " + v.to_string());
}

void require_order(int n, const char* what) {
    if (n < 0) throw ParameterError(std::string(what) + ": negative degree");
}

Rational binom(const Rational& top, int k) { return binom_general(top, k); }

}  // namespace

GeneralizedJacobiParams::GeneralizedJacobiParams(Rational alpha, Rational beta, Rational m, Rational n)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), m_(std::move(m)), n_(std::move(n)) {
    require_gt_minus_one(alpha_, "alpha");
    require_gt_minus_one(beta_, "beta");
    require_nonnegative(m_, "M");
    require_nonnegative(n_, "N");
    if ((alpha_ + beta_ + Rational(1)).is_zero())
        throw ContinuityCaseError("generalized Jacobi: alpha + beta + 1 = 0 is only defined by continuity");
}

SobolevLaguerreParams::SobolevLaguerreParams(Rational alpha, Rational m, Rational n)
    : alpha_(std::move(alpha)), m_(std::move(m)), n_(std::move(n)) {
    require_gt_minus_one(alpha_, "alpha");
    require_nonnegative(m_, "M");
    require_nonnegative(n_, "N");
}

ThreeCoefficients gen_jacobi_coefficients(int n, const GeneralizedJacobiParams& params) {
    require_order(n, "gen_jacobi");
    const Rational& a = params.alpha();
    const Rational& b = params.beta();
    const Rational& mm = params.mass_minus();
    const Rational& nn = params.mass_plus();
    const Rational rn(n);

    const Rational bin_na = binom(rn + a, n);  // nonzero for a > -1
    const Rational bin_nb = binom(rn + b, n);
    const Rational bin_nab1 = binom(rn + a + b + Rational(1), n);
    const Rational bin_nab = binom(rn + a + b, n);
    const Rational bin_nab_m1 = binom(rn + a + b, n - 1);
    const Rational bin_nab1_m1 = binom(rn + a + b + Rational(1), n - 1);
    const Rational s1 = a + b + Rational(1);
    const Rational s2 = a + b + Rational(2);

    ThreeCoefficients c;
    c.a0 = Rational(1) + mm * binom(rn + b, n - 1) * bin_nab1 / bin_na + nn * binom(rn + a, n - 1) * bin_nab1 / bin_nb +
           mm * nn * s2 * s2 / ((a + Rational(1)) * (b + Rational(1))) * bin_nab1_m1 * bin_nab1_m1;
    c.a1 = mm / s1 * bin_nb * bin_nab / bin_na + mm * nn / (a + Rational(1)) * bin_nab_m1 * bin_nab1;
    c.a2 = nn / s1 * bin_na * bin_nab / bin_nb + mm * nn / (b + Rational(1)) * bin_nab_m1 * bin_nab1;
    return c;
}

Poly gen_jacobi(int n, const GeneralizedJacobiParams& params) {
    const auto c = gen_jacobi_coefficients(n, params);
    const Poly p = jacobi(n, {params.alpha(), params.beta()});
    // A_1(1-x) - A_2(1+x)
    const Poly factor(std::vector<Rational>{c.a1 - c.a2, -(c.a1 + c.a2)});
    return c.a0 * p + factor * derivative(p, 1);
}

ThreeCoefficients sobolev_laguerre_coefficients(int n, const SobolevLaguerreParams& params) {
    require_order(n, "sobolev_laguerre");
    const Rational& a = params.alpha();
    const Rational& mm = params.mass();
    const Rational& nn = params.derivative_mass();
    const Rational rn(n);
    const Rational a1 = a + Rational(1);

    ThreeCoefficients c;
    c.a0 = Rational(1) + mm * binom(rn + a, n - 1) +
           (rn * (a + Rational(2)) - a1) / (a1 * (a + Rational(3))) * nn * binom(rn + a, n - 2) +
           mm * nn / (a1 * (a + Rational(2))) * binom(rn + a, n - 1) * binom(rn + a1, n - 2);
    c.a1 = mm * binom(rn + a, n) + (rn - Rational(1)) / a1 * nn * binom(rn + a, n - 1) +
           Rational(2) * mm * nn / (a1 * a1) * binom(rn + a, n) * binom(rn + a1, n - 2);
    c.a2 = nn / a1 * binom(rn + a, n - 1) + mm * nn / (a1 * a1) * binom(rn + a, n) * binom(rn + a1, n - 1);
    return c;
}

Poly sobolev_laguerre(int n, const SobolevLaguerreParams& params) {
    const auto c = sobolev_laguerre_coefficients(n, params);
    const Poly l = laguerre(n, {params.alpha()});
    return c.a0 * l + c.a1 * derivative(l, 1) + c.a2 * derivative(l, 2);
}

UltrasphericalCoefficients sym_ultraspherical_coefficients(int n, const Rational& alpha, const Rational& m) {
    require_order(n, "sym_ultraspherical");
    require_gt_minus_one(alpha, "alpha");
    require_nonnegative(m, "M");
    const Rational two_a1 = Rational(2) * alpha + Rational(1);
    if (two_a1.is_zero())
        throw ContinuityCaseError("symmetric ultraspherical: 2 alpha + 1 = 0 is only defined by continuity");
    const Rational rn(n);
    const Rational b1 = binom(rn + Rational(2) * alpha + Rational(1), n - 1);
    const Rational b2 = binom(rn + Rational(2) * alpha + Rational(1), n);
    const Rational b3 = binom(rn + Rational(2) * alpha, n);
    const Rational b4 = binom(rn + Rational(2) * alpha, n - 1);

    UltrasphericalCoefficients c;
    c.c0 = Rational(1) + Rational(2) * m * rn / (alpha + Rational(1)) * b2 + Rational(4) * m * m * b1 * b1;
    c.c1 = Rational(2) * m / two_a1 * b3 + Rational(2) * m * m / (alpha + Rational(1)) * b4 * b2;
    const Rational root = Rational(1) + Rational(2) * m * b1;
    c.c0_factored = root * root;
    c.c1_factored = Rational(2) * m / two_a1 * b3 * root;
    return c;
}

Poly sym_ultraspherical(int n, const Rational& alpha, const Rational& m, UltrasphericalVariant variant) {
    const auto c = sym_ultraspherical_coefficients(n, alpha, m);
    const Poly p = jacobi(n, {alpha, alpha});
    const Poly xdp = Poly::x() * derivative(p, 1);
    if (variant == UltrasphericalVariant::P) return c.c0 * p - c.c1 * xdp;
    const Rational root = Rational(1) + Rational(2) * m * binom(Rational(n + 1) + Rational(2) * alpha, n - 1);
    const Rational shift = Rational(2) * m / (Rational(2) * alpha + Rational(1)) * binom(Rational(n) + Rational(2) * alpha, n);
    return root * p - shift * xdp;
}

Rational gen_jacobi_moment(int k, const GeneralizedJacobiParams& params) {
    require_order(k, "gen_jacobi_moment");
    const Rational a1 = params.alpha() + Rational(1);
    const Rational ab2 = params.alpha() + params.beta() + Rational(2);
    Rational sum(0);
    for (int j = 0; j <= k; ++j)
        sum += binom_general(Rational(k), j) * pow(Rational(-2), j) * pochhammer(a1, j) / pochhammer(ab2, j);
    sum += params.mass_minus() * Rational(k % 2 == 0 ? 1 : -1) + params.mass_plus();
    return sum;
}

Rational inner_product(const Poly& p, const Poly& q, const GeneralizedJacobiParams& params) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    const int top = *p.degree() + *q.degree();
    std::vector<Rational> moments;
    for (int k = 0; k <= top; ++k) moments.push_back(gen_jacobi_moment(k, params));
    Rational sum(0);
    const auto& pc = p.coefficients();
    const auto& qc = q.coefficients();
    for (std::size_t i = 0; i < pc.size(); ++i)
        for (std::size_t j = 0; j < qc.size(); ++j) sum += pc[i] * qc[j] * moments[i + j];
    return sum;
}

Rational sobolev_inner_product(const Poly& p, const Poly& q, const SobolevLaguerreParams& params) {
    Rational sum(0);
    const auto& pc = p.coefficients();
    const auto& qc = q.coefficients();
    const Rational a1 = params.alpha() + Rational(1);
    for (std::size_t i = 0; i < pc.size(); ++i)
        for (std::size_t j = 0; j < qc.size(); ++j)
            sum += pc[i] * qc[j] * pochhammer(a1, static_cast<int>(i + j));
    sum += params.mass() * p(Rational(0)) * q(Rational(0));
    sum += params.derivative_mass() * p.coeff(1) * q.coeff(1);
    return sum;
}

LimitCheckResult limit_check_gen_jacobi_to_laguerre(int n, const Rational& alpha, const Rational& mass,
                                                    std::span<const Rational> samples,
                                                    std::span<const Rational> beta_schedule, double tolerance) {
    require_order(n, "limit_check_gen_jacobi_to_laguerre");
    validate_beta_schedule(beta_schedule);
    LimitCheckResult result;
    result.samples.assign(samples.begin(), samples.end());
    std::vector<Poly> members;
    for (const auto& beta : beta_schedule)
        members.push_back(gen_jacobi(n, GeneralizedJacobiParams(alpha, beta, Rational(0), mass)));
    const Poly target = sobolev_laguerre(n, SobolevLaguerreParams(alpha, mass, Rational(0)));
    for (const auto& x0 : samples) {
        std::vector<Rational> errors;
        for (std::size_t k = 0; k < beta_schedule.size(); ++k)
            errors.push_back(abs(members[k](Rational(1) - Rational(2) * x0 / beta_schedule[k]) - target(x0)));
        result.certificates.push_back(certify_inverse_decay(beta_schedule, std::move(errors), tolerance));
    }
    return result;
}

}  // namespace jacinv
