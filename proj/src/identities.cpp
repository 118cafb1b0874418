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

#include "jacinv/identities.hpp"

#include <functional>
#include <string>

#include "jacinv/errors.hpp"
#include "jacinv/special.hpp"

namespace jacinv {

namespace {

void require_triangle(int i, int j, const char* what) {
    if (j < 0 || i < j) throw ParameterError(std::string(what) + ": need 0 <= j <= i");
}

void require_order(int n, const char* what) {
    if (n < 0) throw ParameterError(std::string(what) + ": negative order");
}

Poly reflect(const Poly& p) { return compose_affine(p, Rational(-1), Rational(0)); }

Rational kronecker(int i, int j) { return Rational(i == j ? 1 : 0); }

// sum_k (a+b+2k+1)(a+b+1)_k/(a+b+1)_{n+k+1} P_k^{(a,b)}(x) second(P_{n-k}^{(-n-a-1,-n-b-1)}),
// where `second` decides how the y-variable is specialized.
Poly master_sum(const Rational& alpha, const Rational& beta, int n, const std::function<Poly(const Poly&)>& second) {
    const Rational s = alpha + beta;
    const JacobiParams reflected{-Rational(n + 1) - alpha, -Rational(n + 1) - beta};
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational weight = (s + Rational(2 * k + 1)) * pochhammer(s + Rational(1), k) *
                                inverse_pochhammer(s + Rational(1), n + k + 1, "master identity weight");
        sum += weight * (jacobi(k, {alpha, beta}) * second(jacobi(n - k, reflected)));
    }
    return sum;
}

}  // namespace

Rational constant_value(const Poly& p, const char* what) {
    if (!p.is_constant())
        throw NonConstantError(std::string(what) + ": sum is not constant: " + p.to_string());
    return p.coeff(0);
}

Rational inv_charlier(const Rational& a, int i, int j) {
    require_triangle(i, j, "inv_charlier");
    Poly sum;
    for (int k = j; k <= i; ++k) sum += reflect(charlier(i - k, {-a})) * charlier(k - j, {a});
    return constant_value(sum, "inv_charlier");
}

Rational inv_laguerre(const Rational& alpha, int i, int j, LaguerreInversion variant) {
    require_triangle(i, j, "inv_laguerre");
    Poly sum;
    for (int k = j; k <= i; ++k) {
        if (variant == LaguerreInversion::main)
            sum += reflect(laguerre(i - k, {-alpha - Rational(i + 1)})) * laguerre(k - j, {alpha + Rational(j)});
        else
            sum += laguerre(i - k, {alpha}) * reflect(laguerre(k - j, {-alpha - Rational(2)}));
    }
    return constant_value(sum, "inv_laguerre");
}

Poly inv_jacobi_term(const Rational& alpha, const Rational& beta, int i, int j, int k) {
    require_triangle(i, j, "inv_jacobi_term");
    if (k < j || k > i) throw ParameterError("inv_jacobi_term: need j <= k <= i");
    const Rational s = alpha + beta;
    const Rational weight =
        (s + Rational(2 * k + 1)) * inverse_pochhammer(s + Rational(k + j + 1), i - j + 1, "inv_jacobi weight");
    const JacobiParams upper{-alpha - Rational(i + 1), -beta - Rational(i + 1)};
    const JacobiParams lower{alpha + Rational(j), beta + Rational(j)};
    return weight * (jacobi(i - k, upper) * jacobi(k - j, lower));
}

Rational inv_jacobi(const Rational& alpha, const Rational& beta, int i, int j) {
    require_triangle(i, j, "inv_jacobi");
    Poly sum;
    for (int k = j; k <= i; ++k) sum += inv_jacobi_term(alpha, beta, i, j, k);
    return constant_value(sum, "inv_jacobi");
}

Rational gen_inv_laguerre(const Rational& alpha, const Rational& p, const Rational& q, int n) {
    require_order(n, "gen_inv_laguerre");
    Poly sum;
    for (int k = 0; k <= n; ++k) sum += laguerre(k, {alpha + p}) * reflect(laguerre(n - k, {-alpha - q}));
    return constant_value(sum, "gen_inv_laguerre");
}

std::vector<Rational> bivariate_samples(int count) {
    std::vector<Rational> out;
    for (int s = 0; s < count; ++s) out.emplace_back(s % 2 == 0 ? -(s / 2) : (s + 1) / 2);
    return out;
}

Poly master_jacobi_lhs(const Rational& alpha, const Rational& beta, int n, const Rational& y) {
    require_order(n, "master_jacobi_lhs");
    return master_sum(alpha, beta, n, [&y](const Poly& p) { return Poly(p(y)); });
}

IdentityReport master_jacobi(const Rational& alpha, const Rational& beta, int n) {
    require_order(n, "master_jacobi");
    IdentityReport report("master-jacobi", {n, n});
    report.with_param("alpha", alpha).with_param("beta", beta);
    const Rational inv_fact = Rational(1) / factorial(n);
    for (const auto& y : bivariate_samples(n + 1)) {
        const Poly lhs = master_jacobi_lhs(alpha, beta, n, y);
        const Poly half_diff(std::vector<Rational>{-y / Rational(2), Rational(1, 2)});
        Poly rhs(inv_fact);
        for (int m = 0; m < n; ++m) rhs *= half_diff;
        if (!report.expect_equal({n}, rhs, lhs)) break;
    }
    return report;
}

Poly master_jacobi_reflected_sum(const Rational& alpha, const Rational& beta, int i, int j) {
    require_triangle(i, j, "master_jacobi_reflected_sum");
    const Rational s = alpha + beta;
    const JacobiParams upper{-alpha - Rational(i + 1), -beta - Rational(i + 1)};
    const JacobiParams lower{alpha + Rational(j), beta + Rational(j)};
    Poly sum;
    for (int k = j; k <= i; ++k) {
        const Rational weight =
            (s + Rational(2 * k + 1)) * inverse_pochhammer(s + Rational(k + j + 1), i - j + 1, "inv_jacobi weight");
        sum += weight * (reflect(jacobi(i - k, upper)) * jacobi(k - j, lower));
    }
    return sum;
}

IdentityReport master_jacobi_specializations(const Rational& alpha, const Rational& beta, int i, int j) {
    require_triangle(i, j, "master_jacobi_specializations");
    IdentityReport report("master-specializations", {j, i});
    report.with_param("alpha", alpha).with_param("beta", beta);
    const int n = i - j;

    // y = x: parameters shifted by j.
    try {
        const Rational shifted_alpha = alpha + Rational(j);
        const Rational shifted_beta = beta + Rational(j);
        const Poly diagonal = master_sum(shifted_alpha, shifted_beta, n, [](const Poly& p) { return p; });
        const Rational value = constant_value(diagonal, "master y=x");
        report.expect_equal({i, j, 1}, kronecker(i, j), value);
        try {
            report.expect_equal({i, j, 1}, inv_jacobi(alpha, beta, i, j), value);
        } catch (const PoleError& e) {
            report.skip({i, j, 1}, std::string("inv_jacobi comparison: ") + e.what());
        }
    } catch (const PoleError& e) {
        report.skip({i, j, 1}, e.what());
    }

    // y = -x
    try {
        const Poly reflected = master_jacobi_reflected_sum(alpha, beta, i, j);
        report.expect_equal({i, j, -1}, Poly::monomial(Rational(1) / factorial(n), n), reflected);
    } catch (const PoleError& e) {
        report.skip({i, j, -1}, e.what());
    }
    return report;
}

IdentityReport monomial_expansion(int n, const LaguerreParams& params) {
    require_order(n, "monomial_expansion");
    IdentityReport report("monomial-laguerre", {n, n});
    report.with_param("alpha", params.alpha);
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        Rational c = binom_general(Rational(n) + params.alpha, n - k);
        if (k % 2 != 0) c = -c;
        sum += c * laguerre(k, params);
    }
    report.expect_equal({n}, Poly::monomial(Rational(1) / factorial(n), n), sum);
    return report;
}

IdentityReport monomial_expansion(int n, const JacobiParams& params) {
    require_order(n, "monomial_expansion");
    IdentityReport report("monomial-jacobi", {n, n});
    report.with_param("alpha", params.alpha).with_param("beta", params.beta);
    const Rational& a = params.alpha;
    const Rational s = params.alpha + params.beta;
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational c = pochhammer(Rational(-n), k) * pochhammer(s + Rational(1), k) *
                           pochhammer(a + Rational(k + 1), n - k) * (s + Rational(2 * k + 1)) *
                           inverse_pochhammer(s + Rational(1), n + k + 1, "formJac weight");
        sum += c * jacobi(k, params);
    }
    Poly rhs(Rational(1));
    const Poly half_one_minus_x(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
    for (int m = 0; m < n; ++m) rhs *= half_one_minus_x;
    report.expect_equal({n}, rhs, sum);
    return report;
}

Rational nulalg_sum(const Rational& b, int n) {
    require_order(n, "nulalg_sum");
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        sum += pochhammer(Rational(-n), k) * pochhammer(b, k) * (b + Rational(2 * k)) *
               inverse_pochhammer(b + Rational(1), n + k, "nulalg weight") / factorial(k);
    }
    return sum;
}

Rational vandermonde(const Rational& b, const Rational& c, int n) {
    require_order(n, "vandermonde");
    if (pochhammer(c, n).is_zero())
        throw PoleError("vandermonde: (" + c.to_string() + ")_" + std::to_string(n) + " vanishes");
    Rational sum(0);
    for (int k = 0; k <= n; ++k)
        sum += pochhammer(Rational(-n), k) * pochhammer(b, k) * inverse_pochhammer(c, k, "vandermonde") / factorial(k);
    return sum;
}

Rational vandermonde_general(const Rational& b, const Rational& c, int n) {
    require_order(n, "vandermonde_general");
    Rational sum(0);
    for (int k = 0; k <= n; ++k)
        sum += pochhammer(Rational(-n), k) * pochhammer(b, k) * pochhammer(c + Rational(k), n - k) / factorial(k);
    return sum;
}

Poly laguerre_convolution_lhs(const Rational& alpha, const Rational& beta, int n, const Rational& y) {
    require_order(n, "laguerre_convolution_lhs");
    Poly sum;
    for (int k = 0; k <= n; ++k) sum += laguerre(n - k, {beta})(y) * laguerre(k, {alpha});
    return sum;
}

IdentityReport laguerre_convolution(const Rational& alpha, const Rational& beta, int n) {
    require_order(n, "laguerre_convolution");
    IdentityReport report("convolution", {n, n});
    report.with_param("alpha", alpha).with_param("beta", beta);
    const Poly target = laguerre(n, {alpha + beta + Rational(1)});
    for (const auto& y : bivariate_samples(n + 1)) {
        const Poly rhs = compose_affine(target, Rational(1), y);
        if (!report.expect_equal({n}, rhs, laguerre_convolution_lhs(alpha, beta, n, y))) break;
    }
    return report;
}

IdentityReport master_laguerre(const Rational& alpha, int n) {
    require_order(n, "master_laguerre");
    IdentityReport report("master-laguerre", {n, n});
    report.with_param("alpha", alpha);
    const Rational beta = -Rational(n + 1) - alpha;
    const Rational inv_fact = Rational(1) / factorial(n);
    for (const auto& y : bivariate_samples(n + 1)) {
        const Poly lhs = laguerre_convolution_lhs(alpha, beta, n, -y);
        const Poly y_minus_x(std::vector<Rational>{y, Rational(-1)});
        Poly rhs(inv_fact);
        for (int m = 0; m < n; ++m) rhs *= y_minus_x;
        if (!report.expect_equal({n}, rhs, lhs)) break;
    }
    return report;
}

LimitCheckResult limit_check_inversion(const Rational& alpha, int i, int j, std::span<const Rational> samples,
                                       std::span<const Rational> beta_schedule, double tolerance) {
    require_triangle(i, j, "limit_check_inversion");
    validate_beta_schedule(beta_schedule);
    LimitCheckResult result;
    result.samples.assign(samples.begin(), samples.end());

    // term[b][k-j]: Jacobi inversion summand at beta_b, scaled by beta_b^{i-j}.
    std::vector<std::vector<Poly>> terms;
    for (const auto& beta : beta_schedule) {
        std::vector<Poly> row;
        const Rational scale = pow(beta, i - j);
        for (int k = j; k <= i; ++k) row.push_back(scale * inv_jacobi_term(alpha, beta, i, j, k));
        terms.push_back(std::move(row));
    }
    std::vector<Poly> limits;
    for (int k = j; k <= i; ++k)
        limits.push_back(reflect(laguerre(i - k, {-alpha - Rational(i + 1)})) * laguerre(k - j, {alpha + Rational(j)}));

    for (const auto& x0 : samples) {
        std::vector<Rational> errors;
        for (std::size_t b = 0; b < beta_schedule.size(); ++b) {
            const Rational point = Rational(1) - Rational(2) * x0 / beta_schedule[b];
            Rational e(0);
            for (std::size_t m = 0; m < limits.size(); ++m) e += abs(terms[b][m](point) - limits[m](x0));
            errors.push_back(std::move(e));
        }
        result.certificates.push_back(certify_inverse_decay(beta_schedule, std::move(errors), tolerance));
    }
    return result;
}

}  // namespace jacinv
