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

#include "jacinv/families.hpp"

#include "jacinv/errors.hpp"
#include "jacinv/special.hpp"

namespace jacinv {

namespace {

void require_order(int n, const char* what) {
    if (n < 0) throw ParameterError(std::string(what) + ": negative degree");
}

// Powers 1, u, u^2, ..., u^n of a polynomial u.
std::vector<Poly> powers(const Poly& u, int n) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.emplace_back(Rational(1));
    for (int k = 1; k <= n; ++k) out.push_back(out.back() * u);
    return out;
}

Poly jacobi_pochhammer(int n, const Rational& a, const Rational& b) {
    const auto u = powers(Poly(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}), n);
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational c = pochhammer(a + b + Rational(n + 1), k) / factorial(k) *
                           pochhammer(a + Rational(k + 1), n - k) / factorial(n - k);
        sum += c * u[static_cast<std::size_t>(k)];
    }
    return sum;
}

Poly jacobi_reflected(int n, const Rational& a, const Rational& b) {
    const auto u = powers(Poly(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}), n);
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational c = pochhammer(-Rational(n + k) - a - b, k) / factorial(k) *
                           pochhammer(-Rational(n) - a, n - k) / factorial(n - k);
        sum += c * u[static_cast<std::size_t>(k)];
    }
    return n % 2 == 0 ? sum : -sum;
}

Poly jacobi_binomial(int n, const Rational& a, const Rational& b) {
    const auto xm = powers(Poly(std::vector<Rational>{Rational(-1), Rational(1)}), n);
    const auto xp = powers(Poly(std::vector<Rational>{Rational(1), Rational(1)}), n);
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational c = binom_general(Rational(n) + a, n - k) * binom_general(Rational(n) + b, k);
        if (c.is_zero()) continue;
        sum += c * (xm[static_cast<std::size_t>(k)] * xp[static_cast<std::size_t>(n - k)]);
    }
    return sum * pow(Rational(2), -n);
}

}  // namespace

Poly jacobi(int n, const JacobiParams& params, JacobiForm form) {
    require_order(n, "jacobi");
    switch (form) {
        case JacobiForm::pochhammer:
            return jacobi_pochhammer(n, params.alpha, params.beta);
        case JacobiForm::reflected:
            return jacobi_reflected(n, params.alpha, params.beta);
        case JacobiForm::binomial:
            return jacobi_binomial(n, params.alpha, params.beta);
    }
    throw ParameterError("jacobi: unknown form");
}

Poly laguerre(int n, const LaguerreParams& params) {
    require_order(n, "laguerre");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational v = binom_general(Rational(n) + params.alpha, n - k) / factorial(k);
        c[static_cast<std::size_t>(k)] = k % 2 == 0 ? v : -v;
    }
    return Poly(std::move(c));
}

Poly charlier(int n, const CharlierParams& params) {
    require_order(n, "charlier");
    // (1+t)^x = sum_m binom(x, m) t^m with binom(x, m) a degree-m polynomial in x.
    std::vector<Poly> binomial_series;
    binomial_series.reserve(static_cast<std::size_t>(n) + 1);
    binomial_series.emplace_back(Rational(1));
    for (int m = 1; m <= n; ++m) {
        const Poly step(std::vector<Rational>{Rational(-(m - 1), m), Rational(1, m)});  // (x-m+1)/m
        binomial_series.push_back(binomial_series.back() * step);
    }
    // e^{-at} = sum_m (-a)^m/m! t^m
    Poly sum;
    for (int m = 0; m <= n; ++m) {
        const Rational exp_coeff = pow(-params.a, n - m) / factorial(n - m);
        sum += exp_coeff * binomial_series[static_cast<std::size_t>(m)];
    }
    return sum;
}

IdentityReport check_derivative_shift(int n, int i, const JacobiParams& params) {
    if (i < 0 || i > n) throw ParameterError("check_derivative_shift: need 0 <= i <= n");
    IdentityReport report("diff-shift-jacobi", {n, n});
    report.with_param("alpha", params.alpha).with_param("beta", params.beta);
    const Poly lhs = derivative(jacobi(n, params), i);
    const Rational scale = pochhammer(Rational(n + 1) + params.alpha + params.beta, i) * pow(Rational(2), -i);
    const Poly rhs = scale * jacobi(n - i, {params.alpha + Rational(i), params.beta + Rational(i)});
    report.expect_equal({n, i}, rhs, lhs);
    return report;
}

IdentityReport check_derivative_shift(int n, int i, const LaguerreParams& params) {
    if (i < 0 || i > n) throw ParameterError("check_derivative_shift: need 0 <= i <= n");
    IdentityReport report("diff-shift-laguerre", {n, n});
    report.with_param("alpha", params.alpha);
    const Poly lhs = derivative(laguerre(n, params), i);
    Poly rhs = laguerre(n - i, {params.alpha + Rational(i)});
    if (i % 2 != 0) rhs = -rhs;
    report.expect_equal({n, i}, rhs, lhs);
    return report;
}

Poly ode_residual(const Poly& y, int n, const JacobiParams& params) {
    const Rational& a = params.alpha;
    const Rational& b = params.beta;
    const Poly one_minus_x2(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
    const Poly drift(std::vector<Rational>{b - a, -(a + b + Rational(2))});
    const Rational eigen = Rational(n) * (Rational(n + 1) + a + b);
    return one_minus_x2 * derivative(y, 2) + drift * derivative(y, 1) + eigen * y;
}

Poly ode_residual(const Poly& y, int n, const LaguerreParams& params) {
    const Poly drift(std::vector<Rational>{params.alpha + Rational(1), Rational(-1)});
    return Poly::x() * derivative(y, 2) + drift * derivative(y, 1) + Rational(n) * y;
}

void validate_beta_schedule(std::span<const Rational> betas) {
    for (std::size_t k = 0; k < betas.size(); ++k) {
        if (betas[k].sign() <= 0) throw ParameterError("beta schedule must be positive");
        if (k > 0 && !(betas[k - 1] < betas[k])) throw ParameterError("beta schedule must be strictly increasing");
    }
}

LimitCertificate certify_inverse_decay(std::span<const Rational> betas, std::vector<Rational> errors,
                                       double tolerance) {
    if (betas.size() != errors.size()) throw ParameterError("certify_inverse_decay: size mismatch");
    if (tolerance < 0) throw ParameterError("certify_inverse_decay: negative tolerance");
    LimitCertificate cert;
    cert.betas.assign(betas.begin(), betas.end());
    cert.errors = std::move(errors);
    for (std::size_t k = 0; k < betas.size(); ++k) cert.scaled.push_back(abs(cert.errors[k]) * betas[k]);
    for (std::size_t k = 1; k < cert.scaled.size(); ++k)
        cert.envelope.push_back(cert.scaled[k] + abs(cert.scaled[k] - cert.scaled[k - 1]));

    const Rational slack = Rational(1) + Rational::from_double(tolerance);
    for (std::size_t m = 2; m < cert.envelope.size(); ++m)
        if (cert.envelope[m] > cert.envelope[m - 1] * slack) cert.passed = false;
    return cert;
}

bool LimitCheckResult::passed() const {
    for (const auto& c : certificates)
        if (!c.passed) return false;
    return true;
}

LimitCheckResult limit_check_jacobi_to_laguerre(int n, const Rational& alpha, std::span<const Rational> samples,
                                                std::span<const Rational> beta_schedule, double tolerance) {
    require_order(n, "limit_check_jacobi_to_laguerre");
    validate_beta_schedule(beta_schedule);
    LimitCheckResult result;
    result.samples.assign(samples.begin(), samples.end());

    std::vector<Poly> jacobis;
    for (const auto& beta : beta_schedule) jacobis.push_back(jacobi(n, {alpha, beta}));
    const Poly target = laguerre(n, {alpha});

    for (const auto& x0 : samples) {
        const Rational limit_value = target(x0);
        std::vector<Rational> errors;
        for (std::size_t k = 0; k < beta_schedule.size(); ++k) {
            const Rational point = Rational(1) - Rational(2) * x0 / beta_schedule[k];
            errors.push_back(abs(jacobis[k](point) - limit_value));
        }
        result.certificates.push_back(certify_inverse_decay(beta_schedule, std::move(errors), tolerance));
    }
    return result;
}

}  // namespace jacinv
