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

#ifndef JACINV_FAMILIES_HPP
#define JACINV_FAMILIES_HPP

#include <span>
#include <vector>

#include "jacinv/poly.hpp"
#include "jacinv/rational.hpp"
#include "jacinv/report.hpp"

// Classical Jacobi, Laguerre and Charlier polynomials with exact
// coefficients. All three hold for arbitrary rational parameters; the
// polynomial degree may drop below n for degenerate Jacobi parameters.

namespace jacinv {

struct JacobiParams {
    Rational alpha;
    Rational beta;
};

struct LaguerreParams {
    Rational alpha;
};

struct CharlierParams {
    Rational a;
};

/// Three independent closed forms of P_n^{(alpha,beta)}.
enum class JacobiForm {
    /// sum_k (n+a+b+1)_k/k! (a+k+1)_{n-k}/(n-k)! ((x-1)/2)^k
    pochhammer,
    /// (-1)^n sum_k (-n-k-a-b)_k/k! (-n-a)_{n-k}/(n-k)! ((x-1)/2)^k
    reflected,
    /// 2^{-n} sum_k binom(n+a, n-k) binom(n+b, k) (x-1)^k (x+1)^{n-k}
    binomial,
};

Poly jacobi(int n, const JacobiParams& params, JacobiForm form = JacobiForm::pochhammer);

/// L_n^{(alpha)}(x) = sum_k (-1)^k binom(n+alpha, n-k) x^k/k!.
Poly laguerre(int n, const LaguerreParams& params);

/// C_n^{(a)}(x): coefficient of t^n in e^{-at} (1+t)^x, extracted from the
/// Cauchy product of the two series.
Poly charlier(int n, const CharlierParams& params);

/// D^i P_n = (n+a+b+1)_i/2^i P_{n-i}^{(a+i,b+i)}, checked as Poly equality.
IdentityReport check_derivative_shift(int n, int i, const JacobiParams& params);
/// D^i L_n = (-1)^i L_{n-i}^{(a+i)}.
IdentityReport check_derivative_shift(int n, int i, const LaguerreParams& params);

/// (1-x^2)y'' + [b-a-(a+b+2)x]y' + n(n+a+b+1)y
Poly ode_residual(const Poly& y, int n, const JacobiParams& params);
/// xy'' + (a+1-x)y' + ny
Poly ode_residual(const Poly& y, int n, const LaguerreParams& params);

/// O(1/beta) convergence certificate for a sequence of exact errors e(beta).
///
/// scaled[k] = e(beta_k) * beta_k. The envelope entry for k >= 1 is
/// scaled[k] + |scaled[k] - scaled[k-1]|, and the certificate holds when the
/// envelope is non-increasing (up to a relative tolerance) after its first
/// entry.
struct LimitCertificate {
    std::vector<Rational> betas;
    std::vector<Rational> errors;
    std::vector<Rational> scaled;
    std::vector<Rational> envelope;
    bool passed = true;
};

LimitCertificate certify_inverse_decay(std::span<const Rational> betas, std::vector<Rational> errors,
                                       double tolerance = 0.0);

/// Throws ParameterError unless the schedule is positive and strictly increasing.
void validate_beta_schedule(std::span<const Rational> betas);

struct LimitCheckResult {
    std::vector<Rational> samples;
    std::vector<LimitCertificate> certificates;  // one per sample
    bool passed() const;
};

/// Certifies P_n^{(alpha,beta)}(1 - 2x0/beta) -> L_n^{(alpha)}(x0) for each x0.
LimitCheckResult limit_check_jacobi_to_laguerre(int n, const Rational& alpha, std::span<const Rational> samples,
                                                std::span<const Rational> beta_schedule, double tolerance = 0.0);

}  // namespace jacinv

#endif
