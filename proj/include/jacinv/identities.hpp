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

#ifndef JACINV_IDENTITIES_HPP
#define JACINV_IDENTITIES_HPP

#include <span>
#include <vector>

#include "jacinv/families.hpp"
#include "jacinv/poly.hpp"
#include "jacinv/rational.hpp"
#include "jacinv/report.hpp"

// Inversion formulas and summation identities, each evaluated in a Gamma-free
// form. Where an identity carries Gamma factors, both sides are multiplied by
// the Gamma factor of the right-hand side so that every ratio becomes a
// Pochhammer symbol; the normalization used is noted on each function.
//
// Inversion sums return the constant they collapse to (rather than a bool),
// so a wrong value is visible in the failure report.

namespace jacinv {

enum class LaguerreInversion {
    /// sum_{k=j}^i L_{i-k}^{(-a-i-1)}(-x) L_{k-j}^{(a+j)}(x)
    main,
    /// sum_{k=j}^i L_{i-k}^{(a)}(x) L_{k-j}^{(-a-2)}(-x)
    star,
};

/// Returns the constant value of p; throws NonConstantError otherwise.
Rational constant_value(const Poly& p, const char* what);

/// sum_{k=j}^i C_{i-k}^{(-a)}(-x) C_{k-j}^{(a)}(x); equals delta_ij.
Rational inv_charlier(const Rational& a, int i, int j);

Rational inv_laguerre(const Rational& alpha, int i, int j, LaguerreInversion variant);

/// Summand k of the Jacobi inversion sum:
/// (a+b+2k+1)/(a+b+k+j+1)_{i-j+1} P_{i-k}^{(-a-i-1,-b-i-1)}(x) P_{k-j}^{(a+j,b+j)}(x).
/// Throws PoleError when the Pochhammer vanishes.
Poly inv_jacobi_term(const Rational& alpha, const Rational& beta, int i, int j, int k);

/// sum_{k=j}^i inv_jacobi_term(...); equals delta_ij.
Rational inv_jacobi(const Rational& alpha, const Rational& beta, int i, int j);

/// sum_{k=0}^n L_k^{(a+p)}(x) L_{n-k}^{(-a-q)}(-x); equals (p-q+2)_n/n!.
Rational gen_inv_laguerre(const Rational& alpha, const Rational& p, const Rational& q, int n);

/// Distinct sample points 0, 1, -1, 2, -2, ... for the second variable of a
/// bivariate identity. count = degree bound + 1 makes agreement a proof.
std::vector<Rational> bivariate_samples(int count);

/// Left-hand side of the master Jacobi identity at a fixed y, as a Poly in x.
/// Normalized by Gamma(a+b+1):
/// sum_k (a+b+2k+1)(a+b+1)_k/(a+b+1)_{n+k+1} P_k^{(a,b)}(x) P_{n-k}^{(-n-a-1,-n-b-1)}(y).
Poly master_jacobi_lhs(const Rational& alpha, const Rational& beta, int n, const Rational& y);

/// Checks master_jacobi_lhs = ((x-y)/2)^n/n! at n+1 samples of y.
IdentityReport master_jacobi(const Rational& alpha, const Rational& beta, int n);

/// The y = x and y = -x specializations of the master identity at orders
/// (i, j): the y = x sum (parameters shifted by j, n = i-j) must reproduce
/// inv_jacobi, and the y = -x sum must equal x^{i-j}/(i-j)!.
IdentityReport master_jacobi_specializations(const Rational& alpha, const Rational& beta, int i, int j);

/// The y = -x inversion sum as a Poly in x.
Poly master_jacobi_reflected_sum(const Rational& alpha, const Rational& beta, int i, int j);

/// x^n/n! = sum_k (-1)^k binom(n+a, n-k) L_k^{(a)}.
IdentityReport monomial_expansion(int n, const LaguerreParams& params);
/// ((1-x)/2)^n = sum_k (-n)_k(a+b+1)_k(a+k+1)_{n-k}(a+b+2k+1)/(a+b+1)_{n+k+1} P_k,
/// normalized by Gamma(a+b+1).
IdentityReport monomial_expansion(int n, const JacobiParams& params);

/// sum_k (-n)_k (b)_k (b+2k) / ((b+1)_{n+k} k!), normalized by Gamma(b+1).
/// Zero for n >= 1.
Rational nulalg_sum(const Rational& b, int n);

/// sum_k (-n)_k (b)_k / ((c)_k k!). Throws PoleError when (c)_n = 0.
Rational vandermonde(const Rational& b, const Rational& c, int n);

/// Gamma(c+n)-normalized general form, valid for all b and c:
/// sum_k (-n)_k (b)_k (c+k)_{n-k} / k!  (equals (c-b)_n).
Rational vandermonde_general(const Rational& b, const Rational& c, int n);

/// sum_k L_k^{(a)}(x) L_{n-k}^{(b)}(y) at fixed y, as a Poly in x.
Poly laguerre_convolution_lhs(const Rational& alpha, const Rational& beta, int n, const Rational& y);

/// sum_k L_k^{(a)}(x) L_{n-k}^{(b)}(y) = L_n^{(a+b+1)}(x+y), by y-sampling.
IdentityReport laguerre_convolution(const Rational& alpha, const Rational& beta, int n);

/// sum_k L_k^{(a)}(x) L_{n-k}^{(-n-a-1)}(-y) = (y-x)^n/n!, by y-sampling.
IdentityReport master_laguerre(const Rational& alpha, int n);

/// Term-wise certificate that the Jacobi inversion sum, with x -> 1-2x/beta
/// and scaled by beta^{i-j}, approaches the Laguerre inversion sum. The error
/// for each beta is the sum over k of |term_k(beta) - laguerre_term_k|.
LimitCheckResult limit_check_inversion(const Rational& alpha, int i, int j, std::span<const Rational> samples,
                                       std::span<const Rational> beta_schedule, double tolerance = 0.0);

}  // namespace jacinv

#endif
