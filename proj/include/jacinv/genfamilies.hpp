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

#ifndef JACINV_GENFAMILIES_HPP
#define JACINV_GENFAMILIES_HPP

#include <span>

#include "jacinv/families.hpp"
#include "jacinv/poly.hpp"
#include "jacinv/rational.hpp"

// Polynomials orthogonal with respect to classical weights plus point masses:
// Koornwinder's generalized Jacobi polynomials (mass M at x = -1, N at x = +1),
// Sobolev-type Laguerre polynomials (M f(0)g(0) + N f'(0)g'(0)), and the
// symmetric generalized ultraspherical case beta = alpha, N = M.

namespace jacinv {

/// alpha > -1, beta > -1, M >= 0, N >= 0, alpha + beta + 1 != 0.
class GeneralizedJacobiParams {
   public:
    /// Throws ParameterError on a range violation, ContinuityCaseError when
    /// alpha + beta + 1 = 0.
    GeneralizedJacobiParams(Rational alpha, Rational beta, Rational m, Rational n);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& mass_minus() const noexcept { return m_; }
    const Rational& mass_plus() const noexcept { return n_; }

   private:
    Rational alpha_, beta_, m_, n_;
};

/// alpha > -1, M >= 0, N >= 0.
class SobolevLaguerreParams {
   public:
    SobolevLaguerreParams(Rational alpha, Rational m, Rational n);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& mass() const noexcept { return m_; }
    const Rational& derivative_mass() const noexcept { return n_; }

   private:
    Rational alpha_, m_, n_;
};

struct ThreeCoefficients {
    Rational a0, a1, a2;
};

/// A_0, A_1, A_2 with P_n^{a,b,M,N} = A_0 P_n + [A_1(1-x) - A_2(1+x)] D P_n.
ThreeCoefficients gen_jacobi_coefficients(int n, const GeneralizedJacobiParams& params);
Poly gen_jacobi(int n, const GeneralizedJacobiParams& params);

/// A_0, A_1, A_2 with L_n^{a,M,N} = A_0 L_n + A_1 D L_n + A_2 D^2 L_n.
ThreeCoefficients sobolev_laguerre_coefficients(int n, const SobolevLaguerreParams& params);
Poly sobolev_laguerre(int n, const SobolevLaguerreParams& params);

enum class UltrasphericalVariant { P, Q };

/// C_0, C_1 as printed, and their factored forms.
struct UltrasphericalCoefficients {
    Rational c0, c1;
    Rational c0_factored, c1_factored;
};

/// Throws ParameterError unless alpha > -1 and M >= 0; ContinuityCaseError
/// when 2 alpha + 1 = 0.
UltrasphericalCoefficients sym_ultraspherical_coefficients(int n, const Rational& alpha, const Rational& m);

/// P variant: C_0 P_n^{(a,a)} - C_1 x D P_n^{(a,a)}.
/// Q variant: [1 + 2M binom(n+2a+1, n-1)] P_n^{(a,a)} - 2M/(2a+1) binom(n+2a, n) x D P_n^{(a,a)}.
Poly sym_ultraspherical(int n, const Rational& alpha, const Rational& m, UltrasphericalVariant variant);

/// k-th moment of the normalized generalized Jacobi measure:
/// sum_j binom(k,j) (-2)^j (a+1)_j/(a+b+2)_j + M(-1)^k + N.
Rational gen_jacobi_moment(int k, const GeneralizedJacobiParams& params);

Rational inner_product(const Poly& p, const Poly& q, const GeneralizedJacobiParams& params);

/// Continuous moments are (a+1)_k; adds M p(0)q(0) + N p'(0)q'(0).
Rational sobolev_inner_product(const Poly& p, const Poly& q, const SobolevLaguerreParams& params);

/// Certifies P_n^{a,beta,0,M}(1 - 2x0/beta) -> L_n^{a,M,0}(x0) along the schedule.
LimitCheckResult limit_check_gen_jacobi_to_laguerre(int n, const Rational& alpha, const Rational& mass,
                                                    std::span<const Rational> samples,
                                                    std::span<const Rational> beta_schedule, double tolerance = 0.0);

}  // namespace jacinv

#endif
