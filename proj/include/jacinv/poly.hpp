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

#ifndef JACINV_POLY_HPP
#define JACINV_POLY_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacinv/rational.hpp"

namespace jacinv {

/// Dense univariate polynomial over Rational in the variable x.
///
/// Coefficient i multiplies x^i. The coefficient vector never carries trailing
/// zeros, so the zero polynomial is the empty vector and structural equality is
/// polynomial equality.
class Poly {
   public:
    Poly() = default;
    Poly(Rational constant);  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coefficients);

    /// The polynomial x.
    static Poly x();
    /// c * x^k.
    static Poly monomial(const Rational& c, int k);

    /// Degree, or nullopt for the zero polynomial (degree minus infinity).
    std::optional<int> degree() const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// True for the zero polynomial and for nonzero constants.
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of x^i; zero past the degree.
    Rational coeff(int i) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x0) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Canonical text: "3/2*x^2 - 1/2", "x", "-x^3 + 2", "0".
    std::string to_string() const;
    /// Parses the canonical text form. Terms may appear in any order and
    /// repeated powers are summed. Throws ParseError.
    static Poly parse(std::string_view text);

   private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// D^i p.
Poly derivative(const Poly& p, int i = 1);

Rational evaluate(const Poly& p, const Rational& x0);

/// p(a*x + b), expanded.
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace jacinv

#endif
