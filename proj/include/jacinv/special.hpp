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

#ifndef JACINV_SPECIAL_HPP
#define JACINV_SPECIAL_HPP

#include <cstdint>

#include "jacinv/rational.hpp"

// Scalar special-function primitives. Every Gamma function that shows up in
// the inversion formulas is reduced to one of these; nothing here is
// transcendental.

namespace jacinv {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);

/// Generalized binomial a(a-1)...(a-k+1)/k!. Returns 0 for k < 0 so that
/// coefficient formulas with binom(., n-1) remain valid at n = 0.
Rational binom_general(const Rational& a, std::int64_t k);

/// n! as a Rational.
Rational factorial(int n);

/// Gamma(a+n)/Gamma(a): (a)_n for n >= 0, 1/(a+n)_{-n} for n < 0.
/// Throws PoleError when the negative-shift Pochhammer vanishes.
Rational gamma_ratio(const Rational& a, int n);

/// 1/(a)_n, throwing PoleError (with `what` in the message) when (a)_n = 0.
Rational inverse_pochhammer(const Rational& a, int n, const char* what = "pochhammer");

}  // namespace jacinv

#endif
