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

#include "jacinv/special.hpp"

#include <stdexcept>
#include <string>

#include "jacinv/errors.hpp"

namespace jacinv {

Rational pochhammer(const Rational& a, int n) {
    if (n < 0) throw ParameterError("pochhammer: negative order");
    Rational result(1);
    Rational factor = a;
    for (int m = 0; m < n; ++m) {
        result *= factor;
        if (result.is_zero()) return result;
        factor += 1;
    }
    return result;
}

Rational binom_general(const Rational& a, std::int64_t k) {
    if (k < 0) return Rational(0);
    Rational result(1);
    Rational factor = a;
    for (std::int64_t m = 1; m <= k; ++m) {
        result *= factor;
        result /= Rational(m);
        factor -= 1;
    }
    return result;
}

Rational factorial(int n) {
    if (n < 0) throw ParameterError("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational gamma_ratio(const Rational& a, int n) {
    if (n >= 0) return pochhammer(a, n);
    return inverse_pochhammer(a + Rational(n), -n, "gamma_ratio");
}

Rational inverse_pochhammer(const Rational& a, int n, const char* what) {
    const Rational p = pochhammer(a, n);
    if (p.is_zero())
        throw PoleError(std::string(what) + ": (" + a.to_string() + ")_" + std::to_string(n) + " vanishes");
    return Rational(1) / p;
}

}  // namespace jacinv
