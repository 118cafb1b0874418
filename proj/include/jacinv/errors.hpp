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

#ifndef JACINV_ERRORS_HPP
#define JACINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacinv {

/// Base class for every mathematical failure raised by the library.
class MathError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A Pochhammer symbol in a denominator vanished: the parameter point sits on a
/// Gamma pole and must be excluded by the caller.
class PoleError : public MathError {
   public:
    using MathError::MathError;
};

/// A sum that must collapse to a constant came out with positive degree.
class NonConstantError : public MathError {
   public:
    using MathError::MathError;
};

/// A triangular system (or its matrix) has a zero diagonal entry.
class SingularError : public MathError {
   public:
    using MathError::MathError;
};

/// A solution failed its substitution check.
class ResidualError : public MathError {
   public:
    using MathError::MathError;
};

/// Parameter point where the coefficient formulas only hold by continuity
/// (alpha + beta + 1 = 0 for the generalized Jacobi family).
class ContinuityCaseError : public MathError {
   public:
    using MathError::MathError;
};

/// Parameter outside its admissible range (alpha <= -1, M < 0, n < 0, ...).
class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed Rational or Poly text.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace jacinv

#endif
