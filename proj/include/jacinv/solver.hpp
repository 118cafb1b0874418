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

#ifndef JACINV_SOLVER_HPP
#define JACINV_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "jacinv/families.hpp"
#include "jacinv/poly.hpp"

namespace jacinv {

/// Lower-triangular (size x size) matrix with Poly entries; (i, j) is stored
/// for j <= i and reads as the zero Poly above the diagonal.
class TriangularPolyMatrix {
   public:
    explicit TriangularPolyMatrix(int size);

    int size() const noexcept { return size_; }
    const Poly& at(int i, int j) const;
    Poly& at(int i, int j);
    /// Entry (i, j), zero when j > i.
    Poly entry(int i, int j) const;

    bool is_identity() const;

    friend TriangularPolyMatrix operator*(const TriangularPolyMatrix& lhs, const TriangularPolyMatrix& rhs);
    friend bool operator==(const TriangularPolyMatrix&, const TriangularPolyMatrix&) = default;

   private:
    std::size_t index(int i, int j) const;

    int size_;
    std::vector<Poly> entries_;
};

/// True when -(a+b+2) is a nonnegative integer, i.e. some diagonal entry
/// (i+a+b+1)_i/2^i of T vanishes for large enough i.
bool jacobi_system_singular(const JacobiParams& params);

/// T = (D^j P_i^{(a,b)}(x)), 0 <= j <= i <= n.
TriangularPolyMatrix build_T(int n, const JacobiParams& params);

/// Closed-form inverse of build_T:
/// u_ij = (a+b+2j+1) 2^i/(a+b+j+1)_{i+1} P_{i-j}^{(-a-i-1,-b-i-1)}(x).
/// Throws SingularError when T is singular for some order, PoleError when a
/// denominator of the closed form vanishes.
TriangularPolyMatrix build_U(int n, const JacobiParams& params);

/// Laguerre systems are posed with a derivative shift k:
/// sum_i A_i D^{i+k} L_n = F_n for n = k+1, ..., k+N.
struct LaguerreShift {
    LaguerreParams params;
    int shift = 0;
};

/// sum_{i=1}^N A_i(x) D^{i(+k)} P_n(x) = F_n(x), truncated at order N.
/// rhs[m-1] holds F_m (Jacobi) or F_{k+m} (Laguerre with shift k).
struct TriangularSystem {
    std::variant<JacobiParams, LaguerreShift> family;
    std::vector<Poly> rhs;

    int order() const noexcept { return static_cast<int>(rhs.size()); }
    int shift() const noexcept;
    bool is_jacobi() const noexcept { return std::holds_alternative<JacobiParams>(family); }

    /// The polynomial family member entering equation m (1-based): P_m or L_{k+m}.
    Poly member(int m) const;
    /// D^{i(+k)} of member(m).
    Poly coefficient(int m, int i) const;
};

/// Closed-form solution from the inversion formulas; checks the residual of
/// every equation and throws ResidualError if one is nonzero.
std::vector<Poly> solve_closed_form(const TriangularSystem& system);

/// Independent oracle: row-by-row back-substitution dividing by the constant
/// diagonal D^{m(+k)} member(m). Throws SingularError when it is zero.
std::vector<Poly> solve_backsub(const TriangularSystem& system);

/// sum_i A_i D^{i(+k)} member(m) - F_m, for m = 1..N.
std::vector<Poly> residuals(const TriangularSystem& system, const std::vector<Poly>& solution);

/// Random right-hand sides: coefficient numerators in [-9, 9], denominators
/// in [1, 9], degree <= index of the equation.
std::vector<Poly> random_rhs(int order, int shift, std::uint64_t seed);

struct SolvedSystem {
    TriangularSystem system;
    std::vector<Poly> solution;
    std::vector<Poly> oracle;
    bool residuals_zero = false;
    bool agrees = false;
    std::optional<std::uint64_t> seed;
};

/// Solves by both routes and compares.
SolvedSystem solve_and_check(TriangularSystem system, std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::ordered_json to_json(const SolvedSystem& solved);

}  // namespace jacinv

#endif
