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

#include "jacinv/solver.hpp"

#include <random>
#include <string>

#include "jacinv/errors.hpp"
#include "jacinv/special.hpp"

namespace jacinv {

TriangularPolyMatrix::TriangularPolyMatrix(int size) : size_(size) {
    if (size <= 0) throw ParameterError("TriangularPolyMatrix: size must be positive");
    entries_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size + 1) / 2);
}

std::size_t TriangularPolyMatrix::index(int i, int j) const {
    if (i < 0 || i >= size_ || j < 0 || j > i) throw std::out_of_range("TriangularPolyMatrix: index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(i + 1) / 2 + static_cast<std::size_t>(j);
}

const Poly& TriangularPolyMatrix::at(int i, int j) const { return entries_[index(i, j)]; }
Poly& TriangularPolyMatrix::at(int i, int j) { return entries_[index(i, j)]; }

Poly TriangularPolyMatrix::entry(int i, int j) const { return j > i ? Poly() : at(i, j); }

bool TriangularPolyMatrix::is_identity() const {
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != (i == j ? Poly(Rational(1)) : Poly())) return false;
    return true;
}

TriangularPolyMatrix operator*(const TriangularPolyMatrix& lhs, const TriangularPolyMatrix& rhs) {
    if (lhs.size_ != rhs.size_) throw ParameterError("TriangularPolyMatrix: size mismatch");
    TriangularPolyMatrix out(lhs.size_);
    for (int i = 0; i < lhs.size_; ++i)
        for (int j = 0; j <= i; ++j) {
            Poly acc;
            for (int k = j; k <= i; ++k) acc += lhs.at(i, k) * rhs.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

bool jacobi_system_singular(const JacobiParams& params) {
    const Rational shifted = -(params.alpha + params.beta + Rational(2));
    return shifted.is_integer() && shifted.sign() >= 0;
}

TriangularPolyMatrix build_T(int n, const JacobiParams& params) {
    if (n < 0) throw ParameterError("build_T: negative order");
    TriangularPolyMatrix t(n + 1);
    for (int i = 0; i <= n; ++i) {
        const Poly p = jacobi(i, params);
        for (int j = 0; j <= i; ++j) t.at(i, j) = derivative(p, j);
    }
    return t;
}

TriangularPolyMatrix build_U(int n, const JacobiParams& params) {
    if (n < 0) throw ParameterError("build_U: negative order");
    if (jacobi_system_singular(params))
        throw SingularError("build_U: -(alpha+beta+2) = " + (-(params.alpha + params.beta + Rational(2))).to_string() +
                            " is a nonnegative integer");
    const Rational s = params.alpha + params.beta;
    TriangularPolyMatrix u(n + 1);
    for (int i = 0; i <= n; ++i) {
        const JacobiParams upper{-params.alpha - Rational(i + 1), -params.beta - Rational(i + 1)};
        const Rational two_i = pow(Rational(2), i);
        for (int j = 0; j <= i; ++j) {
            const Rational c = (s + Rational(2 * j + 1)) * two_i *
                               inverse_pochhammer(s + Rational(j + 1), i + 1, "build_U entry");
            u.at(i, j) = c * jacobi(i - j, upper);
        }
    }
    return u;
}

int TriangularSystem::shift() const noexcept {
    if (const auto* lag = std::get_if<LaguerreShift>(&family)) return lag->shift;
    return 0;
}

Poly TriangularSystem::member(int m) const {
    if (const auto* jac = std::get_if<JacobiParams>(&family)) return jacobi(m, *jac);
    const auto& lag = std::get<LaguerreShift>(family);
    return laguerre(lag.shift + m, lag.params);
}

Poly TriangularSystem::coefficient(int m, int i) const { return derivative(member(m), i + shift()); }

namespace {

void validate(const TriangularSystem& system) {
    if (system.order() < 1) throw ParameterError("triangular system: order must be >= 1");
    if (system.shift() < 0) throw ParameterError("triangular system: negative shift");
    if (const auto* jac = std::get_if<JacobiParams>(&system.family); jac && jacobi_system_singular(*jac))
        throw SingularError("triangular system: -(alpha+beta+2) is a nonnegative integer");
}

std::vector<Poly> closed_form_jacobi(const JacobiParams& params, const std::vector<Poly>& rhs) {
    const int order = static_cast<int>(rhs.size());
    const Rational s = params.alpha + params.beta;
    std::vector<Poly> a;
    for (int i = 1; i <= order; ++i) {
        const JacobiParams upper{-params.alpha - Rational(i + 1), -params.beta - Rational(i + 1)};
        Poly acc;
        for (int j = 1; j <= i; ++j) {
            const Rational w = (s + Rational(2 * j + 1)) *
                               inverse_pochhammer(s + Rational(j + 1), i + 1, "closed-form Jacobi weight");
            acc += w * (jacobi(i - j, upper) * rhs[static_cast<std::size_t>(j - 1)]);
        }
        a.push_back(pow(Rational(2), i) * acc);
    }
    return a;
}

std::vector<Poly> closed_form_laguerre(const LaguerreShift& lag, const std::vector<Poly>& rhs) {
    const int order = static_cast<int>(rhs.size());
    const int k = lag.shift;
    std::vector<Poly> a;
    for (int i = 1; i <= order; ++i) {
        const LaguerreParams upper{-lag.params.alpha - Rational(i + k + 1)};
        Poly acc;
        for (int j = 1; j <= i; ++j)
            acc += compose_affine(laguerre(i - j, upper), Rational(-1), Rational(0)) * rhs[static_cast<std::size_t>(j - 1)];
        a.push_back((i + k) % 2 == 0 ? acc : -acc);
    }
    return a;
}

bool all_zero(const std::vector<Poly>& polys) {
    for (const auto& p : polys)
        if (!p.is_zero()) return false;
    return true;
}

}  // namespace

std::vector<Poly> residuals(const TriangularSystem& system, const std::vector<Poly>& solution) {
    if (solution.size() != system.rhs.size()) throw ParameterError("residuals: solution size mismatch");
    std::vector<Poly> out;
    for (int m = 1; m <= system.order(); ++m) {
        Poly acc = -system.rhs[static_cast<std::size_t>(m - 1)];
        for (int i = 1; i <= m; ++i) acc += solution[static_cast<std::size_t>(i - 1)] * system.coefficient(m, i);
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

std::vector<Poly> closed_form_unchecked(const TriangularSystem& system) {
    validate(system);
    if (const auto* jac = std::get_if<JacobiParams>(&system.family)) return closed_form_jacobi(*jac, system.rhs);
    return closed_form_laguerre(std::get<LaguerreShift>(system.family), system.rhs);
}

}  // namespace

std::vector<Poly> solve_closed_form(const TriangularSystem& system) {
    std::vector<Poly> solution = closed_form_unchecked(system);
    const auto res = residuals(system, solution);
    for (std::size_t m = 0; m < res.size(); ++m)
        if (!res[m].is_zero())
            throw ResidualError("closed-form solution leaves residual " + res[m].to_string() + " in equation " +
                                std::to_string(m + 1));
    return solution;
}

std::vector<Poly> solve_backsub(const TriangularSystem& system) {
    validate(system);
    std::vector<Poly> solution;
    for (int m = 1; m <= system.order(); ++m) {
        Poly acc = system.rhs[static_cast<std::size_t>(m - 1)];
        for (int i = 1; i < m; ++i) acc -= solution[static_cast<std::size_t>(i - 1)] * system.coefficient(m, i);
        const Poly diagonal = system.coefficient(m, m);
        if (!diagonal.is_constant()) throw SingularError("solve_backsub: diagonal entry is not constant");
        if (diagonal.is_zero()) throw SingularError("solve_backsub: zero diagonal in equation " + std::to_string(m));
        solution.push_back(acc * (Rational(1) / diagonal.coeff(0)));
    }
    return solution;
}

std::vector<Poly> random_rhs(int order, int shift, std::uint64_t seed) {
    if (order < 1) throw ParameterError("random_rhs: order must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    for (int m = 1; m <= order; ++m) {
        const int degree_bound = m + shift;
        const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(degree_bound + 1));
        std::vector<Rational> c;
        for (int d = 0; d <= degree; ++d) {
            const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
            const auto den = static_cast<std::int64_t>(rng() % 9) + 1;
            c.emplace_back(num, den);
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

SolvedSystem solve_and_check(TriangularSystem system, std::optional<std::uint64_t> seed) {
    SolvedSystem out{std::move(system), {}, {}, false, false, seed};
    out.oracle = solve_backsub(out.system);
    out.solution = closed_form_unchecked(out.system);
    out.residuals_zero = all_zero(residuals(out.system, out.solution));
    out.agrees = out.solution == out.oracle;
    return out;
}

nlohmann::ordered_json to_json(const SolvedSystem& solved) {
    nlohmann::ordered_json j;
    const auto& sys = solved.system;
    j["order"] = sys.order();
    j["family"] = sys.is_jacobi() ? "jacobi" : "laguerre";
    j["shift"] = sys.shift();
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (const auto* jac = std::get_if<JacobiParams>(&sys.family)) {
        params["alpha"] = jac->alpha.to_string();
        params["beta"] = jac->beta.to_string();
    } else {
        params["alpha"] = std::get<LaguerreShift>(sys.family).params.alpha.to_string();
    }
    j["params"] = params;
    nlohmann::ordered_json rhs = nlohmann::ordered_json::array();
    for (const auto& p : sys.rhs) rhs.push_back(p.to_string());
    j["rhs"] = rhs;
    nlohmann::ordered_json sol = nlohmann::ordered_json::array();
    for (const auto& p : solved.solution) sol.push_back(p.to_string());
    j["solution"] = sol;
    j["residuals_zero"] = solved.residuals_zero;
    j["oracle_agrees"] = solved.agrees;
    if (solved.seed)
        j["seed"] = *solved.seed;
    else
        j["seed"] = nullptr;
    return j;
}

}  // namespace jacinv
