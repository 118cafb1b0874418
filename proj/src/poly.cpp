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

#include "jacinv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "jacinv/errors.hpp"

namespace jacinv {

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw ParameterError("Poly::monomial: negative exponent");
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag = abs(c);
        if (k == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

class PolyParser {
   public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly run() {
        skip_ws();
        if (at_end()) fail("empty input");
        std::vector<Rational> acc;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (!first) {
                if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (peek() == '-' || peek() == '+') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            first = false;
            auto [c, k] = term();
            if (acc.size() <= static_cast<std::size_t>(k)) acc.resize(static_cast<std::size_t>(k) + 1);
            acc[static_cast<std::size_t>(k)] += sign < 0 ? -c : c;
            skip_ws();
        }
        return Poly(std::move(acc));
    }

   private:
    std::pair<Rational, int> term() {
        Rational c(1);
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            c = Rational::parse(text_.substr(start, pos_ - start));
            have_coeff = true;
        }
        if (at_end() || peek() != (have_coeff ? '*' : 'x')) {
            if (!have_coeff) fail("expected coefficient or 'x'");
            return {c, 0};
        }
        if (have_coeff) {
            ++pos_;  // '*'
            if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
        }
        ++pos_;  // 'x'
        int k = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("expected exponent");
            k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        }
        return {c, k};
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("malformed polynomial '" + std::string(text_) + "': " + why + " at offset " +
                         std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).run(); }

Poly derivative(const Poly& p, int i) {
    if (i < 0) throw ParameterError("derivative: negative order");
    const auto& c = p.coefficients();
    if (static_cast<std::size_t>(i) >= c.size()) return Poly();
    std::vector<Rational> out(c.size() - static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < out.size(); ++k) {
        // (k+i)!/k! falls out of repeated differentiation of x^{k+i}.
        Rational f(1);
        for (int m = 1; m <= i; ++m) f *= Rational(static_cast<std::int64_t>(k) + m);
        out[k] = c[k + static_cast<std::size_t>(i)] * f;
    }
    return Poly(std::move(out));
}

Rational evaluate(const Poly& p, const Rational& x0) { return p(x0); }

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
    const Poly inner(std::vector<Rational>{b, a});
    Poly acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace jacinv
