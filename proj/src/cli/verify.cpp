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

#include "jacinv/cli/verify.hpp"

#include <functional>
#include <future>
#include <utility>

#include "jacinv/cli/random_source.hpp"
#include "jacinv/errors.hpp"
#include "jacinv/families.hpp"
#include "jacinv/identities.hpp"
#include "jacinv/solver.hpp"
#include "jacinv/special.hpp"

namespace jacinv::cli {

namespace {

using ParamMap = std::map<std::string, Rational>;
using Sweep = std::function<IdentityReport(const ParamMap&, int, double)>;

struct Entry {
    std::string id;
    std::vector<std::string> params;
    Sweep sweep;
};

const std::vector<Rational>& limit_samples() {
    static const std::vector<Rational> s{Rational(1, 2), Rational(1), Rational(2)};
    return s;
}

const std::vector<Rational>& limit_schedule() {
    static const std::vector<Rational> s{Rational(16), Rational(256), Rational(4096), Rational(65536)};
    return s;
}

Rational kronecker(long i, long j) { return Rational(i == j ? 1 : 0); }

IdentityReport start(const std::string& id, const ParamMap& params, const std::vector<std::string>& names, int n) {
    IdentityReport r(id, {0, n});
    for (const auto& name : names) r.with_param(name, params.at(name));
    return r;
}

// Runs one check; a Gamma pole becomes a logged skip and a non-constant sum a
// failure.
void guarded(IdentityReport& report, const std::vector<long>& indices, const std::function<void()>& check) {
    try {
        check();
    } catch (const PoleError& e) {
        report.skip(indices, e.what());
    } catch (const SingularError& e) {
        report.skip(indices, e.what());
    } catch (const NonConstantError& e) {
        report.fail(indices, "constant", e.what());
    }
}

IdentityReport sweep_triangle(const std::string& id, const ParamMap& p, const std::vector<std::string>& names, int n,
                              const std::function<Rational(int, int)>& value) {
    IdentityReport r = start(id, p, names, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j)
            guarded(r, {i, j}, [&] { r.expect_equal({i, j}, kronecker(i, j), value(i, j)); });
    return r;
}

void record_certificate(IdentityReport& r, const std::vector<long>& indices, const LimitCheckResult& result) {
    for (std::size_t s = 0; s < result.certificates.size(); ++s) {
        const auto& cert = result.certificates[s];
        if (cert.passed) continue;
        std::string env;
        for (const auto& e : cert.envelope) env += (env.empty() ? "" : ",") + e.to_string();
        auto idx = indices;
        idx.push_back(static_cast<long>(s));
        r.fail(idx, "non-increasing envelope", "envelope at x=" + result.samples[s].to_string() + ": " + env);
    }
}

std::vector<Entry> build_registry() {
    std::vector<Entry> reg;
    const std::vector<std::string> ab{"alpha", "beta"};
    const std::vector<std::string> a_only{"alpha"};

    reg.push_back({"inv-jacobi", ab, [ab](const ParamMap& p, int n, double) {
                       return sweep_triangle("inv-jacobi", p, ab, n, [&](int i, int j) {
                           return inv_jacobi(p.at("alpha"), p.at("beta"), i, j);
                       });
                   }});
    reg.push_back({"inv-laguerre", a_only, [a_only](const ParamMap& p, int n, double) {
                       return sweep_triangle("inv-laguerre", p, a_only, n, [&](int i, int j) {
                           return inv_laguerre(p.at("alpha"), i, j, LaguerreInversion::main);
                       });
                   }});
    reg.push_back({"inv-laguerre-star", a_only, [a_only](const ParamMap& p, int n, double) {
                       return sweep_triangle("inv-laguerre-star", p, a_only, n, [&](int i, int j) {
                           return inv_laguerre(p.at("alpha"), i, j, LaguerreInversion::star);
                       });
                   }});
    reg.push_back({"inv-charlier", {"a"}, [](const ParamMap& p, int n, double) {
                       return sweep_triangle("inv-charlier", p, {"a"}, n,
                                             [&](int i, int j) { return inv_charlier(p.at("a"), i, j); });
                   }});

    reg.push_back({"gen-inv-laguerre", {"alpha", "p", "q"}, [](const ParamMap& p, int n, double) {
                       IdentityReport r = start("gen-inv-laguerre", p, {"alpha", "p", "q"}, n);
                       const Rational& alpha = p.at("alpha");
                       auto expected = [](const Rational& pp, const Rational& qq, int m) {
                           return pochhammer(pp - qq + Rational(2), m) / factorial(m);
                       };
                       for (int m = 0; m <= n; ++m) {
                           guarded(r, {m}, [&] {
                               r.expect_equal({m}, expected(p.at("p"), p.at("q"), m),
                                              gen_inv_laguerre(alpha, p.at("p"), p.at("q"), m));
                           });
                           // Every offset p - q in {-m-1, ..., -2} annihilates the sum; 0 does not.
                           for (int d = -m - 1; d <= 0; ++d) {
                               if (d == -1) continue;
                               const Rational q = p.at("p") - Rational(d);
                               guarded(r, {m, d}, [&] {
                                   const Rational v = gen_inv_laguerre(alpha, p.at("p"), q, m);
                                   r.expect_equal({m, d}, expected(p.at("p"), q, m), v);
                                   if (m >= 1 && d <= -2) r.expect_equal({m, d}, Rational(0), v);
                               });
                           }
                       }
                       // Endpoint offsets reproduce the two Laguerre inversions.
                       for (int i = 0; i <= n; ++i)
                           for (int j = 0; j <= i; ++j)
                               guarded(r, {i, j}, [&] {
                                   r.expect_equal({i, j}, inv_laguerre(alpha, i, j, LaguerreInversion::main),
                                                  gen_inv_laguerre(alpha, Rational(j), Rational(i + 1), i - j));
                                   r.expect_equal({i, j}, inv_laguerre(alpha, i, j, LaguerreInversion::star),
                                                  gen_inv_laguerre(alpha, Rational(0), Rational(2), i - j));
                               });
                       return r;
                   }});

    reg.push_back({"master-jacobi", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("master-jacobi", p, ab, n);
                       for (int m = 0; m <= n; ++m)
                           guarded(r, {m}, [&] { r.absorb(master_jacobi(p.at("alpha"), p.at("beta"), m)); });
                       return r;
                   }});
    reg.push_back({"master-specializations", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("master-specializations", p, ab, n);
                       for (int i = 0; i <= n; ++i)
                           for (int j = 0; j <= i; ++j)
                               guarded(r, {i, j}, [&] {
                                   r.absorb(master_jacobi_specializations(p.at("alpha"), p.at("beta"), i, j));
                               });
                       return r;
                   }});
    reg.push_back({"monomial-laguerre", a_only, [a_only](const ParamMap& p, int n, double) {
                       IdentityReport r = start("monomial-laguerre", p, a_only, n);
                       for (int m = 0; m <= n; ++m) {
                           r.absorb(monomial_expansion(m, LaguerreParams{p.at("alpha")}));
                           r.expect_equal({m, -m}, Poly::monomial(Rational(m % 2 == 0 ? 1 : -1) / factorial(m), m),
                                          laguerre(m, {Rational(-m)}));
                       }
                       return r;
                   }});
    reg.push_back({"monomial-jacobi", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("monomial-jacobi", p, ab, n);
                       const Rational& beta = p.at("beta");
                       for (int m = 0; m <= n; ++m) {
                           guarded(r, {m}, [&] {
                               r.absorb(monomial_expansion(m, JacobiParams{p.at("alpha"), beta}));
                           });
                           // alpha = -m leaves a single monomial; alpha = beta = -m leaves nothing.
                           const Poly half_shift(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
                           Poly power(Rational(1));
                           for (int k = 0; k < m; ++k) power *= half_shift;
                           r.expect_equal({m, -m}, binom_general(Rational(m) + beta, m) * power,
                                          jacobi(m, {Rational(-m), beta}));
                           if (m >= 1) r.expect_equal({m, -m, -m}, Poly(), jacobi(m, {Rational(-m), Rational(-m)}));
                       }
                       return r;
                   }});
    reg.push_back({"nulalg", {"b"}, [](const ParamMap& p, int n, double) {
                       IdentityReport r = start("nulalg", p, {"b"}, n);
                       const Rational& b = p.at("b");
                       for (int m = 0; m <= n; ++m)
                           guarded(r, {m}, [&] { r.expect_equal({m}, m == 0 ? b : Rational(0), nulalg_sum(b, m)); });
                       return r;
                   }});
    reg.push_back({"vandermonde", {"b", "c"}, [](const ParamMap& p, int n, double) {
                       IdentityReport r = start("vandermonde", p, {"b", "c"}, n);
                       const Rational& b = p.at("b");
                       const Rational& c = p.at("c");
                       for (int m = 0; m <= n; ++m) {
                           r.expect_equal({m, 0}, pochhammer(c - b, m), vandermonde_general(b, c, m));
                           guarded(r, {m, 1}, [&] {
                               const Rational v = vandermonde(b, c, m);
                               r.expect_equal({m, 1}, pochhammer(c - b, m) / pochhammer(c, m), v);
                           });
                       }
                       return r;
                   }});
    reg.push_back({"convolution", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("convolution", p, ab, n);
                       for (int m = 0; m <= n; ++m) {
                           r.absorb(laguerre_convolution(p.at("alpha"), p.at("beta"), m));
                           r.absorb(master_laguerre(p.at("alpha"), m));
                       }
                       return r;
                   }});
    reg.push_back({"tu-product", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("tu-product", p, ab, n);
                       const JacobiParams params{p.at("alpha"), p.at("beta")};
                       guarded(r, {n}, [&] {
                           const auto t = build_T(n, params);
                           const auto u = build_U(n, params);
                           if (!(t * u).is_identity()) r.fail({n, 0}, "identity", "T*U differs from I");
                           if (!(u * t).is_identity()) r.fail({n, 1}, "identity", "U*T differs from I");
                       });
                       return r;
                   }});
    reg.push_back({"tri-def", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("tri-def", p, ab, n);
                       const JacobiParams params{p.at("alpha"), p.at("beta")};
                       for (int m = 0; m <= n; ++m) {
                           const Poly base = jacobi(m, params, JacobiForm::pochhammer);
                           r.expect_equal({m, 1}, base, jacobi(m, params, JacobiForm::reflected));
                           r.expect_equal({m, 2}, base, jacobi(m, params, JacobiForm::binomial));
                       }
                       return r;
                   }});
    reg.push_back({"ode", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("ode", p, ab, n);
                       const JacobiParams jp{p.at("alpha"), p.at("beta")};
                       const LaguerreParams lp{p.at("alpha")};
                       for (int m = 0; m <= n; ++m) {
                           r.expect_equal({m, 0}, Poly(), ode_residual(jacobi(m, jp), m, jp));
                           r.expect_equal({m, 1}, Poly(), ode_residual(laguerre(m, lp), m, lp));
                       }
                       return r;
                   }});
    reg.push_back({"diff-shift", ab, [ab](const ParamMap& p, int n, double) {
                       IdentityReport r = start("diff-shift", p, ab, n);
                       const JacobiParams jp{p.at("alpha"), p.at("beta")};
                       const LaguerreParams lp{p.at("alpha")};
                       for (int m = 0; m <= n; ++m)
                           for (int i = 0; i <= m; ++i) {
                               r.absorb(check_derivative_shift(m, i, jp));
                               r.absorb(check_derivative_shift(m, i, lp));
                           }
                       return r;
                   }});
    reg.push_back({"limit", a_only, [a_only](const ParamMap& p, int n, double tol) {
                       IdentityReport r = start("limit", p, a_only, n);
                       const Rational& alpha = p.at("alpha");
                       for (int m = 0; m <= n; ++m)
                           record_certificate(r, {m},
                                              limit_check_jacobi_to_laguerre(m, alpha, limit_samples(),
                                                                             limit_schedule(), tol));
                       for (int i = 0; i <= n; ++i)
                           for (int j = 0; j <= i; ++j)
                               guarded(r, {i, j}, [&] {
                                   record_certificate(r, {i, j},
                                                      limit_check_inversion(alpha, i, j, limit_samples(),
                                                                            limit_schedule(), tol));
                               });
                       return r;
                   }});
    return reg;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = build_registry();
    return reg;
}

const Entry& lookup(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw ConfigError("unknown identity '" + id + "'");
}

}  // namespace

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.id);
        return out;
    }();
    return ids;
}

const std::vector<std::string>& identity_parameters(const std::string& id) { return lookup(id).params; }

IdentityReport verify_point(const std::string& id, const ParamMap& params, int order_max, double tolerance) {
    const Entry& entry = lookup(id);
    for (const auto& name : entry.params)
        if (!params.contains(name)) throw ConfigError("identity '" + id + "' needs parameter '" + name + "'");
    if (order_max < 0) throw ConfigError("order-max must be >= 0");
    return entry.sweep(params, order_max, tolerance);
}

std::vector<IdentityReport> run_verify(const VerifyConfig& config) {
    const Entry& entry = lookup(config.identity);
    if (config.order_max < 0) throw ConfigError("order-max must be >= 0");
    if (config.grid < 1) throw ConfigError("grid must be >= 1");
    if (config.tolerance < 0) throw ConfigError("tolerance must be >= 0");
    for (const auto& [name, value] : config.pinned) {
        (void)value;
        bool known = false;
        for (const auto& p : entry.params) known = known || p == name;
        if (!known) throw ConfigError("identity '" + config.identity + "' takes no parameter '" + name + "'");
    }

    // Draw every point up front so the grid depends only on the seed.
    ParameterSampler sampler(config.seed);
    std::vector<ParamMap> points;
    for (int g = 0; g < config.grid; ++g) {
        ParamMap point;
        for (const auto& name : entry.params) {
            Rational drawn = sampler.small_rational();
            auto pinned = config.pinned.find(name);
            point[name] = pinned != config.pinned.end() ? pinned->second : drawn;
        }
        points.push_back(std::move(point));
    }

    std::vector<std::future<IdentityReport>> pending;
    for (const auto& point : points)
        pending.push_back(std::async(std::launch::async, [&entry, &config, point] {
            return entry.sweep(point, config.order_max, config.tolerance);
        }));
    std::vector<IdentityReport> reports;
    for (auto& f : pending) reports.push_back(f.get());
    return reports;
}

}  // namespace jacinv::cli
