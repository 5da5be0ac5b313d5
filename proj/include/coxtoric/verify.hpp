#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxtoric/class_function.hpp"
#include "coxtoric/errors.hpp"
#include "coxtoric/euler.hpp"
#include "coxtoric/symn.hpp"

namespace coxtoric {

struct VerifyCheck {
    std::string name;
    std::string params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerifySuiteResult {
    std::string suite;
    std::vector<VerifyCheck> checks;

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const VerifyCheck& c) { return c.pass; });
    }
};

struct VerifyLimits {
    int max_rank = 4;
    int max_n = 8;
    int degree = 8;
    bool enable_e6 = false;
    long long cap = 1'000'000;
};

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{
        "main-vs-orbit", "poincare",       "euler-char", "pi-closed-form",
        "typea",         "series-identities", "stembridge", "even-vanishing",
        "odd-order",     "f-recursion",    "all"};
    return names;
}

namespace detail {

inline std::vector<std::pair<char, int>> standard_type_list(const VerifyLimits& lim) {
    std::vector<std::pair<char, int>> all{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                          {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4},
                                          {'G', 2}, {'F', 4}};
    std::vector<std::pair<char, int>> out;
    for (auto [t, r] : all)
        if (r <= lim.max_rank) out.emplace_back(t, r);
    if (lim.enable_e6) out.emplace_back('E', 6);
    return out;
}

template <class T>
std::string vec_str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_to_string(v[i]);
    os << "]";
    return os.str();
}

inline std::string type_param(char t, int r) { return std::string(1, t) + std::to_string(r); }

inline void push(std::vector<VerifyCheck>& out, std::string name, std::string params,
                 std::string lhs, std::string rhs) {
    bool ok = lhs == rhs;
    out.push_back(VerifyCheck{std::move(name), std::move(params), ok, std::move(lhs), std::move(rhs)});
}

inline std::vector<VerifyCheck> checks_main_vs_orbit(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    for (auto [t, r] : standard_type_list(lim)) {
        WeylGroup g = enumerate_group(build_root_system(t, r, lim.enable_e6), lim.cap);
        auto main = lambda_main(g, lim.cap);
        auto orbit = lambda_orbit(g, lim.cap);
        push(out, "lambda main = lambda orbit", type_param(t, r),
             vec_str(main.values()), vec_str(orbit.values()));
        push(out, "lambda at identity = euler characteristic", type_param(t, r),
             scalar_to_string(main.value(0)), scalar_to_string(euler_char_descents(g)));
    }
    return out;
}

inline std::vector<VerifyCheck> checks_poincare(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    for (auto [t, r] : standard_type_list(lim)) {
        WeylGroup g = enumerate_group(build_root_system(t, r, lim.enable_e6), lim.cap);
        auto [orbit, cells] = poincare_check(g, lim.cap);
        push(out, "orbit polynomial = descent polynomial", type_param(t, r),
             orbit.to_string(), cells.to_string());
        push(out, "value at q=1 is group order", type_param(t, r),
             std::to_string(cells.evaluate(1)), std::to_string(g.order()));
        push(out, "value at q=-1 is euler characteristic", type_param(t, r),
             std::to_string(cells.evaluate(-1)), std::to_string(euler_char_descents(g)));
    }
    return out;
}

inline std::vector<VerifyCheck> checks_euler_char(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    for (int n = 2; n <= lim.max_n; ++n) {
        long long descents = euler_char_descents_typea(n);
        long long orbit = euler_char_orbit_typea(n);
        // rank n-1 is odd for even n, where chi vanishes.
        long long expected =
            (n % 2 == 0) ? 0 : ((n - 1) / 2 % 2 ? -euler_number(n) : euler_number(n));
        std::string p = "n=" + std::to_string(n);
        push(out, "descent sum = orbit formula", p, std::to_string(descents), std::to_string(orbit));
        push(out, "descent sum = tangent-number value", p, std::to_string(descents),
             std::to_string(expected));
        if (n <= 8) {
            WeylGroup g = enumerate_group(build_root_system('A', n - 1), lim.cap);
            push(out, "enumerated group agrees with streaming routes", p,
                 std::to_string(euler_char_descents(g)) + "/" + std::to_string(euler_char_orbit(g, lim.cap)),
                 std::to_string(descents) + "/" + std::to_string(orbit));
        }
    }
    return out;
}

inline std::vector<VerifyCheck> checks_pi_closed_form(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    int top = std::min(lim.max_n, 8);
    for (int n = 2; n <= top; ++n) {
        std::string p = "n=" + std::to_string(n);
        auto closed = pi_two_typea_fn(n);
        push(out, "closed form = binomial induction sum", p,
             vec_str(closed.values()), vec_str(pi_two_typea_binomial(n).values()));
        CycleTypeFunction<long long> subsets(n);
        const auto& ps = partitions_of(n);
        for (size_t i = 0; i < ps.size(); ++i)
            subsets.at(static_cast<int>(i)) = pi_two_typea_stable_subsets(ps[i]);
        push(out, "closed form = stable even-subset count", p,
             vec_str(closed.values()), vec_str(subsets.values()));
        WeylGroup g = enumerate_group(build_root_system('A', n - 1), lim.cap);
        auto f2 = pi_two(g);
        CycleTypeFunction<long long> via_f2(n);
        for (int c = 0; c < g.num_classes(); ++c)
            via_f2.value(cycle_type_of(g, g.class_rep(c))) = f2.value(c);
        push(out, "closed form = mod-2 fixed-point count", p,
             vec_str(closed.values()), vec_str(via_f2.values()));
    }
    return out;
}

inline std::vector<VerifyCheck> checks_typea(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    {
        auto lam2 = lambda_typea(2);
        auto tm = CycleTypeFunction<long long>::trivial(2) - CycleTypeFunction<long long>::sign_char(2);
        push(out, "degree-2 character is trivial minus sign", "n=2",
             vec_str(lam2.values()), vec_str(tm.values()));
    }
    int top = std::min(lim.max_n, 8);
    for (int n = 2; n <= top; ++n) {
        WeylGroup g = enumerate_group(build_root_system('A', n - 1), lim.cap);
        auto lam = lambda_main(g, lim.cap);
        CycleTypeFunction<long long> via_group(n);
        for (int c = 0; c < g.num_classes(); ++c)
            via_group.value(cycle_type_of(g, g.class_rep(c))) = lam.value(c);
        push(out, "cycle-type formula = general formula", "n=" + std::to_string(n),
             vec_str(lambda_typea(n).values()), vec_str(via_group.values()));
    }
    return out;
}

inline std::vector<VerifyCheck> checks_series_identities(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    int D = lim.degree;
    std::string p = "degree=" + std::to_string(D);
    auto eq = [&](const char* name, const GradedSeries<long long>& a,
                  const GradedSeries<long long>& b) {
        out.push_back(VerifyCheck{name, p, a == b,
                                  a == b ? "equal" : "series differ",
                                  "equal"});
    };
    eq("inverse of trivial series is alternating sign series",
       series_trivial(D).inverse(), series_sign_alternating(D));
    eq("twisted character series = inverse of mod-2 character series",
       series_lambda_sign_alternating(D), series_pi_two(D).inverse());
    eq("mod-2 character series = trivial series times even trivial series",
       series_pi_two(D), series_trivial(D) * series_even_trivial(D));
    eq("twisted character series = sign series over even trivial series",
       series_lambda_sign_alternating(D),
       series_sign_alternating(D) * series_even_trivial(D).inverse());
    eq("character series = trivial series over even sign series",
       series_lambda(D), series_trivial(D) * series_even_sign(D).inverse());
    eq("sign involution carries twisted series to character series",
       series_lambda_sign_alternating(D).sign_twist(), series_lambda(D));
    eq("sign involution is an involution",
       series_lambda(D).sign_twist().sign_twist(), series_lambda(D));
    return out;
}

inline std::vector<VerifyCheck> checks_stembridge(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    int D = lim.degree;
    auto s1 = stembridge_series(D);
    auto s2 = stembridge_series_gamma(D);
    out.push_back(VerifyCheck{"rational form = inverse of 1 - gamma series",
                              "degree=" + std::to_string(D), s1 == s2,
                              s1 == s2 ? "equal" : "series differ", "equal"});
    for (int n = 1; n <= D; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        long long val = s1.term(n).value(Partition{std::move(ones)}).evaluate(1);
        push(out, "identity value at q=1 is n!", "n=" + std::to_string(n),
             std::to_string(val), std::to_string(factorial(n)));
    }
    return out;
}

inline std::vector<VerifyCheck> checks_even_vanishing(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    int top = std::min(lim.max_n, 8);
    for (int n = 2; n <= top; ++n) {
        std::string p = "n=" + std::to_string(n);
        auto trace = complex_euler_trace(n);
        push(out, "q=-1 specialization = direct even-tuple sum", p,
             vec_str(trace.values()), vec_str(complex_euler_trace_direct(n).values()));
        const auto& ps = partitions_of(n);
        bool vanish = true;
        std::string bad;
        for (size_t i = 0; i < ps.size(); ++i)
            if (ps[i].has_even_part() && trace.at(static_cast<int>(i)) != 0) {
                vanish = false;
                bad = ps[i].to_string();
            }
        out.push_back(VerifyCheck{"vanishes on every class with an even cycle", p, vanish,
                                  vanish ? "0 on all even-cycle classes" : "nonzero at " + bad,
                                  "0 on all even-cycle classes"});
        if (n % 2 == 0) {
            std::vector<int> ones(static_cast<size_t>(n), 1);
            push(out, "identity value vanishes in even degree", p,
                 std::to_string(trace.value(Partition{std::move(ones)})), "0");
        }
    }
    return out;
}

inline std::vector<VerifyCheck> checks_odd_order(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    int top = std::min(lim.max_n, 8);
    for (int n = 2; n <= top; ++n) {
        auto trace = complex_euler_trace(n);
        auto lam = lambda_typea(n);
        const auto& ps = partitions_of(n);
        bool ok = true;
        std::string bad;
        for (size_t i = 0; i < ps.size(); ++i) {
            if (ps[i].has_even_part()) continue;  // odd-order classes only
            if (trace.at(static_cast<int>(i)) != lam.at(static_cast<int>(i))) {
                ok = false;
                bad = ps[i].to_string();
            }
        }
        out.push_back(VerifyCheck{"complex trace matches real trace on odd-order classes",
                                  "n=" + std::to_string(n), ok,
                                  ok ? "equal on all-odd classes" : "differs at " + bad,
                                  "equal on all-odd classes"});
    }
    return out;
}

inline std::vector<VerifyCheck> checks_f_recursion(const VerifyLimits& lim) {
    std::vector<VerifyCheck> out;
    int top = std::min(lim.max_n, 7);
    for (int n = 2; n <= top; ++n) {
        const auto& ps = partitions_of(n);
        bool rec_ok = true, sum_ok = true;
        std::string bad;
        for (const Partition& lam : ps) {
            if (!lam.has_even_part()) continue;
            // remove the first even part: the even cycle C of the statement
            std::vector<int> rest;
            bool removed = false;
            for (int part : lam.parts) {
                if (!removed && part % 2 == 0) { removed = true; continue; }
                rest.push_back(part);
            }
            Partition y{std::move(rest)};
            long long alternating = 0;
            for (int m = 0; m <= n / 2 + 1; ++m) {
                long long lhs = even_subset_tuples(lam, m);
                long long rhs = checked_add(
                    checked_mul(m, even_subset_tuples(y, m - 1)),
                    checked_mul(m + 1, even_subset_tuples(y, m)));
                if (lhs != rhs) { rec_ok = false; bad = lam.to_string(); }
                alternating += (m % 2 ? -lhs : lhs);
            }
            if (alternating != 0) { sum_ok = false; bad = lam.to_string(); }
        }
        std::string p = "n=" + std::to_string(n);
        out.push_back(VerifyCheck{"tuple-count recursion holds", p, rec_ok,
                                  rec_ok ? "recursion holds" : "fails at " + bad,
                                  "recursion holds"});
        out.push_back(VerifyCheck{"alternating tuple sum vanishes", p, sum_ok,
                                  sum_ok ? "0" : "nonzero at " + bad, "0"});
    }
    return out;
}

} // namespace detail

inline VerifySuiteResult run_verify(const std::string& suite, const VerifyLimits& lim = {}) {
    using namespace detail;
    VerifySuiteResult res{suite, {}};
    auto run_one = [&](const std::string& s) -> std::vector<VerifyCheck> {
        if (s == "main-vs-orbit") return checks_main_vs_orbit(lim);
        if (s == "poincare") return checks_poincare(lim);
        if (s == "euler-char") return checks_euler_char(lim);
        if (s == "pi-closed-form") return checks_pi_closed_form(lim);
        if (s == "typea") return checks_typea(lim);
        if (s == "series-identities") return checks_series_identities(lim);
        if (s == "stembridge") return checks_stembridge(lim);
        if (s == "even-vanishing") return checks_even_vanishing(lim);
        if (s == "odd-order") return checks_odd_order(lim);
        if (s == "f-recursion") return checks_f_recursion(lim);
        throw catalog_error("unknown verify suite '" + s + "'");
    };
    if (suite == "all") {
        for (const std::string& s : verify_suite_names()) {
            if (s == "all") continue;
            auto checks = run_one(s);
            for (auto& c : checks) c.name = s + ": " + c.name;
            res.checks.insert(res.checks.end(), checks.begin(), checks.end());
        }
    } else {
        res.checks = run_one(suite);
    }
    return res;
}

inline nlohmann::ordered_json verify_json(const VerifySuiteResult& res) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const VerifyCheck& c : res.checks)
        checks.push_back({{"name", c.name},
                          {"params", c.params},
                          {"status", c.pass ? "pass" : "fail"},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs}});
    return {{"suite", res.suite}, {"checks", checks}, {"pass", res.pass()}};
}

inline std::string verify_text(const VerifySuiteResult& res) {
    std::ostringstream os;
    for (const VerifyCheck& c : res.checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.params.empty()) os << " [" << c.params << "]";
        if (!c.pass) os << "\n      lhs: " << c.lhs << "\n      rhs: " << c.rhs;
        os << "\n";
    }
    os << (res.pass() ? "OK" : "FAILED") << "  suite " << res.suite << ": "
       << res.checks.size() << " checks\n";
    return os.str();
}

} // namespace coxtoric
