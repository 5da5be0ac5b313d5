// Command-line surface: compute root system, group, and Euler-characteristic
// reports, emit character tables and graded series, and run the verification
// suites. JSON is the canonical machine format; csv/table are sugar.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxtoric/coxtoric.hpp"
#include "coxtoric/serialize.hpp"
#include "coxtoric/verify.hpp"

namespace {

using coxtoric::json;

struct Options {
    std::string type = "A";
    int rank = 2;
    int n = 4;
    std::string format;  // default filled after parse: json, or text for verify
    bool enable_e6 = false;
    std::string out;
    std::string suite = "all";
    int max_rank = 4;
    int max_n = 8;
    int degree = 8;
    long long eval_q = 0;
    bool has_eval_q = false;
    bool per_m = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

char type_char(const Options& opt) {
    if (opt.type.size() != 1)
        throw coxtoric::catalog_error("--type expects a single letter A,B,C,D,G,F,E");
    return opt.type[0];
}

int run_roots(const Options& opt) {
    auto rs = coxtoric::build_root_system(type_char(opt), opt.rank, opt.enable_e6);
    if (opt.format == "json") {
        emit(opt, dump(coxtoric::roots_json(rs)));
    } else {
        std::ostringstream os;
        if (opt.format == "csv") {
            os << "index,coords,positive\n";
            for (int i = 0; i < rs.num_roots(); ++i) {
                os << i << ",\"";
                const auto& co = rs.roots[static_cast<size_t>(i)].coords;
                for (size_t k = 0; k < co.size(); ++k) os << (k ? " " : "") << co[k];
                os << "\"," << (rs.is_positive(i) ? "true" : "false") << "\n";
            }
        } else {
            os << rs.label << ": " << rs.num_roots() << " roots, "
               << rs.num_positive << " positive\n";
            for (int i = 0; i < rs.num_roots(); ++i) {
                os << (rs.is_positive(i) ? " + " : " - ") << "(";
                const auto& co = rs.roots[static_cast<size_t>(i)].coords;
                for (size_t k = 0; k < co.size(); ++k) os << (k ? ", " : "") << co[k];
                os << ")\n";
            }
        }
        emit(opt, os.str());
    }
    return 0;
}

int run_group(const Options& opt) {
    auto g = coxtoric::enumerate_group(
        coxtoric::build_root_system(type_char(opt), opt.rank, opt.enable_e6));
    json j = coxtoric::group_json(g);
    if (opt.format == "json")
        emit(opt, dump(j));
    else if (opt.format == "csv")
        emit(opt, coxtoric::key_value_csv(j));
    else
        emit(opt, coxtoric::key_value_table(j));
    return 0;
}

int run_euler(const Options& opt) {
    auto g = coxtoric::enumerate_group(
        coxtoric::build_root_system(type_char(opt), opt.rank, opt.enable_e6));
    auto rep = coxtoric::euler_report(g);
    if (opt.format == "json") {
        emit(opt, dump(coxtoric::euler_json(g, rep)));
    } else if (opt.format == "csv") {
        json j = coxtoric::euler_json(g, rep);
        j.erase("lambda");
        emit(opt, coxtoric::key_value_csv(j));
    } else {
        std::ostringstream os;
        os << "type " << g.root_system().label << ", |W| = " << g.order() << "\n"
           << "chi (descents) = " << rep.chi_descents << "\n"
           << "chi (orbits)   = " << rep.chi_orbits << "\n"
           << "poincare       = " << rep.poincare_cells.to_string() << "\n"
           << "lambda:\n"
           << coxtoric::class_function_table(rep.lambda);
        emit(opt, os.str());
    }
    return 0;
}

int run_character_lambda(const Options& opt) {
    auto g = coxtoric::enumerate_group(
        coxtoric::build_root_system(type_char(opt), opt.rank, opt.enable_e6));
    auto lam = coxtoric::lambda_main(g);
    if (opt.format == "json")
        emit(opt, dump(coxtoric::class_function_json(lam)));
    else if (opt.format == "csv")
        emit(opt, coxtoric::class_function_csv(lam));
    else
        emit(opt, coxtoric::class_function_table(lam));
    return 0;
}

int run_character_lambda_a(const Options& opt) {
    auto lam = coxtoric::lambda_typea(opt.n);
    if (opt.format == "json")
        emit(opt, dump(coxtoric::cycle_type_function_json(lam)));
    else if (opt.format == "csv")
        emit(opt, coxtoric::cycle_type_function_csv(lam));
    else
        emit(opt, coxtoric::cycle_type_function_table(lam));
    return 0;
}

int run_series(const Options& opt) {
    auto s = coxtoric::stembridge_series(opt.n);
    if (opt.has_eval_q) {
        json terms = json::array();
        for (int d = 0; d <= s.truncation(); ++d) {
            auto f = coxtoric::evaluate_at(s.term(d), opt.eval_q);
            json t = coxtoric::cycle_type_function_json(f);
            terms.push_back(json{{"degree", d}, {"values", t["values"]}});
        }
        json j{{"truncation", s.truncation()}, {"q", opt.eval_q}, {"terms", terms}};
        if (opt.format == "json") {
            emit(opt, dump(j));
        } else {
            std::ostringstream os;
            for (int d = 0; d <= s.truncation(); ++d)
                os << "degree " << d << ":\n"
                   << coxtoric::cycle_type_function_table(coxtoric::evaluate_at(s.term(d), opt.eval_q));
            emit(opt, os.str());
        }
        return 0;
    }
    if (opt.format == "json") {
        emit(opt, dump(coxtoric::series_json(s)));
    } else {
        std::ostringstream os;
        for (int d = 0; d <= s.truncation(); ++d)
            os << "degree " << d << ":\n" << coxtoric::cycle_type_function_table(s.term(d));
        emit(opt, os.str());
    }
    return 0;
}

json multiplicities_json(const coxtoric::SymDecomposition& dec) {
    json m;
    const auto& ps = coxtoric::partitions_of(dec.n);
    for (size_t i = 0; i < ps.size(); ++i) {
        const coxtoric::Rational& r = dec.multiplicities[i];
        if (r.is_integer())
            m[ps[i].to_string()] = r.num();
        else
            m[ps[i].to_string()] = r.to_string();
    }
    return m;
}

int run_decompose(const Options& opt) {
    int n = opt.n;
    json j;
    j["n"] = n;
    j["character"] = "lambda";
    if (opt.per_m) {
        json terms = json::array();
        auto inner = coxtoric::lambda_typea_terms(n);
        for (size_t m = 0; m < inner.size(); ++m) {
            auto dec = coxtoric::decompose(coxtoric::to_rational_fn(inner[m]));
            json t;
            t["m"] = m;
            t["values"] = coxtoric::cycle_type_function_json(inner[m])["values"];
            t["multiplicities"] = multiplicities_json(dec);
            terms.push_back(t);
        }
        j["terms"] = terms;
    } else {
        auto dec = coxtoric::decompose(coxtoric::to_rational_fn(coxtoric::lambda_typea(n)));
        j["integral"] = dec.integral();
        j["multiplicities"] = multiplicities_json(dec);
    }
    if (opt.format == "json")
        emit(opt, dump(j));
    else if (opt.format == "csv")
        emit(opt, coxtoric::key_value_csv(opt.per_m ? j : j["multiplicities"]));
    else
        emit(opt, coxtoric::key_value_table(opt.per_m ? j : j["multiplicities"]));
    return 0;
}

int run_verify(const Options& opt) {
    coxtoric::VerifyLimits lim;
    lim.max_rank = opt.max_rank;
    lim.max_n = opt.max_n;
    lim.degree = opt.degree;
    lim.enable_e6 = opt.enable_e6;
    auto res = coxtoric::run_verify(opt.suite, lim);
    if (opt.format == "json")
        emit(opt, dump(coxtoric::verify_json(res)));
    else
        emit(opt, coxtoric::verify_text(res));
    return res.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact equivariant Euler characteristics of real Coxeter toric varieties"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    };
    auto add_type_rank = [&](CLI::App* cmd) {
        cmd->add_option("--type", opt.type, "root system type (A,B,C,D,G,F,E)")->required();
        cmd->add_option("--rank", opt.rank, "rank")->required();
        cmd->add_flag("--enable-e6", opt.enable_e6, "allow E6 (|W| = 51840)");
    };

    CLI::App* roots = app.add_subcommand("roots", "emit the root system");
    add_type_rank(roots);
    add_format(roots);

    CLI::App* group = app.add_subcommand("group", "emit group order, classes, descents");
    add_type_rank(group);
    add_format(group);

    CLI::App* euler = app.add_subcommand("euler", "emit the full Euler-characteristic report");
    add_type_rank(euler);
    add_format(euler);

    CLI::App* character = app.add_subcommand("character", "emit a character table");
    character->require_subcommand(1);
    CLI::App* chlam = character->add_subcommand("lambda", "equivariant Euler characteristic");
    add_type_rank(chlam);
    add_format(chlam);
    CLI::App* chlam_a = character->add_subcommand("lambda-a", "cycle-type form on Sym_n");
    chlam_a->add_option("--n", opt.n, "number of letters")->required()->check(CLI::Range(1, 10));
    add_format(chlam_a);

    CLI::App* series = app.add_subcommand("series", "emit a graded character series");
    series->require_subcommand(1);
    CLI::App* stem = series->add_subcommand("stembridge", "even-cohomology character series");
    stem->add_option("--n", opt.n, "truncation degree")->required()->check(CLI::Range(0, 10));
    stem->add_option("--eval-q", opt.eval_q, "evaluate polynomials at an integer")
        ->each([&](const std::string&) { opt.has_eval_q = true; });
    add_format(stem);

    CLI::App* dec = app.add_subcommand("decompose", "decompose into irreducibles");
    dec->require_subcommand(1);
    CLI::App* declam = dec->add_subcommand("lambda", "the equivariant Euler characteristic on Sym_n");
    declam->add_option("--n", opt.n, "number of letters")->required()->check(CLI::Range(1, 10));
    declam->add_flag("--per-m", opt.per_m, "emit each inner sum with its decomposition");
    add_format(declam);

    CLI::App* verify = app.add_subcommand("verify", "run an identity-check suite");
    verify->add_option("--suite", opt.suite, "suite name")->required();
    verify->add_option("--max-rank", opt.max_rank, "largest rank for group suites");
    verify->add_option("--max-n", opt.max_n, "largest symmetric-group degree");
    verify->add_option("--degree", opt.degree, "series truncation degree")->check(CLI::Range(0, 10));
    verify->add_flag("--enable-e6", opt.enable_e6, "include E6 in group suites");
    verify->add_option("--format", opt.format, "text or json report")
        ->check(CLI::IsMember({"json", "csv", "table", "text"}));
    verify->add_option("--out", opt.out, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
        if (opt.format.empty()) opt.format = app.got_subcommand(verify) ? "text" : "json";
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(roots)) return run_roots(opt);
        if (app.got_subcommand(group)) return run_group(opt);
        if (app.got_subcommand(euler)) return run_euler(opt);
        if (app.got_subcommand(character)) {
            if (character->got_subcommand(chlam)) return run_character_lambda(opt);
            return run_character_lambda_a(opt);
        }
        if (app.got_subcommand(series)) return run_series(opt);
        if (app.got_subcommand(dec)) return run_decompose(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const coxtoric::catalog_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const coxtoric::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
