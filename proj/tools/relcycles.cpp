// relcycles: verification and computation front end.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "relcycles/chow0.hpp"
#include "relcycles/cubical.hpp"
#include "relcycles/error.hpp"
#include "relcycles/expr.hpp"
#include "relcycles/suites.hpp"

using namespace relcycles;
using suites::Json;
using suites::Report;

namespace {

struct Output {
    std::string format = "json";
    std::string out;
    bool timing = false;
};

cubical::WeightNorm parse_norm(const std::string& s) {
    if (s == "max") return cubical::WeightNorm::Max;
    if (s == "sum") return cubical::WeightNorm::Sum;
    throw Error(ErrorKind::InvalidArgument, "norm must be max or sum");
}

std::size_t highest_t(const RationalExpr& e) {
    std::size_t n = 0;
    for (const SparsePoly* p : {&e.num, &e.den})
        for (const auto& [m, c] : p->terms())
            for (std::size_t i = kVarT1; i < kVarT1 + 9; ++i)
                if (m[i] != 0) n = std::max(n, i - kVarT1 + 1);
    return n;
}

std::string lambda_string(const Monomial& m, std::size_t arity) {
    std::string s = "(";
    for (std::size_t i = 0; i < arity; ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

struct AdmissibleArgs {
    std::string field = "Q";
    long exponent = 1;
    std::string poly;
    std::size_t arity = 0;
    std::string norm = "max";
};

// Returns the report and the text rendering ("true"/"false" plus the violation).
std::pair<Report, std::string> admissible_check(const AdmissibleArgs& a) {
    const Field field = suites::parse_field(a.field);
    const RationalExpr e = parse_expression(a.poly, field);
    const std::size_t arity = a.arity ? a.arity : std::max<std::size_t>(highest_t(e), 1);
    const cubical::WeightNorm norm = parse_norm(a.norm);
    const LocalPoly coeffs = cubical::expand_basis(to_t_poly(e, arity));
    const auto violation = cubical::find_violation(coeffs, ModulusIdeal(a.exponent), norm);

    Report r;
    r.suite = "admissible-check";
    r.config = {{"field", suites::field_name(field)}, {"exponent", a.exponent}, {"poly", a.poly}, {"arity", arity}, {"norm", a.norm}};
    std::string detail;
    if (violation) {
        detail = "lambda=" + lambda_string(violation->lambda, arity) + " coefficient " + violation->coeff.to_string() +
                 (violation->required_valuation == 0 ? " must be a unit"
                                                      : " needs x-valuation >= " + std::to_string(violation->required_valuation));
        r.results["violation"] = {{"lambda", lambda_string(violation->lambda, arity)},
                                  {"coefficient", violation->coeff.to_string()},
                                  {"required_valuation", violation->required_valuation}};
    }
    r.results["admissible"] = !violation.has_value();
    r.check("admissible").record(!violation, [&] { return detail; });
    std::string text = violation ? "false\nviolation: " + detail + "\n" : "true\n";
    return {r, text};
}

int emit(const Output& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative cycles with modulus: verification suites and computations"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    if (const char* env = std::getenv("RELCYCLES_FORMAT")) out.format = env;
    app.add_option("--format", out.format, "json | tsv | text (default from RELCYCLES_FORMAT, else json)")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--out", out.out, "write the report to FILE instead of stdout");
    app.add_flag("--timing", out.timing, "include wall time in the report");

    AdmissibleArgs adm;
    auto* adm_cmd = app.add_subcommand("admissible-check", "test a polynomial in x, t1..t9 for admissibility");
    adm_cmd->add_option("--field", adm.field, "Q or a prime");
    adm_cmd->add_option("--exponent,-e", adm.exponent, "I = (x^e)")->required()->check(CLI::PositiveNumber);
    adm_cmd->add_option("--poly", adm.poly, "polynomial in x and t1..t9")->required();
    adm_cmd->add_option("--arity", adm.arity, "arity n (default: highest t index)");
    adm_cmd->add_option("--norm", adm.norm, "max | sum")->check(CLI::IsMember({"max", "sum"}));

    suites::CubicalConfig cub;
    std::string cub_norm = "max";
    auto* cub_cmd = app.add_subcommand("cubical-verify", "structure-map identities on random admissible polynomials");
    cub_cmd->add_option("--field", cub.primes, "comma-separated primes")->delimiter(',');
    cub_cmd->add_option("--exponent", cub.exponents, "comma-separated exponents e")->delimiter(',');
    cub_cmd->add_option("--max-arity", cub.max_arity)->check(CLI::Range(1, 8));
    cub_cmd->add_option("--samples", cub.samples, "polynomials per (p, e, arity)");
    cub_cmd->add_option("--norm", cub_norm)->check(CLI::IsMember({"max", "sum"}));
    cub_cmd->add_option("--seed", cub.seed);

    suites::Weight1Config w1;
    std::string w1_field = "5";
    auto* w1_cmd = app.add_subcommand("weight1-verify", "homotopy, delta and witness checks on NP");
    w1_cmd->add_option("--field", w1_field, "Q or a prime");
    w1_cmd->add_option("--exponent", w1.exponent)->check(CLI::PositiveNumber);
    w1_cmd->add_option("--trials", w1.trials);
    w1_cmd->add_option("--cycles3", w1.cycles3, "3-cycles for the contraction check");
    w1_cmd->add_option("--seed", w1.seed);

    suites::ChowConfig ch;
    std::string ch_field = "3";
    std::string ch_cycle;
    auto* ch_cmd = app.add_subcommand("chow0", "zero-cycles with modulus on P^1");
    ch_cmd->add_option("--field", ch_field, "a prime (Q only with --cycle)");
    ch_cmd->add_option("--modulus", ch.modulus, "divisor such as \"2*[0] + [inf]\"")->required();
    ch_cmd->add_flag("--oracle", ch.oracle, "run the brute-force oracle and separation check");
    ch_cmd->add_option("--degree-bound", ch.degree_bound);
    ch_cmd->add_option("--separation-degree", ch.separation_degree);
    ch_cmd->add_option("--relations", ch.relation_trials, "random g in G checked for trivial class");
    ch_cmd->add_option("--curves", ch.curve_trials, "random curve cycles checked for boundary = div(norm)");
    ch_cmd->add_option("--cycle", ch_cycle, "also report the class of this zero-cycle");
    ch_cmd->add_option("--seed", ch.seed);
    ch.oracle = false;

    suites::FormsConfig fm;
    std::string fm_field = "5";
    std::vector<int> fm_flags;
    auto* fm_cmd = app.add_subcommand("forms-verify", "identities of relative logarithmic forms");
    fm_cmd->add_option("--field", fm_field, "Q or a prime");
    fm_cmd->add_option("--vars", fm.nvars)->check(CLI::Range(1, 4));
    fm_cmd->add_option("--mult", fm.mult, "D multiplicities per coordinate")->delimiter(',');
    fm_cmd->add_option("--F", fm_flags, "0/1 per coordinate: component of F")->delimiter(',');
    fm_cmd->add_option("--degree", fm.degree, "coefficient degree bound")->check(CLI::NonNegativeNumber);
    fm_cmd->add_option("--trials", fm.trials);
    fm_cmd->add_option("--seed", fm.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const suites::Format format = suites::parse_format(out.format);
        Report report;
        if (adm_cmd->parsed()) {
            auto [r, text] = admissible_check(adm);
            const std::string rendered = format == suites::Format::Text ? text : suites::render(r, format, out.timing);
            if (int rc = emit(out, rendered)) return rc;
            return r.passed() ? 0 : 1;
        }
        if (cub_cmd->parsed()) {
            cub.norm = parse_norm(cub_norm);
            report = suites::run_cubical_suite(cub);
        } else if (w1_cmd->parsed()) {
            w1.field = suites::parse_field(w1_field);
            report = suites::run_weight1_suite(w1);
        } else if (ch_cmd->parsed()) {
            const Field field = suites::parse_field(ch_field);
            if (field.is_rationals()) {
                if (ch_cycle.empty() || ch.oracle) throw Error(ErrorKind::InvalidArgument, "over Q only --cycle is supported");
                const chow0::Divisor d = chow0::parse_divisor(ch.modulus, field);
                report.suite = "chow0";
                report.config = {{"field", "Q"}, {"modulus", ch.modulus}, {"cycle", ch_cycle}};
                report.results["class"] = chow0::chow_class(chow0::parse_divisor(ch_cycle, field), d).to_string();
            } else {
                ch.q = field.characteristic();
                report = suites::run_chow_suite(ch);
                if (!ch_cycle.empty()) {
                    const chow0::Divisor d = chow0::parse_divisor(ch.modulus, field);
                    report.config["cycle"] = ch_cycle;
                    report.results["class"] = chow0::chow_class(chow0::parse_divisor(ch_cycle, field), d).to_string();
                }
            }
        } else if (fm_cmd->parsed()) {
            fm.field = suites::parse_field(fm_field);
            for (int v : fm_flags) fm.in_F.push_back(v != 0);
            report = suites::run_forms_suite(fm);
        }
        if (int rc = emit(out, suites::render(report, format, out.timing))) return rc;
        return report.passed() ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
