// Command line front end: normalize difference Riccati matrices to Tietze
// form, build the third-order criterion, search for rational solutions, and
// report a differential-transcendence verdict or the constructed
// differential Riccati equation.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tietze/report.hpp"

namespace {

std::vector<std::string> split_top_level(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : csv) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for differential transcendence of difference Riccati equations"};
    app.require_subcommand(1);

    std::string op_spec = "qdilation";
    bool as_json = false;
    bool trace = false;
    long degree_bound = 4;
    bool assume_no_alg = false;

    std::string matrix_src, r_src, g_src, coeffs_csv, rhs_src = "0";
    std::optional<long> window_lo, window_hi;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--op", op_spec, "Operator spec: shift:<c>, qdilation, mahler:<p>")
            ->capture_default_str();
        sub->add_flag("--json", as_json, "Emit JSON instead of text");
    };

    auto* norm = app.add_subcommand("normalize", "Reduce a Riccati matrix to Tietze normal form");
    norm->add_option("matrix", matrix_src, "Matrix [[a,b],[c,d]]")->required();
    add_common(norm);
    norm->add_flag("--trace", trace, "Show the gauge step trace");

    auto* crit = app.add_subcommand("criterion", "Build the third-order criterion for a Tietze r");
    crit->add_option("-r,--r", r_src, "The Tietze coefficient r")->required();
    add_common(crit);

    auto* solve = app.add_subcommand("solve", "Find rational solutions of sum_i c_i tau^i(g) = rhs");
    solve->add_option("--coeffs", coeffs_csv, "Comma-separated c_0,...,c_n")->required();
    solve->add_option("--rhs", rhs_src, "Right-hand side (default 0)");
    solve->add_option("--window-lo", window_lo, "Laurent window lower exponent (shift/Mahler only)");
    solve->add_option("--window-hi", window_hi, "Laurent window upper exponent (shift/Mahler only)");
    add_common(solve);

    auto* verify = app.add_subcommand("verify", "Check a candidate g against the criterion for r");
    verify->add_option("-r,--r", r_src, "The Tietze coefficient r")->required();
    verify->add_option("-g,--g", g_src, "Candidate solution g")->required();
    add_common(verify);

    auto* verdict = app.add_subcommand("verdict", "Run the full pipeline on a Riccati matrix");
    verdict->add_option("matrix", matrix_src, "Matrix [[a,b],[c,d]]")->required();
    add_common(verdict);
    verdict->add_flag("--assume-no-algebraic-solutions", assume_no_alg,
                      "Assert that Eq(A,i) has no solutions algebraic over F (all i >= 1)");
    verdict->add_option("--degree-bound", degree_bound, "Bounded-search window for shift/Mahler operators")
        ->capture_default_str();
    verdict->add_flag("--trace", trace, "Show the gauge step trace");

    auto* preset = app.add_subcommand("preset-qairy", "Run the built-in q-Airy pipeline with golden checks");
    preset->add_flag("--json", as_json, "Emit JSON instead of text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (norm->parsed()) {
            std::cout << tietze::cmd_normalize(matrix_src, op_spec, as_json, trace);
        } else if (crit->parsed()) {
            std::cout << tietze::cmd_criterion(r_src, op_spec, as_json);
        } else if (solve->parsed()) {
            std::optional<std::pair<long, long>> window;
            if (window_lo && window_hi) window = std::make_pair(*window_lo, *window_hi);
            std::cout << tietze::cmd_solve(split_top_level(coeffs_csv), rhs_src, op_spec, as_json, window);
        } else if (verify->parsed()) {
            std::cout << tietze::cmd_verify(r_src, g_src, op_spec, as_json);
        } else if (verdict->parsed()) {
            tietze::VerdictOptions opts;
            opts.assume_no_algebraic_solutions = assume_no_alg;
            opts.degree_bound = degree_bound;
            std::cout << tietze::cmd_verdict(matrix_src, op_spec, opts, as_json, trace);
        } else if (preset->parsed()) {
            std::cout << tietze::cmd_preset_qairy(as_json);
        }
    } catch (const tietze::syntax_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tietze::eval_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tietze::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
