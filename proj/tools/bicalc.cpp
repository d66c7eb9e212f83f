#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bicalc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact bicovariant calculus and gauge theory checks"};
    app.require_subcommand(1);

    auto* suq2 = app.add_subcommand("suq2", "U_q(su_2): run a suite or inspect an element");
    std::string suq2_suite, element = "Xp";
    bool suq2_json = false;
    suq2->add_option("--suite", suq2_suite, "hopf, casimir, bralie or check-L");
    suq2->add_option("--expr", element, "element to inspect, e.g. Xp*K^-1");
    suq2->add_flag("--json", suq2_json, "machine-readable report");

    auto* tangent = app.add_subcommand("tangent", "quantum tangent space from a generator function c");
    std::string c_text;
    unsigned vars = 1;
    tangent->add_option("--c", c_text, "generator function, e.g. p^3/6 or lam^-2*exp(lam*p)")->required();
    tangent->add_option("--vars", vars, "number of momenta")->check(CLI::IsMember({1u, 2u}));

    auto* calculus = app.add_subcommand("calculus", "relations of a named calculus");
    std::string spec, show = "relations";
    calculus->add_option("--spec", spec, "jet:<n>, fd:1 or fd:2")->required();
    calculus->add_option("--show", show, "relations or omega2");

    auto* gauge = app.add_subcommand("gauge", "curvature, gauge transforms and the lemmas");
    bicalc::cli::GaugeArgs g;
    std::string gamma;
    gauge->add_option("--spec", g.spec, "jet:2 or fd:2")->required();
    gauge->add_option("--alpha", g.alpha, "comma-separated components of alpha")->required();
    auto* gamma_opt = gauge->add_option("--gamma", gamma, "gauge transformation");
    gauge->add_option("--psi", g.psi, "matter field for --op lemmas");
    gauge->add_option("--op", g.op, "curvature, transform, flat or lemmas")->required();
    gauge->add_option("--sym", g.symbols, "opaque function symbols (comma-separated)");
    gauge->add_flag("--json", g.json, "machine-readable report");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    bool json = false;
    verify->add_option("--suite", suite, "hopf, casimir, bralie, check-L, jets, finite-diff, gauge-jet, gauge-fd or all");
    verify->add_flag("--json", json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bicalc::cli::Result r;
    if (*suq2)
        r = bicalc::cli::suq2(suq2_suite.empty() ? std::nullopt : std::optional<std::string>(suq2_suite), element,
                              suq2_json);
    else if (*tangent)
        r = bicalc::cli::tangent(c_text, vars);
    else if (*calculus)
        r = bicalc::cli::calculus(spec, show);
    else if (*gauge) {
        if (*gamma_opt) g.gamma = gamma;
        r = bicalc::cli::gauge(g);
    } else
        r = bicalc::cli::verify(suite, json);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
