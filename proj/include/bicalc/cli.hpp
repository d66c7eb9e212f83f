#ifndef BICALC_CLI_HPP
#define BICALC_CLI_HPP

#include <exception>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bicalc/suites.hpp"

namespace bicalc::cli {

/// Captured output of one command.  Exit codes: 0 all checks pass,
/// 1 some check failed, 2 usage or parse error.
struct Result {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline Result usage_error(const std::string& message) { return {2, "", "error: " + message + "\n"}; }

inline Result from_report(const Report& r, bool json) {
    return {r.ok() ? 0 : 1, json ? emit_json(r) : emit_text(r), ""};
}

/// Splits on commas outside brackets and parentheses, so "g[1,0], b" has two items.
inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    items.push_back(cur);
    for (auto& s : items) {
        auto b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    return items;
}

inline const std::string& default_symbols() {
    static const std::string s = "a,b,f,g,h,psi,s,t";
    return s;
}

inline std::set<std::string> symbol_set(const std::string& csv) {
    std::set<std::string> out;
    for (const auto& s : split_list(csv))
        if (!s.empty()) out.insert(s);
    return out;
}

template <class F>
Result guarded(F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

/// Without a suite: normal form, coproduct, antipode, counit and rho of an element.
inline Result suq2(const std::optional<std::string>& suite, const std::string& element, bool json) {
    return guarded([&]() -> Result {
        if (suite) {
            if (*suite != "hopf" && *suite != "casimir" && *suite != "bralie" && *suite != "check-L")
                return usage_error("unknown suq2 suite '" + *suite + "' (expected hopf, casimir, bralie or check-L)");
            return from_report(run_suite(*suite), json);
        }
        uq::UqElement u = parse_uq(element);
        std::string out;
        out += "element: " + uq::to_string(u) + "\n";
        out += "coproduct: " + uq::to_string(uq::coproduct(u)) + "\n";
        out += "antipode: " + uq::to_string(uq::antipode(u)) + "\n";
        out += "counit: " + to_string(uq::counit(u)) + "\n";
        out += "rho: " + uq::to_string(uq::fundamental_rep(u)) + "\n";
        return {0, out, ""};
    });
}

inline Result tangent(const std::string& c_text, unsigned vars) {
    return guarded([&]() -> Result {
        GeneratorFunction c = parse_generator(c_text, vars);
        CalculusSpec s = calculus_from_generator(c);
        std::string out = "c = " + to_string(c) + "\n";
        out += "dim L = " + std::to_string(s.computed.dimension) + "\n";
        for (std::size_t i = 0; i < s.computed.basis.size(); ++i)
            out += "p_" + std::to_string(i + 1) + " = " + to_string(s.computed.basis[i]) + "\n";
        out += "calculus: " + s.name() + "\n";
        for (std::size_t m = 0; m < s.tangent.size(); ++m)
            out += "e_" + std::to_string(m + 1) + " = " + s.tangent_labels[m] + " = " + to_string(s.tangent[m]) +
                   "  (dual form " + s.form_names[m] + ")\n";
        out += std::string("translation closed: ") + (translation_closed(s.tangent) ? "yes" : "no") + "\n";
        return {0, out, ""};
    });
}

/// "relations": partials, d and the commutation rule for an opaque f.
/// "omega2": wedge table, d of the basis 1-forms and the rule for 2-forms.
inline Result calculus(const std::string& spec, const std::string& show) {
    return guarded([&]() -> Result {
        if (show != "relations" && show != "omega2") return usage_error("--show must be relations or omega2");
        CalculusSpec s = calculus_by_name(spec);
        const CoordFunction f = coord::symbol("f");
        std::string out = "calculus: " + s.name() + "\n";
        if (show == "relations") {
            for (std::size_t m = 0; m < s.dimension(); ++m)
                out += "partial_" + s.tangent_labels[m] + "(f) = " + to_string(partial(s, m, f)) + "\n";
            out += "d(f) = " + render(s, d0(s, f)) + "\n";
            for (std::size_t m = 0; m < s.dimension(); ++m) {
                GradedForm theta = GradedForm::basis(1, static_cast<int>(m));
                out += "f*" + s.form_names[m] + " = " + render(s, left_mult(s, f, theta)) + "\n";
            }
            return {0, out, ""};
        }
        const Omega2Data& o = s.require_omega2();
        if (o.names.empty()) return {0, out + "Omega^2 = 0\n", ""};
        for (std::size_t i = 0; i < s.dimension(); ++i)
            for (std::size_t j = 0; j < s.dimension(); ++j)
                out += s.form_names[i] + "^" + s.form_names[j] + " = " +
                       render(s, wedge(s, GradedForm::basis(1, static_cast<int>(i)),
                                       GradedForm::basis(1, static_cast<int>(j)))) +
                       "\n";
        for (std::size_t j = 0; j < s.dimension(); ++j)
            out += "d(" + s.form_names[j] + ") = " + render(s, d1(s, GradedForm::basis(1, static_cast<int>(j)))) + "\n";
        for (std::size_t b = 0; b < o.names.size(); ++b)
            out += "f*" + o.names[b] + " = " + render(s, left_mult(s, f, GradedForm::basis(2, static_cast<int>(b)))) +
                   "\n";
        return {0, out, ""};
    });
}

struct GaugeArgs {
    std::string spec;
    std::string alpha;
    std::optional<std::string> gamma;
    std::string psi = "psi";
    std::string op;
    std::string symbols = default_symbols();
    bool json = false;
};

inline Result gauge(const GaugeArgs& a) {
    return guarded([&]() -> Result {
        if (a.op != "curvature" && a.op != "transform" && a.op != "flat" && a.op != "lemmas")
            return usage_error("--op must be curvature, transform, flat or lemmas");
        CalculusSpec s = calculus_by_name(a.spec);
        const auto syms = symbol_set(a.symbols);
        const auto items = split_list(a.alpha);
        if (items.size() != s.dimension())
            return usage_error("--alpha needs " + std::to_string(s.dimension()) + " component(s) for " + s.name() +
                               ", got " + std::to_string(items.size()));
        GradedForm alpha(1);
        for (std::size_t m = 0; m < items.size(); ++m) {
            try {
                alpha.add(static_cast<int>(m), parse_function(items[m], syms));
            } catch (const ParseError& e) {
                return usage_error("alpha component " + std::to_string(m + 1) + ", " + e.what());
            }
        }
        const std::string shown = render(s, alpha);
        if (a.op == "curvature") return {0, "alpha = " + shown + "\nF = " + render(s, gauge::curvature(s, alpha)) + "\n", ""};
        if (a.op == "flat") {
            bool flat = gauge::is_flat(s, alpha);
            return {0, "alpha = " + shown + "\nflat: " + (flat ? "yes" : "no") + "\n", ""};
        }
        CoordFunction gamma = parse_function(a.gamma.value_or("g"), syms);
        if (gamma.is_zero()) return usage_error("gamma must be invertible");
        if (a.op == "transform") {
            if (!a.gamma) return usage_error("--op transform needs --gamma");
            return {0, "alpha = " + shown + "\nalpha^gamma = " + render(s, gauge::gauge_transform(s, alpha, gamma)) + "\n", ""};
        }
        Report r = gauge::verify_lemmas(s, alpha, gamma, parse_function(a.psi, syms));
        r.append(gauge::gauge_transform_curvature_check(s, alpha, gamma));
        r.suite = "lemmas";
        return from_report(r, a.json);
    });
}

inline Result verify(const std::string& suite, bool json) {
    return guarded([&]() -> Result { return from_report(run_suite(suite), json); });
}

}  // namespace bicalc::cli

#endif
