#ifndef BICALC_CALCULUS_HPP
#define BICALC_CALCULUS_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicalc/generator.hpp"

namespace bicalc {

/// Form of degree 0, 1 or 2 in right-coefficient normal form: sum over
/// basis indices b of (basis element b) * coeffs[b].  Degree 0 stores the
/// function under index 0.
struct GradedForm {
    int degree = 1;
    std::map<int, CoordFunction> coeffs;

    GradedForm() = default;
    explicit GradedForm(int deg) : degree(deg) {}
    static GradedForm function(const CoordFunction& f) {
        GradedForm g(0);
        g.add(0, f);
        return g;
    }
    static GradedForm basis(int deg, int index, const CoordFunction& c = CoordFunction(1)) {
        GradedForm g(deg);
        g.add(index, c);
        return g;
    }

    bool is_zero() const { return coeffs.empty(); }
    CoordFunction coeff(int b) const {
        auto it = coeffs.find(b);
        return it == coeffs.end() ? CoordFunction() : it->second;
    }

    void add(int b, const CoordFunction& c) {
        if (c.is_zero()) return;
        auto it = coeffs.find(b);
        if (it == coeffs.end()) {
            coeffs.emplace(b, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }

    GradedForm& operator+=(const GradedForm& o) {
        check_degree(o);
        for (const auto& [b, c] : o.coeffs) add(b, c);
        return *this;
    }
    GradedForm& operator-=(const GradedForm& o) {
        check_degree(o);
        for (const auto& [b, c] : o.coeffs) add(b, -c);
        return *this;
    }
    friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
    friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
    GradedForm operator-() const {
        GradedForm r(degree);
        for (const auto& [b, c] : coeffs) r.coeffs.emplace(b, -c);
        return r;
    }

    /// Right multiplication by a function; coefficients commute with each other.
    GradedForm times(const CoordFunction& f) const {
        GradedForm r(degree);
        if (f.is_zero()) return r;
        for (const auto& [b, c] : coeffs) r.add(b, c * f);
        return r;
    }

    friend bool operator==(const GradedForm& a, const GradedForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree == b.degree && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const GradedForm& a, const GradedForm& b) { return !(a == b); }

private:
    void check_degree(const GradedForm& o) {
        if (o.is_zero()) return;
        if (is_zero()) degree = o.degree;
        else if (degree != o.degree) throw std::invalid_argument("adding forms of different degree");
    }
};

/// Degree-two data of a calculus.  Wedge products of basis 1-forms and the
/// differentials of basis 1-forms have constant coefficients.
struct Omega2Data {
    enum class FunctionRule { commute, shift_all };

    std::vector<std::string> names;
    std::map<std::pair<int, int>, std::map<int, Scalar>> wedge;
    std::vector<GradedForm> d_theta;
    FunctionRule rule = FunctionRule::commute;
    /// Omega_b = theta_i ^ theta_j for each 2-form basis element b.
    std::vector<std::pair<int, int>> representatives;
};

class MissingOmega2 : public std::logic_error {
public:
    MissingOmega2() : std::logic_error("this calculus carries no 2-form data") {}
};

struct CalculusSpec {
    enum class Kind { jet, finite_difference_1d, finite_difference_2d, generic };

    Kind kind = Kind::generic;
    unsigned order = 0;
    unsigned dims = 1;
    GeneratorFunction generator;
    /// Basis p_n = c^(n) - c^(n)(0) as produced from the generator.
    TangentBasis computed;
    /// Working basis e_m of L, dual to the invariant 1-forms theta_m.
    std::vector<GeneratorFunction> tangent;
    std::vector<std::string> tangent_labels;
    std::vector<std::string> form_names;
    /// tangent[m] expressed in the computed basis.
    std::vector<std::vector<Scalar>> conversion;
    std::optional<Omega2Data> omega2;

    std::size_t dimension() const { return tangent.size(); }

    const Omega2Data& require_omega2() const {
        if (!omega2) throw MissingOmega2();
        return *omega2;
    }

    std::string name() const {
        switch (kind) {
            case Kind::jet: return "jet:" + std::to_string(order);
            case Kind::finite_difference_1d: return "fd:1";
            case Kind::finite_difference_2d: return "fd:2";
            default: return "generic";
        }
    }
};

namespace calculus_detail {

inline Scalar factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Scalar(f);
}

inline Scalar binomial(unsigned n, unsigned k) {
    Integer b = 1;
    for (unsigned j = 1; j <= k; ++j) b = b * (n - j + 1) / j;
    return Scalar(b);
}

inline GeneratorFunction difference_element(unsigned dims, int axis, const Scalar& step) {
    GeneratorFunction g(dims);
    g.add(GenKey::exp(axis, step), step.inverse());
    g.add(GenKey::constant(), -step.inverse());
    return g;
}

inline std::optional<std::vector<std::vector<Scalar>>> coordinates_in(const std::vector<GeneratorFunction>& basis,
                                                                      const std::vector<GeneratorFunction>& elems) {
    if (basis.size() != elems.size()) return std::nullopt;
    LinearSpan<GenKey> span;
    for (const auto& b : basis) span.insert(b.terms());
    std::vector<std::vector<Scalar>> out;
    for (const auto& e : elems) {
        auto c = span.coordinates(e.terms());
        if (!c) return std::nullopt;
        out.push_back(*c);
    }
    return out;
}

inline Omega2Data two_jet_omega2() {
    Omega2Data o;
    o.names = {"(dx)^2", "dx^w"};
    o.wedge[{0, 0}] = {{0, Scalar(1)}};
    o.wedge[{0, 1}] = {{1, Scalar(1)}};
    o.wedge[{1, 0}] = {{1, Scalar(-1)}};
    o.wedge[{1, 1}] = {};
    o.d_theta = {GradedForm(2), GradedForm::basis(2, 0)};
    o.rule = Omega2Data::FunctionRule::commute;
    o.representatives = {{0, 0}, {0, 1}};
    return o;
}

inline Omega2Data fd1_omega2() {
    Omega2Data o;
    o.wedge[{0, 0}] = {};
    o.d_theta = {GradedForm(2)};
    o.rule = Omega2Data::FunctionRule::shift_all;
    return o;
}

inline Omega2Data fd2_omega2() {
    Omega2Data o;
    o.names = {"dx^dy"};
    o.wedge[{0, 0}] = {};
    o.wedge[{0, 1}] = {{0, Scalar(1)}};
    o.wedge[{1, 0}] = {{0, Scalar(-1)}};
    o.wedge[{1, 1}] = {};
    o.d_theta = {GradedForm(2), GradedForm(2)};
    o.rule = Omega2Data::FunctionRule::shift_all;
    o.representatives = {{0, 1}};
    return o;
}

}  // namespace calculus_detail

/// Builds the calculus of a generator function.  The jet and
/// finite-difference tangent spaces are recognised by span and given their
/// standard bases; anything else keeps the computed basis p_1, ..., p_n.
inline CalculusSpec calculus_from_generator(const GeneratorFunction& c) {
    using namespace calculus_detail;
    CalculusSpec s;
    s.dims = c.dims();
    s.generator = c;
    s.computed = tangent_space_from_c(c);
    const std::size_t n = s.computed.dimension;

    auto adopt = [&](CalculusSpec::Kind kind, std::vector<GeneratorFunction> basis) {
        auto conv = coordinates_in(s.computed.basis, basis);
        if (!conv) return false;
        s.kind = kind;
        s.tangent = std::move(basis);
        s.conversion = std::move(*conv);
        return true;
    };

    if (s.dims == 1) {
        std::vector<GeneratorFunction> powers;
        for (unsigned m = 1; m <= n; ++m) powers.push_back(GeneratorFunction::term(1, GenKey::monomial(0, m)));
        if (adopt(CalculusSpec::Kind::jet, powers)) {
            s.order = static_cast<unsigned>(n);
            for (unsigned m = 1; m <= n; ++m) {
                s.tangent_labels.push_back(m == 1 ? "p" : "p^" + std::to_string(m));
                s.form_names.push_back(m == 1 ? "dx" : m == 2 ? "w" : "th" + std::to_string(m));
            }
            if (n == 2) s.omega2 = two_jet_omega2();
            return s;
        }
        if (n == 1 && adopt(CalculusSpec::Kind::finite_difference_1d, {difference_element(1, 0, scalar::lam())})) {
            s.order = 1;
            s.tangent_labels = {"p_1"};
            s.form_names = {"dx"};
            s.omega2 = fd1_omega2();
            return s;
        }
    } else if (n == 2 && adopt(CalculusSpec::Kind::finite_difference_2d,
                               {difference_element(2, 0, scalar::lam()), difference_element(2, 1, scalar::mu())})) {
        s.order = 1;
        s.tangent_labels = {"p_1", "q_1"};
        s.form_names = {"dx", "dy"};
        s.omega2 = fd2_omega2();
        return s;
    }

    s.kind = CalculusSpec::Kind::generic;
    s.tangent = s.computed.basis;
    for (std::size_t i = 0; i < n; ++i) {
        s.tangent_labels.push_back("p_" + std::to_string(i + 1));
        s.form_names.push_back("th" + std::to_string(i + 1));
        std::vector<Scalar> unit(n);
        unit[i] = Scalar(1);
        s.conversion.push_back(unit);
    }
    return s;
}

/// The n-jet calculus of c(p) = p^(n+1)/(n+1)!.
inline CalculusSpec jet_calculus(unsigned n) {
    if (n == 0) throw std::invalid_argument("jet order must be positive");
    return calculus_from_generator(
        GeneratorFunction::term(1, GenKey::monomial(0, n + 1), calculus_detail::factorial(n + 1).inverse()));
}

/// The finite-difference calculus: c = lam^-2 exp(lam p) (+ mu^-2 exp(mu q)).
inline CalculusSpec finite_difference_calculus(unsigned dims) {
    GeneratorFunction c(dims);
    c.add(GenKey::exp(0, scalar::lam()), scalar::lam().pow(-2));
    if (dims == 2) c.add(GenKey::exp(1, scalar::mu()), scalar::mu().pow(-2));
    return calculus_from_generator(c);
}

/// "jet:<n>", "fd:1" or "fd:2".
inline CalculusSpec calculus_by_name(const std::string& name) {
    if (name == "fd:1") return finite_difference_calculus(1);
    if (name == "fd:2") return finite_difference_calculus(2);
    if (name.rfind("jet:", 0) == 0) {
        const std::string digits = name.substr(4);
        if (!digits.empty() && digits.size() < 3 && digits.find_first_not_of("0123456789") == std::string::npos)
            return jet_calculus(static_cast<unsigned>(std::stoul(digits)));
    }
    throw std::invalid_argument("unknown calculus '" + name + "' (expected jet:<n>, fd:1 or fd:2)");
}

/// The braided vector field of basis element m applied to f.
inline CoordFunction partial(const CalculusSpec& s, std::size_t m, const CoordFunction& f) {
    if (m >= s.dimension()) throw std::out_of_range("tangent basis index out of range");
    return apply(s.tangent[m], f);
}

/// Psi^-1(f (x) e_m) = sum_j e_j (x) g_j, returned as j -> g_j.  Obtained
/// from e(D1 + D2) - e(D1): monomials give binomial terms, exponentials give
/// (exp(r p) - 1) (x) f(x + r); the right legs are then written in the basis.
inline std::map<int, CoordFunction> braiding_inverse(const CalculusSpec& s, const CoordFunction& f, std::size_t m) {
    using namespace calculus_detail;
    if (m >= s.dimension()) throw std::out_of_range("tangent basis index out of range");
    std::map<GenKey, CoordFunction> legs;
    auto put = [&](const GenKey& k, const CoordFunction& g) {
        if (g.is_zero()) return;
        auto it = legs.find(k);
        if (it == legs.end()) legs.emplace(k, g);
        else it->second += g;
    };
    for (const auto& [k, a] : s.tangent[m].terms()) {
        if (k.is_constant()) continue;
        coord::Axis axis = k.axis == 0 ? coord::Axis::x : coord::Axis::y;
        if (k.kind == GenKey::power) {
            for (unsigned j = 1; j <= k.degree; ++j)
                put(GenKey::monomial(k.axis, j), a * binomial(k.degree, j) * coord::derivative(f, axis, k.degree - j));
        } else {
            CoordFunction moved = a * coord::shift(f, axis, k.rate);
            put(k, moved);
            put(GenKey::constant(), -moved);
        }
    }
    std::set<GenKey> keyset;
    for (const auto& [k, g] : legs) keyset.insert(k);
    for (const auto& e : s.tangent)
        for (const auto& [k, c] : e.terms()) keyset.insert(k);
    std::vector<GenKey> keys(keyset.begin(), keyset.end());
    const std::size_t n = s.dimension();
    std::vector<std::vector<Scalar>> a(keys.size(), std::vector<Scalar>(n));
    std::vector<Scalar> rhs(keys.size());
    for (std::size_t r = 0; r < keys.size(); ++r) {
        if (auto it = legs.find(keys[r]); it != legs.end()) rhs[r] = it->second;
        for (std::size_t j = 0; j < n; ++j) {
            auto it = s.tangent[j].terms().find(keys[r]);
            if (it != s.tangent[j].terms().end()) a[r][j] = it->second;
        }
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) throw std::logic_error("braiding leaves the tangent space");
    std::map<int, CoordFunction> out;
    for (std::size_t j = 0; j < n; ++j)
        if (!(*sol)[j].is_zero()) out.emplace(static_cast<int>(j), (*sol)[j]);
    return out;
}

/// Columns of the commutation rule: f * theta_j = sum_k theta_k * A[j][k].
using LeftMultRule = std::vector<std::map<int, CoordFunction>>;

/// The rule read off the braiding: A[j][k] = (Psi^-1(f (x) e_k))_j.
inline LeftMultRule left_mult_rule_from_braiding(const CalculusSpec& s, const CoordFunction& f) {
    LeftMultRule rule(s.dimension());
    for (std::size_t k = 0; k < s.dimension(); ++k)
        for (const auto& [j, g] : braiding_inverse(s, f, k)) rule[j].emplace(static_cast<int>(k), g);
    return rule;
}

/// The rule solved from the Leibniz rule d(fg) = (df)g + f dg on test
/// monomials g: R_ki = d_k(f g_i) - (d_k f) g_i = sum_j A_kj d_j(g_i).
inline LeftMultRule left_mult_rule_from_leibniz(const CalculusSpec& s, const CoordFunction& f) {
    const std::size_t n = s.dimension();
    std::vector<CoordFunction> tests;
    LinearSpan<int> columns;
    for (unsigned total = 1; tests.size() < n; ++total) {
        if (total > 4 * n + 4) throw std::logic_error("no invertible test system for the Leibniz rule");
        for (unsigned a = 0; a <= total && tests.size() < n; ++a) {
            unsigned b = total - a;
            if (b > 0 && s.dims == 1) continue;
            CoordFunction g = scalar::x().pow(a) * scalar::y().pow(b);
            SparseVector<int> col;
            for (std::size_t j = 0; j < n; ++j) {
                CoordFunction v = partial(s, j, g);
                if (!v.is_zero()) col.emplace(static_cast<int>(j), v);
            }
            if (columns.insert(col)) tests.push_back(g);
        }
    }
    LeftMultRule rule(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
        std::vector<Scalar> r(n);
        CoordFunction dkf = partial(s, k, f);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = partial(s, k, f * tests[i]) - dkf * tests[i];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = partial(s, j, tests[i]);
        }
        auto sol = solve_linear(std::move(m), std::move(r));
        if (!sol) throw std::logic_error("inconsistent Leibniz system");
        for (std::size_t j = 0; j < n; ++j)
            if (!(*sol)[j].is_zero()) rule[j].emplace(static_cast<int>(k), (*sol)[j]);
    }
    return rule;
}

/// The rule used by left_mult: closed forms for the named calculi,
/// f * theta_m = sum_k C(m+k, m) theta_(m+k) f^(k) for jets and
/// f * dx = dx * f(x + lam), f * dy = dy * f(y + mu) for finite differences.
inline LeftMultRule left_mult_rule(const CalculusSpec& s, const CoordFunction& f) {
    using namespace calculus_detail;
    LeftMultRule rule(s.dimension());
    switch (s.kind) {
        case CalculusSpec::Kind::jet:
            for (unsigned m = 1; m <= s.order; ++m) {
                CoordFunction fk = f;
                for (unsigned k = 0; m + k <= s.order && !fk.is_zero(); ++k) {
                    rule[m - 1].emplace(static_cast<int>(m + k - 1), binomial(m + k, m) * fk);
                    fk = coord::derivative(fk, coord::Axis::x);
                }
            }
            return rule;
        case CalculusSpec::Kind::finite_difference_1d:
            rule[0].emplace(0, coord::shift_x(f));
            return rule;
        case CalculusSpec::Kind::finite_difference_2d:
            rule[0].emplace(0, coord::shift_x(f));
            rule[1].emplace(1, coord::shift_y(f));
            return rule;
        default: return left_mult_rule_from_braiding(s, f);
    }
}

/// d f = sum_m theta_m * partial_m f.
inline GradedForm d0(const CalculusSpec& s, const CoordFunction& f) {
    GradedForm out(1);
    for (std::size_t m = 0; m < s.dimension(); ++m) out.add(static_cast<int>(m), partial(s, m, f));
    return out;
}

inline CoordFunction shift_all(const CalculusSpec& s, const CoordFunction& f) {
    CoordFunction g = coord::shift_x(f);
    return s.dims == 2 ? coord::shift_y(g) : g;
}

/// f * phi, normalised.
inline GradedForm left_mult(const CalculusSpec& s, const CoordFunction& f, const GradedForm& phi) {
    GradedForm out(phi.degree);
    if (phi.degree == 0) return phi.times(f);
    if (phi.degree == 1) {
        LeftMultRule rule = left_mult_rule(s, f);
        for (const auto& [j, c] : phi.coeffs)
            for (const auto& [k, a] : rule[j]) out.add(k, a * c);
        return out;
    }
    if (phi.degree == 2) {
        const Omega2Data& o = s.require_omega2();
        if (phi.is_zero()) return out;
        CoordFunction image = o.rule == Omega2Data::FunctionRule::commute ? f : shift_all(s, f);
        return phi.times(image);
    }
    throw std::invalid_argument("forms of degree above 2 are not supported");
}

/// theta_i ^ (theta_k * c) through the constant wedge table.
inline void add_basis_wedge(const Omega2Data& o, int i, int k, const CoordFunction& c, GradedForm& out) {
    auto it = o.wedge.find({i, k});
    if (it == o.wedge.end()) return;
    for (const auto& [b, w] : it->second) out.add(b, w * c);
}

/// Product of forms.  A function on the left acts through left_mult; a
/// function on the right multiplies the coefficients.
inline GradedForm wedge(const CalculusSpec& s, const GradedForm& phi, const GradedForm& chi) {
    if (phi.degree == 0) return left_mult(s, phi.coeff(0), chi);
    if (chi.degree == 0) return phi.times(chi.coeff(0));
    if (phi.degree + chi.degree > 2) throw std::invalid_argument("forms of degree above 2 are not supported");
    const Omega2Data& o = s.require_omega2();
    GradedForm out(2);
    for (const auto& [i, a] : phi.coeffs) {
        GradedForm moved = left_mult(s, a, chi);
        for (const auto& [k, c] : moved.coeffs) add_basis_wedge(o, i, k, c, out);
    }
    return out;
}

/// d(theta_m * f) = (d theta_m) * f - theta_m ^ d f.
inline GradedForm d1(const CalculusSpec& s, const GradedForm& phi) {
    if (phi.degree == 0) return d0(s, phi.coeff(0));
    if (phi.degree != 1) throw std::invalid_argument("d is implemented on forms of degree 0 and 1");
    const Omega2Data& o = s.require_omega2();
    GradedForm out(2);
    for (const auto& [m, f] : phi.coeffs) {
        out += o.d_theta[m].times(f);
        GradedForm df = d0(s, f);
        for (const auto& [k, c] : df.coeffs) add_basis_wedge(o, m, k, -c, out);
    }
    return out;
}

/// f * Omega_b recomputed as (f * theta_i) ^ theta_j from the degree-one
/// rule, for comparison with the stored degree-two rule.
inline GradedForm left_mult_two_form_derived(const CalculusSpec& s, const CoordFunction& f, int b) {
    const Omega2Data& o = s.require_omega2();
    auto [i, j] = o.representatives.at(static_cast<std::size_t>(b));
    return wedge(s, left_mult(s, f, GradedForm::basis(1, i)), GradedForm::basis(1, j));
}

/// Name of a basis element of the given degree.
inline std::string basis_name(const CalculusSpec& s, int degree, int b) {
    if (degree == 1) return s.form_names.at(static_cast<std::size_t>(b));
    if (degree == 2) return s.require_omega2().names.at(static_cast<std::size_t>(b));
    return "";
}

/// Coefficient text: bare when it is a single token, parenthesised otherwise.
inline std::string coefficient_text(const CoordFunction& c) {
    std::string t = to_string(c);
    return t.find_first_of(" +-*/") == std::string::npos ? t : "(" + t + ")";
}

/// Right-coefficient normal form, e.g. "dx*(2*x) + w*2" or "-dx^w".
inline std::string render(const CalculusSpec& s, const GradedForm& phi) {
    if (phi.degree == 0) return to_string(phi.coeff(0));
    if (phi.is_zero()) return "0";
    std::string out;
    for (const auto& [b, c] : phi.coeffs) {
        bool negative = c.numerator().terms().size() == 1 && c.numerator().leading().coeff < 0;
        const CoordFunction shown = negative ? -c : c;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += basis_name(s, phi.degree, b);
        if (!shown.is_one()) out += "*" + coefficient_text(shown);
    }
    return out;
}

}  // namespace bicalc

#endif
