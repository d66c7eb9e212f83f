#ifndef BICALC_GENERATOR_HPP
#define BICALC_GENERATOR_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bicalc/coordinates.hpp"
#include "bicalc/linear_span.hpp"

namespace bicalc {

/// Coordinate of a generator function: p_axis^power, or exp(rate * p_axis).
/// The constant function is the polynomial key of power 0 on axis 0.
struct GenKey {
    enum Kind : std::uint8_t { power = 0, exponential = 1 };

    int axis = 0;
    Kind kind = power;
    unsigned degree = 0;
    Scalar rate;

    static GenKey constant() { return {}; }
    static GenKey monomial(int axis, unsigned k) { return k == 0 ? constant() : GenKey{axis, power, k, {}}; }
    static GenKey exp(int axis, Scalar r) { return {axis, exponential, 0, std::move(r)}; }

    bool is_constant() const { return kind == power && degree == 0; }

    friend bool operator<(const GenKey& a, const GenKey& b) {
        if (std::tie(a.axis, a.kind, a.degree) != std::tie(b.axis, b.kind, b.degree))
            return std::tie(a.axis, a.kind, a.degree) < std::tie(b.axis, b.kind, b.degree);
        return a.rate < b.rate;
    }
    friend bool operator==(const GenKey& a, const GenKey& b) { return !(a < b) && !(b < a); }
};

/// A formal function of the momenta p (and q in two dimensions): a finite
/// sum of monomials r*p^k and exponentials r*exp(s*p) per variable.
class GeneratorFunction {
public:
    GeneratorFunction() = default;
    explicit GeneratorFunction(unsigned dims) : dims_(dims) {
        if (dims < 1 || dims > 2) throw std::invalid_argument("generator functions have 1 or 2 variables");
    }

    static GeneratorFunction term(unsigned dims, const GenKey& key, const Scalar& c = Scalar(1)) {
        GeneratorFunction g(dims);
        g.add(key, c);
        return g;
    }

    unsigned dims() const { return dims_; }
    const SparseVector<GenKey>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const GenKey& key, const Scalar& c) {
        if (key.axis < 0 || static_cast<unsigned>(key.axis) >= dims_) throw std::invalid_argument("axis out of range");
        if (key.kind == GenKey::exponential && key.rate.is_zero())
            throw std::invalid_argument("exponential rate must be nonzero");
        axpy(terms_, Scalar(1), SparseVector<GenKey>{{key, c}});
    }

    GeneratorFunction operator+(const GeneratorFunction& o) const {
        GeneratorFunction r = *this;
        r.dims_ = std::max(dims_, o.dims_);
        axpy(r.terms_, Scalar(1), o.terms_);
        return r;
    }
    GeneratorFunction operator-(const GeneratorFunction& o) const { return *this + o * Scalar(-1); }
    GeneratorFunction operator*(const Scalar& s) const {
        GeneratorFunction r(dims_);
        if (!s.is_zero()) axpy(r.terms_, s, terms_);
        return r;
    }
    friend bool operator==(const GeneratorFunction& a, const GeneratorFunction& b) { return a.terms_ == b.terms_; }

    GeneratorFunction derivative(int axis) const {
        GeneratorFunction r(dims_);
        for (const auto& [k, c] : terms_) {
            if (k.axis != axis || k.is_constant()) continue;
            if (k.kind == GenKey::power)
                r.add(GenKey::monomial(axis, k.degree - 1), c * Scalar(static_cast<long>(k.degree)));
            else
                r.add(k, c * k.rate);
        }
        return r;
    }

    Scalar value_at_zero() const {
        Scalar v;
        for (const auto& [k, c] : terms_)
            if (k.is_constant() || k.kind == GenKey::exponential) v += c;
        return v;
    }

    /// Requirements for a usable generator: some nonconstant term.
    void validate() const {
        for (const auto& [k, c] : terms_)
            if (!k.is_constant()) return;
        throw std::invalid_argument("generator function must have a nonconstant term");
    }

private:
    unsigned dims_ = 1;
    SparseVector<GenKey> terms_;
};

inline std::string momentum_name(unsigned dims, int axis) { return dims == 1 || axis == 0 ? "p" : "q"; }

inline std::string to_string(const GeneratorFunction& g) {
    if (g.is_zero()) return "0";
    std::string s;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        std::string base;
        std::string name = momentum_name(g.dims(), k.axis);
        if (k.kind == GenKey::exponential) {
            std::string r = to_string(k.rate);
            bool simple = r.find_first_of(" +-/") == std::string::npos;
            base = "exp(" + (simple ? r : "(" + r + ")") + "*" + name + ")";
        } else if (k.degree > 0) {
            base = k.degree == 1 ? name : name + "^" + std::to_string(k.degree);
        }
        bool negative = !s.empty() && c.numerator().leading().coeff < 0;
        const Scalar shown = negative ? -c : c;
        std::string coeff = to_string(shown);
        bool coeff_atomic = coeff.find_first_of(" +-") == std::string::npos;
        std::string piece;
        if (base.empty()) piece = coeff_atomic ? coeff : "(" + coeff + ")";
        else if (shown.is_one()) piece = base;
        else piece = (coeff_atomic ? coeff : "(" + coeff + ")") + "*" + base;
        s += s.empty() ? piece : (negative ? " - " : " + ") + piece;
    }
    return s;
}

/// Action of a generator function as an operator on coordinate functions:
/// p -> d/dx (q -> d/dy), exp(r*p) -> shift x by r.
inline CoordFunction apply(const GeneratorFunction& g, const CoordFunction& f) {
    CoordFunction out;
    for (const auto& [k, c] : g.terms()) {
        coord::Axis axis = k.axis == 0 ? coord::Axis::x : coord::Axis::y;
        CoordFunction image = k.kind == GenKey::exponential ? coord::shift(f, axis, k.rate)
                                                            : coord::derivative(f, axis, k.degree);
        out += c * image;
    }
    return out;
}

struct TangentBasis {
    std::vector<GeneratorFunction> basis;
    std::size_t dimension = 0;
};

/// Span of c^(n) - c^(n)(0) over all derivative orders n >= 1.  Derivatives
/// are generated breadth first; a derivative already in the span of the
/// earlier ones cannot contribute anything new, so it is not expanded.
inline TangentBasis tangent_space_from_c(const GeneratorFunction& c, std::size_t max_order = 64) {
    c.validate();
    LinearSpan<GenKey> raw, tangent;
    TangentBasis out;
    std::vector<GeneratorFunction> frontier{c};
    for (std::size_t order = 1; !frontier.empty(); ++order) {
        if (order > max_order) throw std::runtime_error("derivatives of the generator function do not stabilise");
        std::vector<GeneratorFunction> next;
        for (const auto& g : frontier) {
            for (int axis = 0; axis < static_cast<int>(c.dims()); ++axis) {
                GeneratorFunction h = g.derivative(axis);
                if (h.is_zero() || !raw.insert(h.terms())) continue;
                next.push_back(h);
                GeneratorFunction v = h - GeneratorFunction::term(c.dims(), GenKey::constant(), h.value_at_zero());
                if (!v.is_zero() && tangent.insert(v.terms())) out.basis.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    out.dimension = out.basis.size();
    return out;
}

/// Translation closure of a candidate tangent space: for every basis
/// element f and axis, f(p + t) - f(t) must lie in L, with t a fresh
/// parameter and exp(r*t) a fresh parameter per exponential rate.
inline bool translation_closed(const std::vector<GeneratorFunction>& basis) {
    LinearSpan<GenKey> span;
    for (const auto& e : basis) span.insert(e.terms());
    for (const auto& e : basis) {
        for (int axis = 0; axis < static_cast<int>(e.dims()); ++axis) {
            Scalar t = Scalar::variable(var::named(axis == 0 ? "t" : "u"));
            SparseVector<GenKey> shifted;
            for (const auto& [k, c] : e.terms()) {
                if (k.axis != axis || k.is_constant()) continue;
                if (k.kind == GenKey::power) {
                    // (p + t)^n - t^n = sum_{j >= 1} C(n, j) p^j t^(n - j)
                    Integer binom = 1;
                    for (unsigned j = 1; j <= k.degree; ++j) {
                        binom = binom * (k.degree - j + 1) / j;
                        axpy(shifted, c * Scalar(binom) * t.pow(k.degree - j),
                             SparseVector<GenKey>{{GenKey::monomial(axis, j), Scalar(1)}});
                    }
                } else {
                    Scalar e_t = Scalar::variable(var::named("exp(" + to_string(k.rate) + "*" + to_string(t) + ")"));
                    axpy(shifted, c * e_t, SparseVector<GenKey>{{k, Scalar(1)}, {GenKey::constant(), Scalar(-1)}});
                }
            }
            if (!span.contains(shifted)) return false;
        }
    }
    return true;
}

}  // namespace bicalc

#endif
