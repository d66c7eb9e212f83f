#ifndef BICALC_UQSU2_HPP
#define BICALC_UQSU2_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bicalc/linear_span.hpp"
#include "bicalc/rational_function.hpp"
#include "bicalc/report.hpp"

namespace bicalc::uq {

/// Ordered monomial Xp^plus K^k Xm^minus, with K = q^(H/2).
struct PBWMonomial {
    std::uint32_t plus = 0;
    std::int32_t k = 0;
    std::uint32_t minus = 0;

    std::uint32_t degree() const {
        return plus + minus + static_cast<std::uint32_t>(k < 0 ? -k : k);
    }

    friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
        return std::make_tuple(a.plus + a.minus, a.plus, a.minus, a.k) <
               std::make_tuple(b.plus + b.minus, b.plus, b.minus, b.k);
    }
    friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
        return a.plus == b.plus && a.k == b.k && a.minus == b.minus;
    }
};

using Combination = std::vector<std::pair<PBWMonomial, Scalar>>;

namespace detail {

inline const Scalar& q_power(int n) {
    static std::mutex m;
    static std::map<int, Scalar> cache;
    std::lock_guard lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, scalar::q_pow(n)).first->second;
}

inline const Scalar& inv_q_minus_qinv() {
    static const Scalar v = (scalar::q() - scalar::q().inverse()).inverse();
    return v;
}

inline void accumulate(std::map<PBWMonomial, Scalar>& acc, const PBWMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) acc.emplace(m, c);
    else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

/// Product of two PBW monomials, rewritten with
///   K Xp = q Xp K,  Xm K = q K Xm,
///   Xm^c Xp = Xp Xm^c - sum_{i<c} (q^{2i} K^2 - q^{-2i} K^{-2}) / (q - q^{-1}) Xm^{c-1}.
inline Combination multiply_monomials(const PBWMonomial& left, const PBWMonomial& right) {
    std::map<PBWMonomial, Scalar> cur{{left, Scalar(1)}};
    for (std::uint32_t step = 0; step < right.plus; ++step) {
        std::map<PBWMonomial, Scalar> next;
        for (const auto& [m, c] : cur) {
            accumulate(next, {m.plus + 1, m.k, m.minus}, c * q_power(m.k));
            if (m.minus == 0) continue;
            Scalar up, down;
            for (std::uint32_t i = 0; i < m.minus; ++i) {
                up += q_power(static_cast<int>(2 * i));
                down += q_power(-static_cast<int>(2 * i));
            }
            Scalar f = c * inv_q_minus_qinv();
            accumulate(next, {m.plus, m.k + 2, m.minus - 1}, -(f * up));
            accumulate(next, {m.plus, m.k - 2, m.minus - 1}, f * down);
        }
        cur = std::move(next);
    }
    Combination out;
    out.reserve(cur.size());
    for (const auto& [m, c] : cur) {
        PBWMonomial r{m.plus, m.k + right.k, m.minus + right.minus};
        Scalar f = right.k == 0 ? c : c * q_power(static_cast<int>(m.minus) * right.k);
        out.emplace_back(r, f);
    }
    return out;
}

}  // namespace detail

/// Finitely supported element of U_q(su_2)^{(x) N} in the PBW basis of
/// each tensor leg.  N == 1 is the algebra itself.
template <std::size_t N>
class Tensor {
public:
    using Key = std::array<PBWMonomial, N>;
    using Terms = std::map<Key, Scalar>;

    Tensor() = default;
    explicit Tensor(const Scalar& c) {
        if (!c.is_zero()) terms_.emplace(Key{}, c);
    }
    static Tensor term(const Key& k, const Scalar& c = Scalar(1)) {
        Tensor t;
        if (!c.is_zero()) t.terms_.emplace(k, c);
        return t;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    Tensor operator-() const {
        Tensor r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k, c);
        return a;
    }
    friend Tensor operator-(Tensor a, const Tensor& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
        return a;
    }
    friend Tensor operator*(const Scalar& s, const Tensor& a) {
        if (s.is_zero()) return {};
        Tensor r = a;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }
    Tensor& operator+=(const Tensor& o) { return *this = *this + o; }
    Tensor& operator-=(const Tensor& o) { return *this = *this - o; }

    /// Legwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        Tensor r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Scalar c = ca * cb;
                std::vector<std::pair<Key, Scalar>> partial{{Key{}, c}};
                for (std::size_t leg = 0; leg < N; ++leg) {
                    auto prod = detail::multiply_monomials(ka[leg], kb[leg]);
                    std::vector<std::pair<Key, Scalar>> next;
                    next.reserve(partial.size() * prod.size());
                    for (const auto& [key, s] : partial)
                        for (const auto& [m, t] : prod) {
                            Key nk = key;
                            nk[leg] = m;
                            next.emplace_back(nk, s * t);
                        }
                    partial = std::move(next);
                }
                for (const auto& [key, s] : partial) r.add_term(key, s);
            }
        return r;
    }
    Tensor& operator*=(const Tensor& o) { return *this = *this * o; }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
    Terms terms_;
};

using UqElement = Tensor<1>;
using TensorElement = Tensor<2>;

inline UqElement monomial(std::uint32_t plus, std::int32_t k, std::uint32_t minus, const Scalar& c = Scalar(1)) {
    return UqElement::term({PBWMonomial{plus, k, minus}}, c);
}
inline UqElement one() { return monomial(0, 0, 0); }
inline UqElement K(std::int32_t power = 1) { return monomial(0, power, 0); }
inline UqElement Xp() { return monomial(1, 0, 0); }
inline UqElement Xm() { return monomial(0, 0, 1); }

inline UqElement multiply(const UqElement& u, const UqElement& v) { return u * v; }

template <std::size_t A, std::size_t B>
Tensor<A + B> tensor(const Tensor<A>& a, const Tensor<B>& b) {
    Tensor<A + B> r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            typename Tensor<A + B>::Key k;
            for (std::size_t i = 0; i < A; ++i) k[i] = ka[i];
            for (std::size_t i = 0; i < B; ++i) k[A + i] = kb[i];
            r.add_term(k, ca * cb);
        }
    return r;
}

inline Scalar counit(const PBWMonomial& m) { return m.plus == 0 && m.minus == 0 ? Scalar(1) : Scalar(); }

/// Algebra map to scalars: eps(K) = 1, eps(Xp) = eps(Xm) = 0.
inline Scalar counit(const UqElement& u) {
    Scalar s;
    for (const auto& [k, c] : u.terms())
        if (k[0].plus == 0 && k[0].minus == 0) s += c;
    return s;
}

namespace detail {

inline TensorElement coproduct_generator(int which) {
    // which: 0 = Xp, 1 = Xm
    PBWMonomial x = which == 0 ? PBWMonomial{1, 0, 0} : PBWMonomial{0, 0, 1};
    TensorElement t;
    t.add_term({x, PBWMonomial{0, 1, 0}}, Scalar(1));
    t.add_term({PBWMonomial{0, -1, 0}, x}, Scalar(1));
    return t;
}

struct PowerCache {
    std::mutex m;
    std::vector<TensorElement> plus{TensorElement(Scalar(1))}, minus{TensorElement(Scalar(1))};
};

inline TensorElement generator_power(int which, std::uint32_t e) {
    static PowerCache cache;
    std::lock_guard lock(cache.m);
    auto& table = which == 0 ? cache.plus : cache.minus;
    while (table.size() <= e) table.push_back(table.back() * coproduct_generator(which));
    return table[e];
}

}  // namespace detail

/// Delta(K) = K (x) K,  Delta(X+-) = X+- (x) K + K^{-1} (x) X+-,
/// extended multiplicatively over PBW monomials.
inline TensorElement coproduct(const PBWMonomial& m) {
    TensorElement grouplike = TensorElement::term({PBWMonomial{0, m.k, 0}, PBWMonomial{0, m.k, 0}});
    return detail::generator_power(0, m.plus) * grouplike * detail::generator_power(1, m.minus);
}

inline TensorElement coproduct(const UqElement& u) {
    TensorElement r;
    for (const auto& [k, c] : u.terms()) r += c * coproduct(k[0]);
    return r;
}

/// Applies the coproduct to one leg of a tensor, producing N + 1 legs.
template <std::size_t N>
Tensor<N + 1> coproduct_on_leg(const Tensor<N>& t, std::size_t leg) {
    Tensor<N + 1> r;
    for (const auto& [k, c] : t.terms()) {
        const TensorElement d = coproduct(k[leg]);
        for (const auto& [dk, dc] : d.terms()) {
            typename Tensor<N + 1>::Key nk;
            for (std::size_t i = 0, j = 0; i < N; ++i) {
                if (i == leg) {
                    nk[j++] = dk[0];
                    nk[j++] = dk[1];
                } else {
                    nk[j++] = k[i];
                }
            }
            r.add_term(nk, c * dc);
        }
    }
    return r;
}

/// Applies the counit to one leg, producing N - 1 legs.
template <std::size_t N>
Tensor<N - 1> counit_on_leg(const Tensor<N>& t, std::size_t leg) {
    Tensor<N - 1> r;
    for (const auto& [k, c] : t.terms()) {
        if (counit(k[leg]).is_zero()) continue;
        typename Tensor<N - 1>::Key nk;
        for (std::size_t i = 0, j = 0; i < N; ++i)
            if (i != leg) nk[j++] = k[i];
        r.add_term(nk, c);
    }
    return r;
}

/// m : A (x) A -> A.
inline UqElement multiply_legs(const TensorElement& t) {
    UqElement r;
    for (const auto& [k, c] : t.terms())
        r += c * (UqElement::term({k[0]}) * UqElement::term({k[1]}));
    return r;
}

/// Antipode images of the generators K, K^{-1}, Xp, Xm, obtained by
/// solving m(S (x) id)Delta(g) = eps(g) 1 rather than being written down.
struct AntipodeGenerators {
    UqElement k, k_inv, plus, minus;
};

namespace detail {

/// Grouplike g: S(g) g = eps(g) 1, so S(g) = eps(g) g^{-1}.
inline UqElement solve_grouplike(std::int32_t power) {
    TensorElement d = coproduct(PBWMonomial{0, power, 0});
    if (d.terms().size() != 1) throw std::logic_error("K^n is not grouplike");
    return counit(K(power)) * K(-power);
}

/// Skew-primitive g with Delta(g) = g (x) b + sum a_i (x) b_i, b grouplike:
/// S(g) = (eps(g) 1 - sum S(a_i) b_i) b^{-1}.
inline UqElement solve_skew_primitive(const PBWMonomial& g, const UqElement& s_k, const UqElement& s_kinv) {
    TensorElement d = coproduct(g);
    UqElement rest(counit(UqElement::term({g})));
    std::int32_t b_power = 0;
    bool found = false;
    for (const auto& [key, c] : d.terms()) {
        if (key[0] == g) {
            if (key[1].plus != 0 || key[1].minus != 0 || !c.is_one())
                throw std::logic_error("generator is not skew-primitive");
            b_power = key[1].k;
            found = true;
            continue;
        }
        const auto& a = key[0];
        if (a.plus != 0 || a.minus != 0 || (a.k != 1 && a.k != -1))
            throw std::logic_error("unsupported coproduct shape");
        const UqElement& s_a = a.k == 1 ? s_k : s_kinv;
        rest -= c * (s_a * UqElement::term({key[1]}));
    }
    if (!found) throw std::logic_error("generator does not appear in its coproduct");
    return rest * K(-b_power);
}

}  // namespace detail

inline const AntipodeGenerators& antipode_generators() {
    static const AntipodeGenerators table = [] {
        AntipodeGenerators t;
        t.k = detail::solve_grouplike(1);
        t.k_inv = detail::solve_grouplike(-1);
        t.plus = detail::solve_skew_primitive(PBWMonomial{1, 0, 0}, t.k, t.k_inv);
        t.minus = detail::solve_skew_primitive(PBWMonomial{0, 0, 1}, t.k, t.k_inv);
        return t;
    }();
    return table;
}

/// Anti-multiplicative extension: S(Xp^a K^b Xm^c) = S(Xm)^c S(K)^b S(Xp)^a.
inline UqElement antipode(const PBWMonomial& m) {
    const auto& s = antipode_generators();
    UqElement r = one();
    for (std::uint32_t i = 0; i < m.minus; ++i) r *= s.minus;
    const UqElement& sk = m.k >= 0 ? s.k : s.k_inv;
    for (std::int32_t i = 0; i < std::abs(m.k); ++i) r *= sk;
    for (std::uint32_t i = 0; i < m.plus; ++i) r *= s.plus;
    return r;
}

inline UqElement antipode(const UqElement& u) {
    UqElement r;
    for (const auto& [k, c] : u.terms()) r += c * antipode(k[0]);
    return r;
}

/// Quantum adjoint action Ad_x(y) = x_(1) y S(x_(2)).
inline UqElement adjoint(const UqElement& actor, const UqElement& target) {
    UqElement r;
    const TensorElement d = coproduct(actor);
    for (const auto& [k, c] : d.terms())
        r += c * (UqElement::term({k[0]}) * target * antipode(k[1]));
    return r;
}

/// 2x2 matrix over the scalar field.
struct Matrix2 {
    std::array<std::array<Scalar, 2>, 2> e{};

    static Matrix2 identity() {
        Matrix2 m;
        m.e[0][0] = Scalar(1);
        m.e[1][1] = Scalar(1);
        return m;
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        Matrix2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
        return r;
    }
    friend Matrix2 operator+(Matrix2 a, const Matrix2& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a.e[i][j] += b.e[i][j];
        return a;
    }
    friend Matrix2 operator*(const Scalar& s, Matrix2 a) {
        for (auto& row : a.e)
            for (auto& v : row) v *= s;
        return a;
    }
    friend bool operator==(const Matrix2& a, const Matrix2& b) { return a.e == b.e; }
};

/// Spin-1/2 representation: K -> diag(q^(1/2), q^(-1/2)), Xp -> E12, Xm -> E21.
inline Matrix2 fundamental_rep(const PBWMonomial& m) {
    Matrix2 r = Matrix2::identity();
    Matrix2 plus, minus, k;
    plus.e[0][1] = Scalar(1);
    minus.e[1][0] = Scalar(1);
    k.e[0][0] = scalar::q_half().pow(m.k);
    k.e[1][1] = scalar::q_half().pow(-m.k);
    for (std::uint32_t i = 0; i < m.plus; ++i) r = r * plus;
    r = r * k;
    for (std::uint32_t i = 0; i < m.minus; ++i) r = r * minus;
    return r;
}

inline Matrix2 fundamental_rep(const UqElement& u) {
    Matrix2 r;
    for (const auto& [k, c] : u.terms()) r = r + c * fundamental_rep(k[0]);
    return r;
}

/// Quadratic q-Casimir C = q^{-1} K^2 + q K^{-2} + (q - q^{-1})^2 Xp Xm.
inline UqElement casimir() {
    Scalar q = scalar::q(), qi = q.inverse();
    return monomial(0, 2, 0, qi) + monomial(0, -2, 0, q) + monomial(1, 0, 1, (q - qi).pow(2));
}

/// Normalized, counit-free Casimir c_q = (C - (q + q^{-1})) / ((q - q^{-2})(q - 1)).
inline UqElement casimir_normalized() {
    Scalar q = scalar::q(), qi = q.inverse();
    Scalar norm = ((q - q.pow(-2)) * (q - Scalar(1))).inverse();
    return norm * (casimir() - UqElement(q + qi));
}

inline bool is_central(const UqElement& c) {
    for (const auto& g : {K(1), K(-1), Xp(), Xm()})
        if (c * g != g * c) return false;
    return true;
}

class NotCentralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A quantum tangent space: generators (with display labels) and the rank
/// of their span.
struct TangentSpace {
    std::vector<std::string> labels;
    std::vector<UqElement> elements;
    std::size_t rank = 0;
};

inline SparseVector<PBWMonomial> coefficients_of(const UqElement& u) {
    SparseVector<PBWMonomial> v;
    for (const auto& [k, c] : u.terms()) v.emplace(k[0], c);
    return v;
}

inline LinearSpan<PBWMonomial> span_of(const std::vector<UqElement>& elements) {
    LinearSpan<PBWMonomial> s;
    for (const auto& e : elements) s.insert(coefficients_of(e));
    return s;
}

inline TangentSpace make_tangent_space(std::vector<std::string> labels, std::vector<UqElement> elements) {
    TangentSpace t{std::move(labels), std::move(elements), 0};
    t.rank = span_of(t.elements).rank();
    return t;
}

/// Casimir construction: x_a = <a, c_(1)> c_(2) - <a, c> for
/// a in {t11 - 1, t12, t21, t22 - 1}, pairing through the fundamental
/// representation (<t^i_j, u> = rho(u)_ij) and the counit (<1, u> = eps(u)).
inline TangentSpace tangent_space_from_central(const UqElement& c) {
    if (!is_central(c)) throw NotCentralError("tangent_space_from_central: element is not central");
    const TensorElement dc = coproduct(c);
    const Matrix2 rho_c = fundamental_rep(c);
    const Scalar eps_c = counit(c);
    std::vector<UqElement> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto pairing = [&](const Matrix2& rho, const Scalar& eps) {
                return i == j ? rho.e[i][j] - eps : rho.e[i][j];
            };
            UqElement x;
            for (const auto& [k, coeff] : dc.terms()) {
                Scalar p = pairing(fundamental_rep(k[0]), counit(k[0]));
                if (!p.is_zero()) x += (coeff * p) * UqElement::term({k[1]});
            }
            x -= UqElement(pairing(rho_c, eps_c));
            out.push_back(std::move(x));
        }
    return make_tangent_space({"x_{a-1}", "x_b", "x_c", "x_{d-1}"}, std::move(out));
}

/// Outcome of the three subrepresentation conditions on a candidate L.
struct TangentSpaceCheck {
    bool counit_zero = true;
    bool adjoint_stable = true;
    bool coproduct_condition = true;
    std::vector<std::string> failures;

    bool passed() const { return counit_zero && adjoint_stable && coproduct_condition; }
};

/// L in ker eps, Ad_g(L) in L for g in {K, K^{-1}, Xp, Xm}, and
/// (Delta - id (x) 1)(L) in A (x) L.  The last is tested by grouping the
/// tensor by left-leg PBW monomial (these are linearly independent) and
/// asking each right-leg combination to lie in span L.
inline TangentSpaceCheck check_tangent_space(const TangentSpace& L) {
    TangentSpaceCheck out;
    const auto span = span_of(L.elements);
    const std::vector<std::pair<std::string, UqElement>> gens{
        {"K", K(1)}, {"K^-1", K(-1)}, {"Xp", Xp()}, {"Xm", Xm()}};
    for (std::size_t i = 0; i < L.elements.size(); ++i) {
        const auto& x = L.elements[i];
        const std::string& name = i < L.labels.size() ? L.labels[i] : "#" + std::to_string(i);
        if (!counit(x).is_zero()) {
            out.counit_zero = false;
            out.failures.push_back("counit(" + name + ") != 0");
        }
        for (const auto& [gname, g] : gens)
            if (!span.contains(coefficients_of(adjoint(g, x)))) {
                out.adjoint_stable = false;
                out.failures.push_back("Ad_" + gname + "(" + name + ") not in L");
            }
        TensorElement t = coproduct(x) - tensor(x, one());
        std::map<PBWMonomial, UqElement> by_left;
        for (const auto& [k, c] : t.terms()) by_left[k[0]].add_term({k[1]}, c);
        for (const auto& [left, right] : by_left)
            if (!span.contains(coefficients_of(right))) {
                out.coproduct_condition = false;
                out.failures.push_back("(Delta - id(x)1)(" + name + ") has a right leg outside L");
                break;
            }
    }
    return out;
}

/// Braided-Lie basis h, x, y, gamma expressed inside U_q(su_2).
struct BraidedLieBasis {
    UqElement h, x, y, gamma;
};

inline BraidedLieBasis braided_lie_basis() {
    Scalar q = scalar::q(), qi = q.inverse();
    Scalar pre = qi / (q * q - Scalar(1));
    Scalar q_m32 = scalar::q_half().pow(-3);
    UqElement c = casimir();
    return {pre * (c - (q + qi) * K(2)), q_m32 * (K(1) * Xm()), q_m32 * (Xp() * K(1)),
            pre * (c - UqElement(q + qi))};
}


/// "Xp^a*K^b*Xm^c" with unit factors dropped; "1" for the empty monomial.
inline std::string to_string(const PBWMonomial& m) {
    std::string s;
    auto put = [&](const std::string& f) { s += s.empty() ? f : "*" + f; };
    if (m.plus) put(m.plus == 1 ? "Xp" : "Xp^" + std::to_string(m.plus));
    if (m.k) put(m.k == 1 ? "K" : "K^" + std::to_string(m.k));
    if (m.minus) put(m.minus == 1 ? "Xm" : "Xm^" + std::to_string(m.minus));
    return s.empty() ? "1" : s;
}

namespace detail {

inline bool single_negative(const Scalar& c) {
    return c.numerator().terms().size() == 1 && c.numerator().leading().coeff < 0;
}

inline std::string coefficient_times(const Scalar& c, const std::string& mono) {
    if (mono == "1") return to_string(c);
    if (c.is_one()) return mono;
    std::string t = to_string(c);
    bool atomic = t.find_first_of(" +-*/") == std::string::npos;
    return (atomic ? t : "(" + t + ")") + "*" + mono;
}

}  // namespace detail

/// PBW normal form, e.g. "(q^2 + 1)*K^2 - q*Xp*Xm".
inline std::string to_string(const UqElement& u) {
    if (u.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : u.terms()) {
        bool neg = detail::single_negative(c);
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        s += detail::coefficient_times(neg ? -c : c, to_string(k[0]));
    }
    return s;
}

/// Sum of "(left) ⊗ (right)" pairs, the coefficient carried by the left leg.
inline std::string to_string(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : t.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + detail::coefficient_times(c, to_string(k[0])) + ") ⊗ (" + to_string(k[1]) + ")";
    }
    return s;
}

inline std::string to_string(const Matrix2& m) {
    return "[[" + to_string(m.e[0][0]) + ", " + to_string(m.e[0][1]) + "], [" + to_string(m.e[1][0]) + ", " +
           to_string(m.e[1][1]) + "]]";
}

/// Brackets [u, v] = Ad_u(v) on {h, x, y, gamma}, compared with the
/// expected table of the braided Lie algebra.
inline Report braided_lie_table() {
    Report r;
    r.suite = "bralie";
    r.headers = {"bracket", "computed", "expected"};
    const BraidedLieBasis b = braided_lie_basis();
    const Scalar qm2 = scalar::q_pow(-2), qm4 = scalar::q_pow(-4), one(1);
    struct Row {
        const char* name;
        const UqElement* u;
        const UqElement* v;
        UqElement expected;
    };
    const std::vector<Row> rows{
        {"[h,x]", &b.h, &b.x, (qm2 + one) * b.x},
        {"[x,h]", &b.x, &b.h, (-qm2 * (qm2 + one)) * b.x},
        {"[h,y]", &b.h, &b.y, (-(qm2 + one) * qm2) * b.y},
        {"[y,h]", &b.y, &b.h, (qm2 + one) * b.y},
        {"[x,y]", &b.x, &b.y, qm2 * b.h},
        {"[y,x]", &b.y, &b.x, -qm2 * b.h},
        {"[h,h]", &b.h, &b.h, (one - qm4) * b.h},
        {"[gamma,h]", &b.gamma, &b.h, (one - qm4) * b.h},
        {"[gamma,x]", &b.gamma, &b.x, (one - qm4) * b.x},
        {"[gamma,y]", &b.gamma, &b.y, (one - qm4) * b.y},
    };
    for (const auto& row : rows) {
        UqElement got = adjoint(*row.u, *row.v);
        r.add(row.name, to_string(got), to_string(row.expected), got == row.expected);
    }
    return r;
}

/// Compares span{x_{a-1}, x_b, x_c, x_{d-1}} with span{h, x, y, gamma} (and 1):
/// every element of each family gets explicit coordinates in the other.
inline Report change_of_basis_check() {
    Report r;
    r.suite = "change-of-basis";
    r.headers = {"element", "coordinates", "in span"};
    const TangentSpace L = tangent_space_from_central(casimir_normalized());
    const BraidedLieBasis b = braided_lie_basis();
    const std::vector<UqElement> lie{b.h, b.x, b.y, b.gamma, one()};
    const std::vector<std::string> lie_names{"h", "x", "y", "gamma", "1"};
    auto describe = [](const std::vector<Scalar>& c, const std::vector<std::string>& names) {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string t = to_string(c[i]);
            s += (t.find_first_of(" +-") == std::string::npos ? t : "(" + t + ")") + "*" + names[i];
        }
        return s.empty() ? std::string("0") : s;
    };
    const auto lie_span = span_of(lie);
    for (std::size_t i = 0; i < L.elements.size(); ++i) {
        auto c = lie_span.coordinates(coefficients_of(L.elements[i]));
        r.add(L.labels[i] + " in span{h,x,y,gamma,1}", c ? describe(*c, lie_names) : "none", c ? "yes" : "no",
              c.has_value());
    }
    std::vector<UqElement> xs = L.elements;
    xs.push_back(one());
    std::vector<std::string> x_names = L.labels;
    x_names.push_back("1");
    const auto x_span = span_of(xs);
    for (std::size_t i = 0; i + 1 < lie.size(); ++i) {
        auto c = x_span.coordinates(coefficients_of(lie[i]));
        r.add(lie_names[i] + " in span{x_.,1}", c ? describe(*c, x_names) : "none", c ? "yes" : "no", c.has_value());
    }
    return r;
}

/// Numeric probe of q -> 1: the angle between the coefficient directions of
/// x_{a-1} and x_{d-1} at q = 1 + 10^-k.  Values are computed exactly at the
/// rational point and only then converted to double.
struct QLimitDiagnostic {
    std::vector<int> k;
    std::vector<double> angle;
    bool decreasing = true;
};

inline QLimitDiagnostic q_limit_diagnostic(int k_min = 2, int k_max = 6) {
    const TangentSpace L = tangent_space_from_central(casimir_normalized());
    const UqElement& a = L.elements[0];
    const UqElement& d = L.elements[3];
    std::vector<PBWMonomial> support;
    for (const auto* u : {&a, &d})
        for (const auto& [key, c] : u->terms()) support.push_back(key[0]);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    QLimitDiagnostic out;
    for (int k = k_min; k <= k_max; ++k) {
        Integer ten_k = 1;
        for (int i = 0; i < k; ++i) ten_k *= 10;
        Rational qv = Rational(ten_k + 1, ten_k);
        auto direction = [&](const UqElement& u) {
            std::vector<double> v;
            double norm = 0;
            for (const auto& m : support) {
                double x = scalar::evaluate_at_q(u.coefficient({m}), qv).get_d();
                v.push_back(x);
                norm += x * x;
            }
            for (auto& x : v) x /= std::sqrt(norm);
            return v;
        };
        std::vector<double> u = direction(a), w = direction(d);
        double dot = 0;
        for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * w[i];
        double diff = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            double t = u[i] - (dot < 0 ? -w[i] : w[i]);
            diff += t * t;
        }
        // Chord length to angle; stays accurate for tiny angles.
        double angle = 2 * std::asin(std::min(1.0, std::sqrt(diff) / 2));
        if (!out.angle.empty() && !(angle < out.angle.back())) out.decreasing = false;
        out.k.push_back(k);
        out.angle.push_back(angle);
    }
    return out;
}

}  // namespace bicalc::uq

#endif
