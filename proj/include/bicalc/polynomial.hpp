#ifndef BICALC_POLYNOMIAL_HPP
#define BICALC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicalc/variables.hpp"

namespace bicalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Power product of indeterminates, stored as (variable, exponent) pairs
/// sorted by variable id with strictly positive exponents.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;

    static Monomial power(VarId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) {
            m.factors_.emplace_back(v, e);
            m.degree_ = e;
        }
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }

    std::uint32_t degree(VarId v) const {
        for (const auto& [w, e] : factors_) {
            if (w == v) return e;
            if (w > v) break;
        }
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first) r.factors_.push_back(*i++);
            else if (j->first < i->first) r.factors_.push_back(*j++);
            else {
                r.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    bool divides(const Monomial& other) const {
        auto j = other.factors_.begin();
        for (const auto& [v, e] : factors_) {
            while (j != other.factors_.end() && j->first < v) ++j;
            if (j == other.factors_.end() || j->first != v || j->second < e) return false;
        }
        return true;
    }

    /// Quotient other / *this; requires divides(other).
    Monomial cofactor_in(const Monomial& other) const {
        Monomial r;
        auto i = factors_.begin();
        for (const auto& [v, e] : other.factors_) {
            std::uint32_t sub = 0;
            if (i != factors_.end() && i->first == v) sub = (i++)->second;
            if (e > sub) r.factors_.emplace_back(v, e - sub);
        }
        r.degree_ = other.degree_ - degree_;
        return r;
    }

    Monomial without(VarId v) const {
        Monomial r;
        for (const auto& f : factors_)
            if (f.first != v) {
                r.factors_.push_back(f);
                r.degree_ += f.second;
            }
        return r;
    }

    /// Graded lexicographic comparison (smaller variable ids dominate).
    friend int compare(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
        auto i = a.factors_.begin(), j = b.factors_.begin();
        for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first ? 1 : -1;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
        }
        if (i != a.factors_.end()) return 1;
        if (j != b.factors_.end()) return -1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

struct Term {
    Monomial mono;
    Integer coeff;
};

/// Sparse multivariate polynomial with integer coefficients.  Terms are
/// kept sorted in decreasing graded-lex order with no zero coefficients,
/// so structural equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(Integer(c)) {}
    Polynomial(const Integer& c) {
        if (c != 0) terms_.push_back({Monomial{}, c});
    }

    static Polynomial variable(VarId v) { return monomial(Monomial::power(v), 1); }

    static Polynomial monomial(Monomial m, Integer c) {
        Polynomial p;
        if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Sorts and merges arbitrary terms.
    static Polynomial from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(),
                  [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
        Polynomial p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coeff += t.coeff;
            else {
                if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Integer constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_[0].coeff;
    }
    const Term& leading() const { return terms_.front(); }
    int sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
    std::uint32_t degree(VarId v) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
        return d;
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        for (const auto& t : terms_)
            for (const auto& f : t.mono.factors()) vs.push_back(f.first);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    bool contains(VarId v) const {
        for (const auto& t : terms_)
            if (t.mono.degree(v) > 0) return true;
        return false;
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& t : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b * a.terms_[0].coeff;
        if (b.is_constant()) return a * b.terms_[0].coeff;
        if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
        if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
        std::vector<Term> ts;
        ts.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) ts.push_back({s.mono * t.mono, s.coeff * t.coeff});
        return from_terms(std::move(ts));
    }

    friend Polynomial operator*(const Polynomial& a, const Integer& c) {
        if (c == 0) return {};
        Polynomial r = a;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Multiplication by a single term keeps the order (graded lex is admissible).
    Polynomial times_term(const Term& s) const {
        Polynomial r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Coefficients with respect to v: result[k] multiplies v^k.
    std::vector<Polynomial> coefficients(VarId v) const {
        std::vector<std::vector<Term>> buckets(degree(v) + 1);
        for (const auto& t : terms_) buckets[t.mono.degree(v)].push_back({t.mono.without(v), t.coeff});
        std::vector<Polynomial> out;
        out.reserve(buckets.size());
        for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
        return out;
    }

    static Polynomial from_coefficients(VarId v, const std::vector<Polynomial>& cs) {
        std::vector<Term> ts;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            auto vk = Monomial::power(v, static_cast<std::uint32_t>(k));
            for (const auto& t : cs[k].terms_) ts.push_back({t.mono * vk, t.coeff});
        }
        return from_terms(std::move(ts));
    }

    Polynomial derivative(VarId v) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            auto e = t.mono.degree(v);
            if (e == 0) continue;
            ts.push_back({t.mono.without(v) * Monomial::power(v, e - 1), t.coeff * e});
        }
        return from_terms(std::move(ts));
    }

    /// Ring homomorphism sending each listed variable to a polynomial.
    Polynomial substitute(const std::map<VarId, Polynomial>& images) const {
        std::map<std::pair<VarId, std::uint32_t>, Polynomial> powers;
        auto power_of = [&](VarId v, std::uint32_t e) -> const Polynomial& {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it != powers.end()) return it->second;
            return powers.emplace(key, images.at(v).pow(e)).first->second;
        };
        Polynomial result;
        std::vector<Term> untouched;
        for (const auto& t : terms_) {
            Monomial kept;
            Polynomial factor(t.coeff);
            bool moved = false;
            for (const auto& [v, e] : t.mono.factors()) {
                if (images.count(v)) {
                    factor *= power_of(v, e);
                    moved = true;
                } else {
                    kept = kept * Monomial::power(v, e);
                }
            }
            if (!moved) untouched.push_back(t);
            else result += factor.times_term({kept, 1});
        }
        return result + from_terms(std::move(untouched));
    }

    Rational evaluate(const std::map<VarId, Rational>& point) const {
        Rational sum = 0;
        for (const auto& t : terms_) {
            Rational term = t.coeff;
            for (const auto& [v, e] : t.mono.factors()) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::invalid_argument("no value assigned to " + var::render(v));
                Rational p;
                mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
                mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
                term *= p;
            }
            sum += term;
        }
        return sum;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Arbitrary but total structural order (for use as map keys).
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = compare(a.terms_[i].mono, b.terms_[i].mono);
            if (c != 0) return c < 0;
            if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
        }
        return a.terms_.size() < b.terms_.size();
    }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() && j != b.terms_.end()) {
            int c = compare(i->mono, j->mono);
            if (c > 0) r.terms_.push_back(*i++);
            else if (c < 0) {
                r.terms_.push_back({j->mono, subtract ? Integer(-j->coeff) : j->coeff});
                ++j;
            } else {
                Integer s = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
                if (s != 0) r.terms_.push_back({i->mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i != a.terms_.end(); ++i) r.terms_.push_back(*i);
        for (; j != b.terms_.end(); ++j)
            r.terms_.push_back({j->mono, subtract ? Integer(-j->coeff) : j->coeff});
        return r;
    }

    std::vector<Term> terms_;
};

/// Quotient a / b when b divides a exactly in Z[vars]; nullopt otherwise.
inline std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Polynomial{};
    if (b.is_constant()) {
        const Integer& c = b.leading().coeff;
        std::vector<Term> ts;
        ts.reserve(a.terms().size());
        for (const auto& t : a.terms()) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
            ts.push_back({t.mono, Integer(t.coeff / c)});
        }
        return Polynomial::from_terms(std::move(ts));
    }
    const Term& lb = b.leading();
    Polynomial rem = a;
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (lr.mono.degree() < lb.mono.degree() || !lb.mono.divides(lr.mono)) return std::nullopt;
        if (!mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
        Term q{lb.mono.cofactor_in(lr.mono), Integer(lr.coeff / lb.coeff)};
        rem -= b.times_term(q);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(std::move(quotient));
}

inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_divide(a, b);
    if (!q) throw std::logic_error("inexact polynomial division");
    return *std::move(q);
}

inline Polynomial with_positive_lead(Polynomial p) { return p.sign() < 0 ? -p : p; }

Polynomial gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

/// Univariate view over a coefficient ring Z[other vars]; back() nonzero.
using UPoly = std::vector<Polynomial>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Polynomial gcd_of(const UPoly& cs) {
    Polynomial g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

inline UPoly divide_all(const UPoly& p, const Polynomial& d) {
    UPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(divide_exact(c, d));
    return r;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
inline UPoly pseudo_remainder(UPoly r, const UPoly& b) {
    const int m = udeg(b);
    const Polynomial& lb = b.back();
    for (int k = udeg(r) - m; k >= 0; --k) {
        Polynomial c = r[static_cast<std::size_t>(m + k)];
        for (auto& x : r) x *= lb;
        if (!c.is_zero())
            for (int i = 0; i <= m; ++i) r[static_cast<std::size_t>(i + k)] -= c * b[static_cast<std::size_t>(i)];
    }
    trim(r);
    return r;
}

/// Subresultant PRS gcd of two primitive univariate polynomials.
inline UPoly subresultant_gcd(UPoly a, UPoly b) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    Polynomial g(1), h(1);
    while (true) {
        const int delta = udeg(a) - udeg(b);
        UPoly r = pseudo_remainder(a, b);
        if (r.empty()) {
            Polynomial c = gcd_of(b);
            return divide_all(b, c);
        }
        if (udeg(r) == 0) return UPoly{Polynomial(1)};
        a = std::move(b);
        b = divide_all(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.back();
        if (delta == 0) continue;
        if (delta == 1) h = g;
        else h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
}

/// gcd of the coefficients of p viewed as a polynomial in v.
inline Polynomial content_in(const Polynomial& p, VarId v) { return gcd_of(p.coefficients(v)); }

}  // namespace detail

/// Greatest common divisor in Z[vars], normalized to a positive leading
/// coefficient.  Recursive: contents are taken with respect to a main
/// variable and the primitive parts go through a subresultant sequence.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return with_positive_lead(b);
    if (b.is_zero()) return with_positive_lead(a);
    if (a.is_constant() || b.is_constant()) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return Polynomial(g);
    }
    if (a == b || a == -b) return with_positive_lead(a);

    const auto va = a.variables(), vb = b.variables();
    for (VarId v : va)
        if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd(detail::content_in(a, v), b);
    for (VarId v : vb)
        if (!std::binary_search(va.begin(), va.end(), v)) return gcd(a, detail::content_in(b, v));

    // Both have the same variable set; fast exits when one divides the other.
    if (a.total_degree() <= b.total_degree()) {
        if (try_divide(b, a)) return with_positive_lead(a);
    } else if (try_divide(a, b)) {
        return with_positive_lead(b);
    }

    VarId main = va.front();
    std::uint32_t best = UINT32_MAX;
    for (VarId v : va) {
        auto d = std::max(a.degree(v), b.degree(v));
        if (d < best) {
            best = d;
            main = v;
        }
    }
    auto ca = a.coefficients(main), cb = b.coefficients(main);
    Polynomial conta = detail::gcd_of(ca), contb = detail::gcd_of(cb);
    auto g = detail::subresultant_gcd(detail::divide_all(ca, conta), detail::divide_all(cb, contb));
    return with_positive_lead(Polynomial::from_coefficients(main, g) * gcd(conta, contb));
}

inline std::string render_integer(const Integer& z) { return z.get_str(); }

/// Infix rendering, e.g. "3*lam*x^2 - x + 1".  The square root of q is
/// shown through q: q^(1/2) -> "q^(1/2)", q^(1/2)^4 -> "q^2".
inline std::string render_monomial(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        if (!s.empty()) s += "*";
        if (v == var::sqrt_q) {
            if (e % 2 == 0) s += e == 2 ? "q" : "q^" + std::to_string(e / 2);
            else s += "q^(" + std::to_string(e) + "/2)";
            continue;
        }
        s += var::render(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        Integer c = t.coeff;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        if (t.mono.is_one()) s += render_integer(c);
        else if (c == 1) s += render_monomial(t.mono);
        else s += render_integer(c) + "*" + render_monomial(t.mono);
    }
    return s;
}

}  // namespace bicalc

#endif
