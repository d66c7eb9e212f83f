#ifndef BICALC_RATIONAL_FUNCTION_HPP
#define BICALC_RATIONAL_FUNCTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bicalc/polynomial.hpp"

namespace bicalc {

/// Raised when a value is evaluated at a pole or zero is inverted.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Element of the field of fractions Q(vars): a reduced quotient of
/// integer polynomials.  Canonical form: gcd(num, den) == 1 and the
/// leading coefficient of den is positive, so two equal fractions are
/// structurally identical.
///
/// The same type serves as the scalar field Q(q^(1/2)) or Q(lam, mu) and
/// as the coordinate-function field Q(lam, mu)(x, y, symbols).
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Integer& c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(Integer(c.get_num())), den_(Integer(c.get_den())) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}

    RationalFunction(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw PoleError("zero denominator");
        Polynomial g = gcd(num, den);
        num_ = divide_exact(num, g);
        den_ = divide_exact(den, g);
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static RationalFunction variable(VarId v) { return RationalFunction(Polynomial::variable(v)); }

    /// Builds num/den when the caller knows gcd(num, den) == 1 (e.g. after
    /// applying a ring automorphism to a reduced fraction).
    static RationalFunction from_coprime(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw PoleError("zero denominator");
        return normalized_sign(std::move(num), std::move(den));
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant() && den_.constant_value() == 1; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_one() const { return is_polynomial() && num_.is_constant() && num_.constant_value() == 1; }

    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("not a constant");
        Rational r(num_.constant_value(), den_.constant_value());
        r.canonicalize();
        return r;
    }

    bool contains(VarId v) const { return num_.contains(v) || den_.contains(v); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return add(a, b, false);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return add(a, b, true);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_, raw_tag{});
        Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Polynomial n = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
        Polynomial d = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
        return normalized_sign(std::move(n), std::move(d));
    }

    RationalFunction inverse() const {
        if (is_zero()) throw PoleError("inversion of zero");
        return normalized_sign(den_, num_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    /// Integer power; negative exponents invert.
    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return normalized_sign(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    /// Exact value at a rational point; throws PoleError at a pole.
    Rational evaluate(const std::map<VarId, Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
        Rational r = num_.evaluate(point) / d;
        r.canonicalize();
        return r;
    }

    /// Applies a ring homomorphism of Q[vars] to numerator and denominator.
    RationalFunction substitute(const std::map<VarId, Polynomial>& images) const {
        return RationalFunction(num_.substitute(images), den_.substitute(images));
    }

    /// Derivation determined by its values on the indeterminates:
    /// D(v) = image(v), or 0 when image returns nullopt.
    RationalFunction derive(const std::function<std::optional<Polynomial>(VarId)>& image) const {
        auto poly_d = [&](const Polynomial& p) {
            Polynomial out;
            for (VarId v : p.variables()) {
                auto dv = image(v);
                if (dv && !dv->is_zero()) out += p.derivative(v) * *dv;
            }
            return out;
        };
        Polynomial dn = poly_d(num_);
        if (is_polynomial()) return RationalFunction(std::move(dn), raw_tag{});
        Polynomial dd = poly_d(den_);
        return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

private:
    struct raw_tag {};
    RationalFunction(Polynomial n, raw_tag) : num_(std::move(n)), den_(1) {}

    static RationalFunction normalized_sign(Polynomial n, Polynomial d) {
        RationalFunction r;
        if (d.sign() < 0) {
            n = -n;
            d = -d;
        }
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        const Polynomial& bn = b.num_;
        if (a.is_polynomial() && b.is_polynomial())
            return RationalFunction(subtract ? a.num_ - bn : a.num_ + bn, raw_tag{});
        if (a.is_zero()) return subtract ? -b : b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            Polynomial n = subtract ? a.num_ - bn : a.num_ + bn;
            return RationalFunction(std::move(n), a.den_);
        }
        // gcd(n, b1 * d) == gcd(n, g) when a/b and c/d are reduced.
        Polynomial g = gcd(a.den_, b.den_);
        Polynomial ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
        Polynomial n = subtract ? a.num_ * bd - bn * ad : a.num_ * bd + bn * ad;
        if (n.is_zero()) return {};
        Polynomial h = gcd(n, g);
        return normalized_sign(divide_exact(n, h), ad * divide_exact(b.den_, h));
    }

    Polynomial num_;
    Polynomial den_;
};

using Scalar = RationalFunction;

inline std::string to_string(const RationalFunction& r) {
    // A product may stand on the left of "/" but not on the right.
    auto wrap = [](const Polynomial& p, bool divisor) {
        std::string s = to_string(p);
        const Term& t = p.leading();
        bool atomic = p.terms().size() == 1 && t.coeff > 0 &&
                      (t.mono.is_one() || (t.coeff == 1 && (!divisor || t.mono.factors().size() == 1)));
        return atomic ? s : "(" + s + ")";
    };
    if (r.is_polynomial()) return to_string(r.numerator());
    if (r.numerator().terms().size() == 1 && r.numerator().leading().coeff < 0) return "-" + to_string(-r);
    return wrap(r.numerator(), false) + "/" + wrap(r.denominator(), true);
}

namespace scalar {
/// q = (q^(1/2))^2.
inline Scalar q_half() { return Scalar::variable(var::sqrt_q); }
inline Scalar q() { return Scalar(Polynomial::variable(var::sqrt_q).pow(2)); }
inline Scalar q_pow(long e) { return q().pow(e); }
inline Scalar lam() { return Scalar::variable(var::lam); }
inline Scalar mu() { return Scalar::variable(var::mu); }
inline Scalar x() { return Scalar::variable(var::x); }
inline Scalar y() { return Scalar::variable(var::y); }
inline Scalar rational(long n, long d = 1) { return Scalar(Rational(n, d)); }

/// Exact evaluation in terms of q when only even powers of q^(1/2) occur.
inline Rational evaluate_at_q(const Scalar& s, const Rational& q_value) {
    auto lower = [&](const Polynomial& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            auto e = t.mono.degree(var::sqrt_q);
            if (e % 2 != 0) throw std::invalid_argument("odd power of q^(1/2) in exact q-evaluation");
            ts.push_back({t.mono.without(var::sqrt_q) * Monomial::power(var::sqrt_q, e / 2), t.coeff});
        }
        return Polynomial::from_terms(std::move(ts));
    };
    RationalFunction lowered(lower(s.numerator()), lower(s.denominator()));
    return lowered.evaluate({{var::sqrt_q, q_value}});
}
}  // namespace scalar

}  // namespace bicalc

#endif
