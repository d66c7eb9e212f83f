#ifndef BICALC_PARSER_HPP
#define BICALC_PARSER_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicalc/calculus.hpp"
#include "bicalc/uqsu2.hpp"

namespace bicalc {

/// Syntax or semantic error with the 1-based column where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& what)
        : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

namespace parse_detail {

struct Identifier {
    std::string name;
    int primes = 0;
    std::optional<std::pair<int, int>> shift;
};

/// Recursive-descent parser over a value domain D providing number,
/// identifier, call, add, sub, neg, mul, div, pow and q_half_power.
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := primary ('^' exponent)?
///   primary:= INT | IDENT ['[' INT ',' INT ']'] | IDENT '(' expr ')' | '(' expr ')'
template <class D>
class ExprParser {
public:
    using V = typename D::Value;

    ExprParser(const std::string& text, D& domain, std::size_t pos = 0) : s_(text), d_(domain), pos_(pos) {}

    V parse_all() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

    V expr() {
        V v = term();
        for (;;) {
            skip();
            if (eat('+')) v = d_.add(v, term());
            else if (eat('-')) v = d_.sub(v, term());
            else return v;
        }
    }

    V term() {
        V v = unary();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('*')) v = d_.mul(v, unary(), column(at));
            else if (eat('/')) v = d_.div(v, unary(), column(at));
            else return v;
        }
    }

    V unary() {
        skip();
        if (eat('-')) return d_.neg(unary());
        return power();
    }

    V power() {
        skip();
        std::size_t start = pos_;
        bool bare_q = false;
        V base = primary(bare_q);
        skip();
        std::size_t at = pos_;
        if (!eat('^')) return base;
        auto [num, den] = exponent();
        if (den == 2) {
            if (!bare_q) fail_at(at, "half-integer exponents are only allowed on q");
            return d_.q_half_power(num, column(start));
        }
        return d_.pow(base, num, column(at));
    }

    std::size_t position() const { return pos_; }
    void seek(std::size_t p) { pos_ = p; }
    std::size_t column(std::size_t p) const { return p + 1; }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(column(pos_), what); }
    [[noreturn]] void fail_at(std::size_t p, const std::string& what) const { throw ParseError(column(p), what); }

private:
    long integer(bool allow_sign) {
        skip();
        bool neg = allow_sign && eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail_at(start, "exponent too large");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    std::pair<long, long> exponent() {
        skip();
        if (eat('(')) {
            long num = integer(true);
            long den = 1;
            if (eat('/')) {
                den = integer(false);
                if (den != 1 && den != 2) fail("only denominators 1 and 2 are allowed in exponents");
            }
            if (!eat(')')) fail("expected ')'");
            if (den == 2 && num % 2 == 0) return {num / 2, 1};
            return {num, den};
        }
        return {integer(true), 1};
    }

    V primary(bool& bare_q) {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (eat('(')) {
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return d_.number(Integer(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            Identifier id;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            id.name = s_.substr(start, pos_ - start);
            while (pos_ < s_.size() && s_[pos_] == '\'') {
                ++id.primes;
                ++pos_;
            }
            if (pos_ < s_.size() && s_[pos_] == '(' && id.primes == 0) {
                ++pos_;
                V arg = expr();
                if (!eat(')')) fail("expected ')'");
                return d_.call(id.name, arg, column(start));
            }
            if (pos_ < s_.size() && s_[pos_] == '[') {
                ++pos_;
                int sx = static_cast<int>(integer(true));
                if (!eat(',')) fail("expected ','");
                int sy = static_cast<int>(integer(true));
                if (!eat(']')) fail("expected ']'");
                id.shift = std::make_pair(sx, sy);
            }
            bare_q = id.name == "q" && id.primes == 0 && !id.shift;
            return d_.identifier(id, column(start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    D& d_;
    std::size_t pos_;
};

/// Rational functions in x, y over Q(q^(1/2), lam, mu), plus declared
/// function symbols written as name, name', name''[i,j], ...
struct CoordDomain {
    using Value = CoordFunction;
    std::set<std::string> symbols;

    Value number(const Integer& n) { return Value(n); }
    Value identifier(const Identifier& id, std::size_t col) {
        if (symbols.count(id.name)) {
            auto [sx, sy] = id.shift.value_or(std::make_pair(0, 0));
            return Value::variable(var::function(id.name, id.primes, sx, sy));
        }
        if (id.primes || id.shift) throw ParseError(col, "'" + id.name + "' is not a function symbol");
        if (id.name == "x") return scalar::x();
        if (id.name == "y") return scalar::y();
        if (id.name == "lam") return scalar::lam();
        if (id.name == "mu") return scalar::mu();
        if (id.name == "q") return scalar::q();
        throw ParseError(col, "unknown identifier '" + id.name + "'");
    }
    Value call(const std::string& name, const Value&, std::size_t col) {
        throw ParseError(col, "unknown function '" + name + "'");
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value neg(const Value& a) { return -a; }
    Value mul(const Value& a, const Value& b, std::size_t) { return a * b; }
    Value div(const Value& a, const Value& b, std::size_t col) {
        if (b.is_zero()) throw ParseError(col, "division by zero");
        return a / b;
    }
    Value pow(const Value& a, long e, std::size_t col) {
        if (e < 0 && a.is_zero()) throw ParseError(col, "division by zero");
        return a.pow(e);
    }
    Value q_half_power(long n, std::size_t) { return scalar::q_half().pow(n); }
};

/// Elements of U_q(su_2): Xp, Xm, K, q and integers; products are taken in
/// the order written and normalised immediately.
struct UqDomain {
    using Value = uq::UqElement;

    static std::optional<Scalar> as_scalar(const Value& v) {
        if (v.is_zero()) return Scalar();
        if (v.terms().size() == 1 && v.terms().begin()->first[0] == uq::PBWMonomial{})
            return v.terms().begin()->second;
        return std::nullopt;
    }

    Value number(const Integer& n) { return Value(Scalar(n)); }
    Value identifier(const Identifier& id, std::size_t col) {
        if (!id.primes && !id.shift) {
            if (id.name == "Xp") return uq::Xp();
            if (id.name == "Xm") return uq::Xm();
            if (id.name == "K") return uq::K();
            if (id.name == "q") return Value(scalar::q());
        }
        throw ParseError(col, "unknown identifier '" + id.name + "' in U_q(su_2)");
    }
    Value call(const std::string& name, const Value&, std::size_t col) {
        throw ParseError(col, "unknown function '" + name + "'");
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value neg(const Value& a) { return -a; }
    Value mul(const Value& a, const Value& b, std::size_t) { return a * b; }
    Value div(const Value& a, const Value& b, std::size_t col) {
        auto s = as_scalar(b);
        if (!s) throw ParseError(col, "can only divide by scalars in U_q(su_2)");
        if (s->is_zero()) throw ParseError(col, "division by zero");
        return s->inverse() * a;
    }
    Value pow(const Value& a, long e, std::size_t col) {
        if (e >= 0) {
            Value r = uq::one();
            for (long i = 0; i < e; ++i) r = r * a;
            return r;
        }
        // Only scalars times powers of K are invertible here.
        if (a.terms().size() != 1) throw ParseError(col, "negative power of a non-invertible element");
        const auto& [key, c] = *a.terms().begin();
        if (key[0].plus || key[0].minus) throw ParseError(col, "negative power of a non-invertible element");
        if (c.is_zero()) throw ParseError(col, "division by zero");
        return uq::monomial(0, key[0].k * static_cast<std::int32_t>(e), 0, c.pow(e));
    }
    Value q_half_power(long n, std::size_t) { return Value(scalar::q_half().pow(n)); }
};

/// Generator functions c(p) (and c(p, q) with two momenta): sums of
/// r*p^k and r*exp(s*p).
struct GeneratorDomain {
    using Value = GeneratorFunction;
    unsigned dims = 1;

    static std::optional<Scalar> as_scalar(const Value& v) {
        Scalar c;
        for (const auto& [k, a] : v.terms()) {
            if (!k.is_constant()) return std::nullopt;
            c = a;
        }
        return c;
    }
    /// Axis when v is a polynomial in one momentum only.
    static std::optional<int> pure_axis(const Value& v) {
        std::optional<int> axis;
        for (const auto& [k, a] : v.terms()) {
            if (k.kind == GenKey::exponential) return std::nullopt;
            if (k.is_constant()) continue;
            if (axis && *axis != k.axis) return std::nullopt;
            axis = k.axis;
        }
        return axis.value_or(0);
    }

    Value constant(const Scalar& c) { return GeneratorFunction::term(dims, GenKey::constant(), c); }
    Value number(const Integer& n) { return constant(Scalar(n)); }
    Value identifier(const Identifier& id, std::size_t col) {
        if (!id.primes && !id.shift) {
            if (id.name == "p") return GeneratorFunction::term(dims, GenKey::monomial(0, 1));
            if (id.name == "q" && dims == 2) return GeneratorFunction::term(dims, GenKey::monomial(1, 1));
            if (id.name == "lam") return constant(scalar::lam());
            if (id.name == "mu") return constant(scalar::mu());
        }
        throw ParseError(col, "unknown identifier '" + id.name + "' in a generator function");
    }
    Value call(const std::string& name, const Value& arg, std::size_t col) {
        if (name != "exp") throw ParseError(col, "unknown function '" + name + "'");
        if (arg.terms().size() == 1) {
            const auto& [k, r] = *arg.terms().begin();
            if (k.kind == GenKey::power && k.degree == 1) return GeneratorFunction::term(dims, GenKey::exp(k.axis, r));
        }
        throw ParseError(col, "exp() takes a multiple of a single momentum, e.g. exp(lam*p)");
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value neg(const Value& a) { return a * Scalar(-1); }
    Value mul(const Value& a, const Value& b, std::size_t col) {
        if (auto s = as_scalar(a)) return b * *s;
        if (auto s = as_scalar(b)) return a * *s;
        auto ax = pure_axis(a), bx = pure_axis(b);
        if (!ax || !bx || *ax != *bx)
            throw ParseError(col, "product is not a sum of single-momentum terms");
        Value r(dims);
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) r.add(GenKey::monomial(*ax, ka.degree + kb.degree), ca * cb);
        return r;
    }
    Value div(const Value& a, const Value& b, std::size_t col) {
        auto s = as_scalar(b);
        if (!s) throw ParseError(col, "can only divide a generator function by a constant");
        if (s->is_zero()) throw ParseError(col, "division by zero");
        return a * s->inverse();
    }
    Value pow(const Value& a, long e, std::size_t col) {
        if (auto s = as_scalar(a)) {
            if (e < 0 && s->is_zero()) throw ParseError(col, "division by zero");
            return constant(s->pow(e));
        }
        if (e < 0) throw ParseError(col, "negative power of a momentum");
        Value r = constant(Scalar(1));
        for (long i = 0; i < e; ++i) r = mul(r, a, col);
        return r;
    }
    Value q_half_power(long, std::size_t col) {
        throw ParseError(col, "q^(n/2) is not allowed in a generator function");
    }
};

}  // namespace parse_detail

inline CoordFunction parse_function(const std::string& text, const std::set<std::string>& symbols = {}) {
    parse_detail::CoordDomain d{symbols};
    return parse_detail::ExprParser<parse_detail::CoordDomain>(text, d).parse_all();
}

inline Scalar parse_scalar(const std::string& text) { return parse_function(text); }

inline uq::UqElement parse_uq(const std::string& text) {
    parse_detail::UqDomain d;
    return parse_detail::ExprParser<parse_detail::UqDomain>(text, d).parse_all();
}

inline GeneratorFunction parse_generator(const std::string& text, unsigned dims = 1) {
    if (dims < 1 || dims > 2) throw std::invalid_argument("generator functions have 1 or 2 variables");
    parse_detail::GeneratorDomain d{dims};
    return parse_detail::ExprParser<parse_detail::GeneratorDomain>(text, d).parse_all();
}

/// Parses the right-coefficient normal form printed by render(), e.g.
/// "dx*(2*x) + w*2" or "-dx^w".  A bare function is a 0-form.
inline GradedForm parse_form(const CalculusSpec& s, const std::string& text, const std::set<std::string>& symbols = {}) {
    struct Name {
        std::string text;
        int degree;
        int index;
    };
    std::vector<Name> names;
    for (std::size_t i = 0; i < s.form_names.size(); ++i)
        names.push_back({s.form_names[i], 1, static_cast<int>(i)});
    if (s.omega2)
        for (std::size_t i = 0; i < s.omega2->names.size(); ++i)
            names.push_back({s.omega2->names[i], 2, static_cast<int>(i)});
    std::sort(names.begin(), names.end(), [](const Name& a, const Name& b) { return a.text.size() > b.text.size(); });

    parse_detail::CoordDomain d{symbols};
    parse_detail::ExprParser<parse_detail::CoordDomain> p(text, d);
    auto match_name = [&](std::size_t at) -> const Name* {
        for (const auto& n : names) {
            if (text.compare(at, n.text.size(), n.text) != 0) continue;
            std::size_t end = at + n.text.size();
            if (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_' ||
                                      text[end] == '\''))
                continue;
            return &n;
        }
        return nullptr;
    };

    p.skip();
    std::size_t first = p.position();
    std::size_t probe = first;
    if (probe < text.size() && text[probe] == '-') ++probe;
    while (probe < text.size() && std::isspace(static_cast<unsigned char>(text[probe]))) ++probe;
    if (!match_name(probe)) {
        if (text.substr(first) == "0") return GradedForm(1);
        return GradedForm::function(p.parse_all());
    }

    GradedForm out;
    bool have_degree = false;
    bool negative = p.eat('-');
    for (;;) {
        p.skip();
        std::size_t at = p.position();
        const Name* n = match_name(at);
        if (!n) p.fail("expected a basis form");
        if (have_degree && n->degree != out.degree) p.fail_at(at, "terms of different degree");
        if (!have_degree) {
            out = GradedForm(n->degree);
            have_degree = true;
        }
        p.seek(at + n->text.size());
        CoordFunction c(1);
        if (p.eat('*')) c = p.power();
        out.add(n->index, negative ? -c : c);
        p.skip();
        if (p.position() == text.size()) return out;
        if (p.eat('+')) negative = false;
        else if (p.eat('-')) negative = true;
        else p.fail("expected '+' or '-'");
    }
}

}  // namespace bicalc

#endif
