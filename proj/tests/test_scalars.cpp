#include <gtest/gtest.h>

#include <random>

#include "bicalc/rational_function.hpp"

using namespace bicalc;

namespace {

Scalar q() { return scalar::q(); }
Scalar x() { return scalar::x(); }

Polynomial random_poly(std::mt19937& rng, std::vector<VarId> vars, int max_deg) {
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_deg), nterms(1, 4);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (VarId v : vars) m = m * Monomial::power(v, static_cast<std::uint32_t>(deg(rng)));
        ts.push_back({m, coeff(rng)});
    }
    return Polynomial::from_terms(ts);
}

Scalar random_scalar(std::mt19937& rng, std::vector<VarId> vars) {
    Polynomial den;
    while (den.is_zero()) den = random_poly(rng, vars, 2);
    return Scalar(random_poly(rng, vars, 2), den);
}

}  // namespace

TEST(Scalars, AddQAndInverse) {
    Scalar s = q() + q().inverse();
    EXPECT_EQ(s, Scalar(q() * q() + Scalar(1)) / q());
    EXPECT_EQ(to_string(s), "(q^2 + 1)/q");
}

TEST(Scalars, MulByInverseIsOne) {
    Scalar a = q() - Scalar(1);
    EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(Scalars, InverseOfQMinusQInvSquared) {
    // Cross-multiplying by hand: 1/(q - q^-2) = q^2/(q^3 - 1).
    Scalar got = (q() - q().pow(-2)).inverse();
    Scalar expected(Polynomial::variable(var::sqrt_q).pow(4),
                    Polynomial::variable(var::sqrt_q).pow(6) - Polynomial(1));
    EXPECT_EQ(got, expected);
}

TEST(Scalars, InvertingZeroThrows) { EXPECT_THROW(Scalar().inverse(), PoleError); }

TEST(Scalars, EvaluateAtQ) {
    EXPECT_EQ(scalar::evaluate_at_q(q().pow(2) + q().pow(-2), Rational(1)), Rational(2));
    EXPECT_EQ(scalar::evaluate_at_q((q() * q() + Scalar(1)) / q(), Rational(2)), Rational(5, 2));
    EXPECT_THROW(scalar::evaluate_at_q((q() - Scalar(1)).inverse(), Rational(1)), PoleError);
}

TEST(Scalars, EvaluateMultivariate) {
    Scalar f = (scalar::lam() * x() + Scalar(1)) / (scalar::mu() - x());
    Rational v = f.evaluate({{var::lam, Rational(2)}, {var::mu, Rational(5)}, {var::x, Rational(1, 2)}});
    EXPECT_EQ(v, Rational(4, 9));
    EXPECT_THROW(f.evaluate({{var::lam, Rational(1)}, {var::mu, Rational(1)}, {var::x, Rational(1)}}), PoleError);
}

TEST(Scalars, CanonicalFormIsUnique) {
    Scalar a = (x() * x() - Scalar(1)) / (x() - Scalar(1));
    Scalar b = x() + Scalar(1);
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_string(a), to_string(b));
    Scalar c = Scalar(Polynomial(-2) * Polynomial::variable(var::x), Polynomial(-4));
    EXPECT_EQ(to_string(c), "x/2");
    EXPECT_GT(c.denominator().sign(), 0);
}

TEST(Polynomials, GcdMultivariate) {
    Polynomial x = Polynomial::variable(var::x), l = Polynomial::variable(var::lam),
               y = Polynomial::variable(var::y);
    Polynomial common = x * y + l * l - Polynomial(3);
    Polynomial a = common * (x + l) * Polynomial(6), b = common * (y * y - x) * Polynomial(4);
    EXPECT_EQ(gcd(a, b), common * Polynomial(2));
    EXPECT_EQ(gcd(x + Polynomial(1), x - Polynomial(1)), Polynomial(1));
}

TEST(Polynomials, SubstituteShift) {
    Polynomial x = Polynomial::variable(var::x), l = Polynomial::variable(var::lam);
    Polynomial f = x * x;
    EXPECT_EQ(f.substitute({{var::x, x + l}}), x * x + Polynomial(2) * x * l + l * l);
}

TEST(ScalarProperties, FieldLawsOnRandomTriples) {
    std::mt19937 rng(7);
    std::vector<VarId> vars{var::x, var::lam};
    for (int i = 0; i < 40; ++i) {
        Scalar a = random_scalar(rng, vars), b = random_scalar(rng, vars), c = random_scalar(rng, vars);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Scalar());
        if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
        // Equality agrees with cross-multiplication.
        EXPECT_EQ(a == b, a.numerator() * b.denominator() == b.numerator() * a.denominator());
    }
}

TEST(ScalarProperties, CanonicalUnderDifferentConstructions) {
    std::mt19937 rng(11);
    std::vector<VarId> vars{var::x, var::y, var::mu};
    for (int i = 0; i < 20; ++i) {
        Scalar a = random_scalar(rng, vars), b = random_scalar(rng, vars);
        if (b.is_zero()) continue;
        Scalar one_way = (a * b) / b;
        Scalar other = (a + b) - b;
        EXPECT_EQ(one_way, a);
        EXPECT_EQ(other, a);
        EXPECT_EQ(to_string(one_way), to_string(other));
    }
}
