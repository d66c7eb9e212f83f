#include <gtest/gtest.h>

#include "bicalc/parser.hpp"
#include "bicalc/random.hpp"

using namespace bicalc;

namespace {

std::size_t error_column(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

}  // namespace

TEST(Parser, Scalars) {
    EXPECT_EQ(parse_function("x^2 + 3/2"), scalar::x() * scalar::x() + Scalar(Rational(3, 2)));
    EXPECT_EQ(parse_scalar("(q^(1/2))^2"), scalar::q());
    EXPECT_EQ(parse_scalar("(q - q^-1)/(q + 1)"), (scalar::q() - scalar::q().inverse()) / (scalar::q() + Scalar(1)));
    EXPECT_EQ(parse_function("-x - -x"), Scalar());
    EXPECT_EQ(parse_function("2^-2"), Scalar(Rational(1, 4)));
}

TEST(Parser, Precedence) {
    EXPECT_EQ(parse_function("1 + 2*3^2"), Scalar(19));
    EXPECT_EQ(parse_function("-x^2"), -(scalar::x() * scalar::x()));
    EXPECT_EQ(parse_function("x/2/2"), scalar::x() / Scalar(4));
}

TEST(Parser, FunctionSymbols) {
    std::set<std::string> syms{"f"};
    CoordFunction f = parse_function("f'' + f[1,0]", syms);
    EXPECT_EQ(to_string(f), "f'' + f[1,0]");
    EXPECT_EQ(coord::derivative(parse_function("f", syms), coord::Axis::x), parse_function("f'", syms));
    EXPECT_EQ(coord::shift_x(parse_function("f", syms)), parse_function("f[1,0]", syms));
}

TEST(Parser, UqNormalOrder) {
    EXPECT_EQ(uq::to_string(parse_uq("Xp*K^-1")), "Xp*K^-1");
    EXPECT_EQ(uq::to_string(parse_uq("K*Xp")), "q*Xp*K");
    EXPECT_EQ(parse_uq("K^-1*K"), uq::one());
}

TEST(Parser, Generators) {
    EXPECT_EQ(to_string(parse_generator("p^3/6")), "1/6*p^3");
    EXPECT_EQ(to_string(parse_generator("(exp(lam*p) - 1)/lam")), "1/lam*exp(lam*p) - 1/lam");
    EXPECT_FALSE(parse_generator("p^2 + q^2", 2).is_zero());
    EXPECT_THROW(parse_generator("p*q", 2), ParseError);
}

TEST(Parser, Errors) {
    EXPECT_EQ(error_column([] { parse_function("x + "); }), 5u);
    EXPECT_EQ(error_column([] { parse_function("x * zz"); }), 5u);
    EXPECT_EQ(error_column([] { parse_function("1/(x - x)"); }), 2u);
    EXPECT_EQ(error_column([] { parse_function("2 x"); }), 3u);
    EXPECT_THROW(parse_uq("Xp^-1"), ParseError);
    EXPECT_THROW(parse_uq("K/Xp"), ParseError);
    EXPECT_THROW(parse_generator("p^-1"), ParseError);
    EXPECT_THROW(parse_generator("exp(p*p)"), ParseError);
    EXPECT_THROW(parse_function("x^(1/2)"), ParseError);
}

TEST(Parser, RoundTripScalars) {
    RandomData rnd(21);
    for (int i = 0; i < 50; ++i) {
        CoordFunction f = rnd.rational(3, 2);
        ASSERT_EQ(parse_function(to_string(f)), f) << to_string(f);
        Scalar s = rnd.q_scalar() * scalar::q_half();
        ASSERT_EQ(parse_scalar(to_string(s)), s) << to_string(s);
    }
}

TEST(Parser, RoundTripPbw) {
    RandomData rnd(22);
    for (int i = 0; i < 50; ++i) {
        uq::UqElement u = rnd.pbw_element(3);
        ASSERT_EQ(parse_uq(uq::to_string(u)), u) << uq::to_string(u);
    }
}

TEST(Parser, RoundTripForms) {
    RandomData rnd(23);
    for (const CalculusSpec& s : {jet_calculus(2), jet_calculus(4), finite_difference_calculus(1),
                                   finite_difference_calculus(2)}) {
        for (int i = 0; i < 20; ++i) {
            GradedForm phi = rnd.one_form(s, 2);
            ASSERT_EQ(parse_form(s, render(s, phi)), phi) << render(s, phi);
            if (s.omega2 && !s.omega2->names.empty()) {
                GradedForm two = d1(s, phi);
                ASSERT_EQ(parse_form(s, render(s, two)), two) << render(s, two);
            }
        }
    }
}

TEST(Parser, RoundTripGenerators) {
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& e : jet_calculus(n).tangent) EXPECT_EQ(parse_generator(to_string(e)), e);
    for (const auto& e : finite_difference_calculus(2).tangent) EXPECT_EQ(parse_generator(to_string(e), 2), e);
}
