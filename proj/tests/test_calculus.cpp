#include <gtest/gtest.h>

#include "bicalc/calculus.hpp"
#include "bicalc/parser.hpp"
#include "bicalc/random.hpp"
#include "bicalc/suites.hpp"

using namespace bicalc;

namespace {

const std::set<std::string> kSyms{"f", "g"};

CoordFunction fn(const std::string& t) { return parse_function(t, kSyms); }
GradedForm form(const CalculusSpec& s, const std::string& t) { return parse_form(s, t, kSyms); }

// f with x replaced by x + lam, done on the text form.
CoordFunction shifted_by_text(const CoordFunction& f) {
    std::string t = to_string(f), out;
    for (char ch : t) out += ch == 'x' ? std::string("(x + lam)") : std::string(1, ch);
    return parse_function(out);
}

}  // namespace

TEST(Generator, JetDimensions) {
    const char* gens[] = {"p^2/2", "p^3/6", "p^4/24", "p^5/120", "p^6/720"};
    for (unsigned n = 1; n <= 5; ++n) {
        TangentBasis t = tangent_space_from_c(parse_generator(gens[n - 1]));
        EXPECT_EQ(t.dimension, n);
        EXPECT_TRUE(translation_closed(t.basis));
    }
}

TEST(Generator, ExponentialDimensions) {
    EXPECT_EQ(tangent_space_from_c(parse_generator("lam^-2*exp(lam*p)")).dimension, 1u);
    EXPECT_EQ(tangent_space_from_c(parse_generator("lam^-2*exp(lam*p) + mu^-2*exp(mu*q)", 2)).dimension, 2u);
    EXPECT_EQ(tangent_space_from_c(parse_generator("exp(p) + exp(-p)")).dimension, 2u);
}

TEST(Generator, ConstantAndLinearGiveZeroCalculus) {
    EXPECT_EQ(tangent_space_from_c(parse_generator("3*p + 1")).dimension, 0u);
    EXPECT_THROW(tangent_space_from_c(parse_generator("7")), std::invalid_argument);
}

TEST(Calculus, Recognition) {
    EXPECT_EQ(calculus_from_generator(parse_generator("p^3/6")).name(), "jet:2");
    EXPECT_EQ(calculus_from_generator(parse_generator("lam^-2*exp(lam*p)")).name(), "fd:1");
    EXPECT_EQ(calculus_from_generator(parse_generator("exp(p) + exp(-p)")).name(), "generic");
    EXPECT_THROW(calculus_by_name("jet:x"), std::invalid_argument);
}

TEST(Calculus, JetRelations) {
    CalculusSpec s = jet_calculus(2);
    EXPECT_EQ(partial(s, 1, fn("x^3")), fn("6*x"));
    EXPECT_EQ(d0(s, fn("x^2")), form(s, "dx*(2*x) + w*2"));
    EXPECT_EQ(left_mult(s, fn("x"), form(s, "dx")), form(s, "dx*x + w*2"));
    EXPECT_EQ(left_mult(s, fn("f"), form(s, "dx")), form(s, "dx*f + w*(2*f')"));
    EXPECT_EQ(left_mult(s, fn("f"), form(s, "w")), form(s, "w*f"));
    EXPECT_EQ(render(s, left_mult(s, fn("x"), form(s, "dx"))), "dx*x + w*2");
}

TEST(Calculus, JetOmega2) {
    CalculusSpec s = jet_calculus(2);
    GradedForm dx = form(s, "dx"), w = form(s, "w");
    EXPECT_EQ(wedge(s, w, dx), form(s, "-dx^w"));
    EXPECT_TRUE(wedge(s, w, w).is_zero());
    EXPECT_EQ(d1(s, w), form(s, "(dx)^2"));
    EXPECT_EQ(left_mult(s, fn("f"), form(s, "dx^w")), form(s, "dx^w*f"));
    for (unsigned k = 0; k <= 8; ++k) EXPECT_TRUE(d1(s, d0(s, fn("x").pow(k))).is_zero());
}

TEST(Calculus, HigherJetsHaveNoTwoForms) {
    CalculusSpec s = jet_calculus(3);
    EXPECT_THROW(d1(s, GradedForm::basis(1, 0)), MissingOmega2);
}

TEST(Calculus, ThreeCommutationRoutesAgree) {
    RandomData rnd(5);
    for (const CalculusSpec& s : {jet_calculus(1), jet_calculus(3), jet_calculus(5), finite_difference_calculus(1),
                                   finite_difference_calculus(2)}) {
        CoordFunction f = rnd.rational(2, s.dims);
        LeftMultRule r = left_mult_rule(s, f);
        EXPECT_EQ(r, left_mult_rule_from_braiding(s, f)) << s.name();
        EXPECT_EQ(r, left_mult_rule_from_leibniz(s, f)) << s.name();
    }
}

TEST(Calculus, BraidingOnPSquared) {
    CalculusSpec s = jet_calculus(2);
    auto b = braiding_inverse(s, fn("f"), 1);
    std::map<int, CoordFunction> want{{0, fn("2*f'")}, {1, fn("f")}};
    EXPECT_EQ(b, want);
}

TEST(Calculus, FiniteDifference1D) {
    CalculusSpec s = finite_difference_calculus(1);
    RandomData rnd(17);
    for (int i = 0; i < 20; ++i) {
        CoordFunction f = rnd.polynomial(6);
        EXPECT_EQ(partial(s, 0, f), (shifted_by_text(f) - f) / scalar::lam());
        EXPECT_EQ(left_mult(s, f, form(s, "dx")) - form(s, "dx").times(f), d0(s, f).times(scalar::lam()));
    }
    EXPECT_TRUE(wedge(s, form(s, "dx"), form(s, "dx")).is_zero());
}

TEST(Calculus, FiniteDifference2D) {
    CalculusSpec s = finite_difference_calculus(2);
    EXPECT_EQ(left_mult(s, fn("x"), form(s, "dx")), form(s, "dx*(x + lam)"));
    EXPECT_EQ(left_mult(s, fn("x"), form(s, "dy")), form(s, "dy*x"));
    EXPECT_EQ(left_mult(s, fn("y"), form(s, "dy")), form(s, "dy*(y + mu)"));
    EXPECT_EQ(wedge(s, form(s, "dy"), form(s, "dx")), form(s, "-dx^dy"));
    EXPECT_EQ(left_mult(s, fn("x"), form(s, "dx^dy")), form(s, "dx^dy*(x + lam)"));
    EXPECT_EQ(left_mult(s, fn("y"), form(s, "dx^dy")), form(s, "dx^dy*(y + mu)"));
    EXPECT_EQ(left_mult(s, fn("f"), form(s, "dx^dy")), form(s, "dx^dy*f[1,1]"));
    EXPECT_EQ(partial(s, 1, fn("f")), fn("(f[0,1] - f)/mu"));
}

TEST(Calculus, DegreeTwoRuleMatchesDerived) {
    for (const CalculusSpec& s : {jet_calculus(2), finite_difference_calculus(2)}) {
        for (std::size_t b = 0; b < s.omega2->names.size(); ++b)
            EXPECT_EQ(left_mult(s, fn("f"), GradedForm::basis(2, static_cast<int>(b))),
                      left_mult_two_form_derived(s, fn("f"), static_cast<int>(b)));
    }
}

TEST(Calculus, Suites) {
    for (const char* name : {"jets", "finite-diff"}) {
        Report r = run_suite(name);
        EXPECT_TRUE(r.ok()) << emit_text(r);
    }
}
