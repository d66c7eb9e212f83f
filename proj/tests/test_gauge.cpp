#include <gtest/gtest.h>

#include "bicalc/gauge.hpp"
#include "bicalc/parser.hpp"
#include "bicalc/random.hpp"
#include "bicalc/suites.hpp"

using namespace bicalc;

namespace {

const std::set<std::string> kSyms{"a", "b", "g", "psi", "s", "t"};

CoordFunction fn(const std::string& t) { return parse_function(t, kSyms); }
GradedForm form(const CalculusSpec& s, const std::string& t) { return parse_form(s, t, kSyms); }

}  // namespace

TEST(GaugeJet, Curvature) {
    CalculusSpec s = jet_calculus(2);
    EXPECT_EQ(gauge::curvature(s, form(s, "dx*a + w*b")),
              form(s, "dx^w*(b' - a'' + 2*a'*a) - (dx)^2*(a' - b - a^2)"));
    EXPECT_TRUE(gauge::curvature(s, GradedForm(1)).is_zero());
}

TEST(GaugeJet, TransformComponents) {
    CalculusSpec s = jet_calculus(2);
    GradedForm ag = gauge::gauge_transform(s, form(s, "dx*a + w*b"), fn("g"));
    EXPECT_EQ(ag.coeff(0), fn("a + g'/g"));
    EXPECT_EQ(ag.coeff(1), fn("b - 2*a*g'/g + g''/g - 2*g'^2/g^2"));
}

TEST(GaugeJet, FlatAndPureGauge) {
    CalculusSpec s = jet_calculus(2);
    EXPECT_TRUE(gauge::is_flat(s, form(s, "dx*(1/x) + w*(-2/x^2)")));
    EXPECT_FALSE(gauge::is_flat(s, form(s, "dx*x")));
    EXPECT_EQ(gauge::pure_gauge(s, fn("x")), form(s, "dx*(1/x) - w*(2/x^2)"));
    // a' = a^2 + b is the flatness condition.
    EXPECT_TRUE(gauge::is_flat(s, form(s, "dx*x + w*(1 - x^2)")));
}

TEST(GaugeJet, CovariantDerivatives) {
    CalculusSpec s = jet_calculus(2);
    GradedForm alpha = form(s, "dx*a + w*b");
    EXPECT_EQ(gauge::cov_deriv_scalar(s, alpha, fn("psi")), form(s, "dx*(psi' + a*psi) + w*(psi'' + b*psi)"));
    EXPECT_EQ(gauge::cov_deriv_oneform(s, alpha, form(s, "dx*s + w*t")),
              form(s, "(dx)^2*(-s' + t + a*s) + dx^w*(-s'' + 2*a'*s - b*s + a*t + t')"));
    Report lemmas = gauge::verify_lemmas(s, alpha, fn("g"), fn("psi"));
    EXPECT_TRUE(lemmas.ok()) << emit_text(lemmas);
}

TEST(GaugeJet, RandomInvariance) {
    CalculusSpec s = jet_calculus(2);
    RandomData rnd(3);
    for (int i = 0; i < 20; ++i) {
        GradedForm alpha = rnd.one_form(s, 2);
        CoordFunction g = rnd.rational(2);
        EXPECT_EQ(gauge::curvature(s, gauge::gauge_transform(s, alpha, g)), gauge::curvature(s, alpha));
    }
}

TEST(GaugeFd, CurvatureAndTransform) {
    CalculusSpec s = finite_difference_calculus(2);
    GradedForm alpha = form(s, "dx*a + dy*b");
    EXPECT_EQ(gauge::curvature(s, alpha), form(s, "dx^dy*((b[1,0] - b)/lam - (a[0,1] - a)/mu + a[0,1]*b - b[1,0]*a)"));
    GradedForm ag = gauge::gauge_transform(s, alpha, fn("g"));
    EXPECT_EQ(ag.coeff(0), fn("a*g/g[1,0] + (1 - g/g[1,0])/lam"));
    EXPECT_EQ(ag.coeff(1), fn("b*g/g[0,1] + (1 - g/g[0,1])/mu"));
    EXPECT_EQ(gauge::curvature(s, ag), gauge::curvature(s, alpha).times(fn("g/g[1,1]")));
}

TEST(GaugeFd, ConstantFieldIsFlat) {
    CalculusSpec s = finite_difference_calculus(2);
    EXPECT_TRUE(gauge::is_flat(s, form(s, "dx")));
    GradedForm alpha = form(s, "dx*y");
    EXPECT_EQ(gauge::curvature(s, alpha), form(s, "-dx^dy"));
    EXPECT_EQ(gauge::curvature(s, gauge::gauge_transform(s, alpha, fn("x"))), form(s, "-dx^dy*(x/(x + lam))"));
}

TEST(GaugeFd, PureGauge) {
    CalculusSpec s = finite_difference_calculus(2);
    EXPECT_EQ(gauge::pure_gauge(s, fn("x")), form(s, "dx*(1/(x + lam))"));
    EXPECT_TRUE(gauge::is_flat(s, gauge::pure_gauge(s, fn("x*y + 1"))));
}

TEST(Gauge, Errors) {
    EXPECT_THROW(gauge::curvature(jet_calculus(3), GradedForm::basis(1, 0)), MissingOmega2);
    EXPECT_TRUE(gauge::curvature(finite_difference_calculus(1), GradedForm::basis(1, 0, scalar::x())).is_zero());
    CalculusSpec s = jet_calculus(2);
    EXPECT_THROW(gauge::curvature(s, GradedForm::basis(2, 0)), std::invalid_argument);
    EXPECT_THROW(gauge::gauge_transform(s, form(s, "dx"), CoordFunction()), std::exception);
}

TEST(Gauge, Suites) {
    for (const char* name : {"gauge-jet", "gauge-fd"}) {
        Report r = run_suite(name);
        EXPECT_TRUE(r.ok()) << emit_text(r);
    }
}
