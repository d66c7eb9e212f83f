#include <gtest/gtest.h>

#include "bicalc/parser.hpp"
#include "bicalc/random.hpp"
#include "bicalc/suites.hpp"
#include "bicalc/uqsu2.hpp"

using namespace bicalc;
using namespace bicalc::uq;

namespace {

Scalar q() { return scalar::q(); }

const char* kC = "(q^-1*K^2 + q*K^-2 + (q - q^-1)^2*Xp*Xm)";

}  // namespace

TEST(Uqsu2, PbwOrderingRelations) {
    EXPECT_EQ(K() * Xp(), q() * (Xp() * K()));
    EXPECT_EQ(Xm() * K(), q() * (K() * Xm()));
    EXPECT_EQ(Xm() * Xp(), parse_uq("Xp*Xm - (K^2 - K^-2)/(q - q^-1)"));
    EXPECT_EQ(K(3) * K(-3), one());
}

TEST(Uqsu2, Rendering) {
    EXPECT_EQ(to_string(Xp() * K(-1)), "Xp*K^-1");
    EXPECT_EQ(to_string(K() * Xp()), "q*Xp*K");
    EXPECT_EQ(to_string(UqElement()), "0");
    EXPECT_EQ(to_string(tensor(Xp(), K())), "(Xp) ⊗ (K)");
}

TEST(Uqsu2, GeneratorCoproducts) {
    EXPECT_EQ(coproduct(Xp()), tensor(Xp(), K()) + tensor(K(-1), Xp()));
    EXPECT_EQ(coproduct(Xm()), tensor(Xm(), K()) + tensor(K(-1), Xm()));
    EXPECT_EQ(coproduct(K(-1)), tensor(K(-1), K(-1)));
}

TEST(Uqsu2, Antipode) {
    EXPECT_EQ(antipode(K()), K(-1));
    EXPECT_EQ(antipode(Xp()), -q() * Xp());
    EXPECT_EQ(antipode(Xm()), -q().inverse() * Xm());
    // Anti-multiplicative.
    UqElement u = Xp() * K(2), v = Xm() + K(-1);
    EXPECT_EQ(antipode(u * v), antipode(v) * antipode(u));
}

TEST(Uqsu2, HopfAxiomsRandom) {
    RandomData rnd(99);
    for (int i = 0; i < 50; ++i) {
        UqElement u = rnd.pbw_element(3);
        TensorElement d = coproduct(u);
        ASSERT_EQ(coproduct_on_leg(d, 0), coproduct_on_leg(d, 1));
        ASSERT_EQ(counit_on_leg(d, 0), u);
        ASSERT_EQ(counit_on_leg(d, 1), u);
        UqElement left, right;
        for (const auto& [k, c] : d.terms()) {
            left += c * (antipode(UqElement::term({k[0]})) * UqElement::term({k[1]}));
            right += c * (UqElement::term({k[0]}) * antipode(UqElement::term({k[1]})));
        }
        ASSERT_EQ(left, UqElement(counit(u)));
        ASSERT_EQ(right, UqElement(counit(u)));
    }
}

TEST(Uqsu2, CasimirCentralAndRepresentation) {
    UqElement c = parse_uq(kC);
    EXPECT_EQ(c, casimir());
    EXPECT_TRUE(is_central(c));
    EXPECT_FALSE(is_central(Xp()));
    EXPECT_EQ(fundamental_rep(c), (q() * q() + q().pow(-2)) * Matrix2::identity());
    EXPECT_TRUE(counit(casimir_normalized()).is_zero());
}

TEST(Uqsu2, CasimirCoproductFiveTerms) {
    UqElement c = casimir();
    TensorElement expect = tensor(c, K(2)) + tensor(K(-2), c) - (q() + q().inverse()) * tensor(K(-2), K(2)) +
                           (q() - q().inverse()).pow(2) * (tensor(parse_uq("Xp*K^-1"), parse_uq("K*Xm")) +
                                                           tensor(parse_uq("K^-1*Xm"), parse_uq("Xp*K")));
    EXPECT_EQ(coproduct(c), expect);
}

TEST(Uqsu2, TangentSpaceFromCasimir) {
    const TangentSpace L = tangent_space_from_central(casimir_normalized());
    ASSERT_EQ(L.elements.size(), 4u);
    EXPECT_EQ(L.rank, 4u);
    const std::string cq = "((" + std::string(kC) + " - (q + q^-1))/((q - q^-2)*(q - 1)))";
    EXPECT_EQ(L.elements[0], parse_uq("(q + 1)/(q - q^-2)*(K^2 - 1) + (q^-1 - 1)*" + cq));
    EXPECT_EQ(L.elements[1], parse_uq("q^(1/2)*(q + 1)*(1 - q^-2)/(q - q^-2)*K*Xm"));
    EXPECT_EQ(L.elements[2], parse_uq("q^(1/2)*(q + 1)*(1 - q^-2)/(q - q^-2)*Xp*K"));
    EXPECT_EQ(L.elements[3], parse_uq("(q^-1 + 1)/(q^-1 - q^2)*(K^2 - 1) + (q - 1)*" + cq));
}

TEST(Uqsu2, TangentSpaceChecker) {
    const TangentSpace L = tangent_space_from_central(casimir_normalized());
    EXPECT_TRUE(check_tangent_space(L).passed());
    TangentSpaceCheck xp = check_tangent_space(make_tangent_space({"Xp"}, {Xp()}));
    EXPECT_FALSE(xp.coproduct_condition);
    EXPECT_FALSE(xp.failures.empty());
    TangentSpaceCheck unit = check_tangent_space(make_tangent_space({"1"}, {one()}));
    EXPECT_FALSE(unit.counit_zero);
    EXPECT_TRUE(check_tangent_space(make_tangent_space({}, {})).passed());
}

TEST(Uqsu2, NonCentralRejected) { EXPECT_THROW(tangent_space_from_central(Xp()), NotCentralError); }

TEST(Uqsu2, BraidedLieBrackets) {
    BraidedLieBasis b = braided_lie_basis();
    const Scalar one_minus = Scalar(1) - q().pow(-4);
    EXPECT_EQ(adjoint(b.h, b.x), (q().pow(-2) + Scalar(1)) * b.x);
    EXPECT_EQ(adjoint(b.x, b.y), q().pow(-2) * b.h);
    EXPECT_EQ(adjoint(b.y, b.x), -q().pow(-2) * b.h);
    EXPECT_EQ(adjoint(b.h, b.h), one_minus * b.h);
    EXPECT_EQ(adjoint(b.gamma, b.y), one_minus * b.y);
    Report r = braided_lie_table();
    EXPECT_EQ(r.checks.size(), 10u);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.headers[0], "bracket");
}

TEST(Uqsu2, ChangeOfBasis) { EXPECT_TRUE(change_of_basis_check().ok()); }

TEST(Uqsu2, QLimitAngleShrinks) {
    QLimitDiagnostic d = q_limit_diagnostic(2, 6);
    ASSERT_EQ(d.angle.size(), 5u);
    EXPECT_TRUE(d.decreasing);
    EXPECT_LT(d.angle.back(), 1e-4);
}

TEST(Uqsu2, Suites) {
    for (const char* name : {"hopf", "casimir", "bralie", "check-L"}) {
        Report r = run_suite(name);
        EXPECT_TRUE(r.ok()) << emit_text(r);
    }
}
