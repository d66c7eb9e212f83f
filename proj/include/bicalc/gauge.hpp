#ifndef BICALC_GAUGE_HPP
#define BICALC_GAUGE_HPP

#include <stdexcept>
#include <string>

#include "bicalc/calculus.hpp"
#include "bicalc/report.hpp"

namespace bicalc {

/// Gauge theory on a trivial bundle with scalar coefficients: alpha is a
/// 1-form, gamma an invertible function, psi a function.
namespace gauge {

inline void require_one_form(const GradedForm& alpha) {
    if (!alpha.is_zero() && alpha.degree != 1) throw std::invalid_argument("a gauge field is a 1-form");
}

inline GradedForm one_form(const GradedForm& g) {
    GradedForm r = g;
    if (r.is_zero()) r.degree = 1;
    return r;
}

/// F = d alpha + alpha ^ alpha.
inline GradedForm curvature(const CalculusSpec& s, const GradedForm& alpha) {
    require_one_form(alpha);
    s.require_omega2();
    GradedForm a = one_form(alpha);
    GradedForm f = d1(s, a) + wedge(s, a, a);
    f.degree = 2;
    return f;
}

/// gamma^-1 * phi * gamma.
inline GradedForm conjugate(const CalculusSpec& s, const GradedForm& phi, const CoordFunction& gamma) {
    return left_mult(s, gamma.inverse(), phi.times(gamma));
}

/// gamma^-1 d gamma.
inline GradedForm pure_gauge(const CalculusSpec& s, const CoordFunction& gamma) {
    return one_form(left_mult(s, gamma.inverse(), d0(s, gamma)));
}

/// alpha^gamma = gamma^-1 alpha gamma + gamma^-1 d gamma.
inline GradedForm gauge_transform(const CalculusSpec& s, const GradedForm& alpha, const CoordFunction& gamma) {
    require_one_form(alpha);
    return one_form(conjugate(s, one_form(alpha), gamma) + pure_gauge(s, gamma));
}

/// nabla psi = d psi + alpha psi.
inline GradedForm cov_deriv_scalar(const CalculusSpec& s, const GradedForm& alpha, const CoordFunction& psi) {
    require_one_form(alpha);
    return one_form(d0(s, psi) + one_form(alpha).times(psi));
}

/// nabla sigma = d sigma + alpha ^ sigma.
inline GradedForm cov_deriv_oneform(const CalculusSpec& s, const GradedForm& alpha, const GradedForm& sigma) {
    require_one_form(alpha);
    GradedForm out = d1(s, one_form(sigma)) + wedge(s, one_form(alpha), one_form(sigma));
    out.degree = 2;
    return out;
}

/// Zero curvature, decided on canonical fractions (a zero numerator).
inline bool is_flat(const CalculusSpec& s, const GradedForm& alpha) { return curvature(s, alpha).is_zero(); }

/// F(alpha^gamma) against gamma^-1 F(alpha) gamma, plus the calculus-specific
/// form of the right side: F itself for the 2-jet calculus (functions commute
/// with 2-forms) and F * gamma / gamma(x+lam, y+mu) for 2D differences.
inline Report gauge_transform_curvature_check(const CalculusSpec& s, const GradedForm& alpha, const CoordFunction& gamma) {
    Report r;
    GradedForm f = curvature(s, alpha);
    GradedForm lhs = curvature(s, gauge_transform(s, alpha, gamma));
    GradedForm conj = conjugate(s, f, gamma);
    r.add_equal("F(alpha^gamma) = gamma^-1 F(alpha) gamma", render(s, lhs), render(s, conj));
    if (s.kind == CalculusSpec::Kind::jet && s.order == 2)
        r.add_equal("gamma^-1 F gamma = F", render(s, conj), render(s, f));
    if (s.kind == CalculusSpec::Kind::finite_difference_2d)
        r.add_equal("F(alpha^gamma) = F gamma/gamma(x+lam,y+mu)", render(s, lhs),
                    render(s, f.times(gamma / shift_all(s, gamma))));
    return r;
}

/// The three lemmas: F(alpha^gamma) = gamma^-1 F gamma,
/// nabla^gamma psi^gamma = gamma^-1 nabla psi, and nabla^2 psi = F psi.
inline Report verify_lemmas(const CalculusSpec& s, const GradedForm& alpha, const CoordFunction& gamma,
                            const CoordFunction& psi) {
    Report r;
    GradedForm a = one_form(alpha);
    GradedForm f = curvature(s, a);
    GradedForm ag = gauge_transform(s, a, gamma);
    r.add_equal("lemma 1: F(alpha^gamma) = gamma^-1 F(alpha) gamma", render(s, curvature(s, ag)),
                render(s, conjugate(s, f, gamma)));
    CoordFunction psi_g = gamma.inverse() * psi;
    r.add_equal("lemma 2: nabla^gamma psi^gamma = (nabla psi)^gamma", render(s, cov_deriv_scalar(s, ag, psi_g)),
                render(s, left_mult(s, gamma.inverse(), cov_deriv_scalar(s, a, psi))));
    GradedForm nabla2 = cov_deriv_oneform(s, a, cov_deriv_scalar(s, a, psi));
    GradedForm fpsi = f.times(psi);
    fpsi.degree = 2;
    r.add_equal("lemma 3: nabla^2 psi = F psi", render(s, nabla2), render(s, fpsi));
    return r;
}

}  // namespace gauge
}  // namespace bicalc

#endif
