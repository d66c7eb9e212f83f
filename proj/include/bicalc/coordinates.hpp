#ifndef BICALC_COORDINATES_HPP
#define BICALC_COORDINATES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "bicalc/rational_function.hpp"

namespace bicalc {

/// Rational function of x (and y) over Q(lam, mu).  Opaque function
/// symbols (a, b, gamma, psi, ...) enter as extra indeterminates carrying
/// their jet order and lattice shift, so d/dx and the shifts stay exact.
using CoordFunction = RationalFunction;

namespace coord {

enum class Axis { x = 0, y = 1 };

inline VarId axis_variable(Axis a) { return a == Axis::x ? var::x : var::y; }
inline VarId axis_step(Axis a) { return a == Axis::x ? var::lam : var::mu; }

inline CoordFunction symbol(const std::string& name) { return CoordFunction::variable(var::function(name)); }

/// Partial derivative along an axis.  Function symbols are treated as
/// functions of x only as far as derivatives go: d/dx a^(k) = a^(k+1).
inline CoordFunction derivative(const CoordFunction& f, Axis axis) {
    const VarId coordinate = axis_variable(axis);
    return f.derive([&](VarId v) -> std::optional<Polynomial> {
        if (v == coordinate) return Polynomial(1);
        VarKey k = var::key(v);
        if (!k.function) return std::nullopt;
        if (axis == Axis::y)
            throw std::invalid_argument("d/dy of the function symbol " + k.name + " is not supported");
        return Polynomial::variable(var::function(k.name, k.deriv + 1, k.shift_x, k.shift_y));
    });
}

inline CoordFunction derivative(const CoordFunction& f, Axis axis, unsigned order) {
    CoordFunction r = f;
    for (unsigned i = 0; i < order && !r.is_zero(); ++i) r = derivative(r, axis);
    return r;
}

/// f(x + amount) (or f(y + amount)).  Function symbols can only move by
/// whole lattice steps lam (for x) or mu (for y).
inline CoordFunction shift(const CoordFunction& f, Axis axis, const Scalar& amount) {
    if (!amount.is_polynomial()) throw std::invalid_argument("shift amount must be polynomial");
    const VarId coordinate = axis_variable(axis);
    std::map<VarId, Polynomial> images;
    std::optional<long> steps;
    auto lattice_steps = [&]() -> long {
        if (!steps) {
            const Polynomial& a = amount.numerator();
            if (a.terms().size() == 1 && a.leading().mono == Monomial::power(axis_step(axis)) &&
                a.leading().coeff.fits_slong_p())
                steps = a.leading().coeff.get_si();
            else
                throw std::invalid_argument("function symbols can only be shifted by integer multiples of " +
                                            var::render(axis_step(axis)));
        }
        return *steps;
    };
    auto collect = [&](const Polynomial& p) {
        for (VarId v : p.variables()) {
            if (images.count(v)) continue;
            if (v == coordinate) {
                images.emplace(v, Polynomial::variable(v) + amount.numerator());
                continue;
            }
            VarKey k = var::key(v);
            if (!k.function) continue;
            long n = lattice_steps();
            int sx = k.shift_x + (axis == Axis::x ? static_cast<int>(n) : 0);
            int sy = k.shift_y + (axis == Axis::y ? static_cast<int>(n) : 0);
            images.emplace(v, Polynomial::variable(var::function(k.name, k.deriv, sx, sy)));
        }
    };
    collect(f.numerator());
    collect(f.denominator());
    if (images.empty()) return f;
    // A shift is a ring automorphism, so the fraction stays reduced.
    return CoordFunction::from_coprime(f.numerator().substitute(images), f.denominator().substitute(images));
}

inline CoordFunction shift_x(const CoordFunction& f) { return shift(f, Axis::x, scalar::lam()); }
inline CoordFunction shift_y(const CoordFunction& f) { return shift(f, Axis::y, scalar::mu()); }

}  // namespace coord
}  // namespace bicalc

#endif
