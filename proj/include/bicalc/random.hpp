#ifndef BICALC_RANDOM_HPP
#define BICALC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "bicalc/calculus.hpp"
#include "bicalc/uqsu2.hpp"

namespace bicalc {

/// Seeded generator of small random test data.  Identical seeds give
/// identical sequences on every platform (only mt19937 output is used,
/// never the distribution classes).
class RandomData {
public:
    explicit RandomData(std::uint32_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint32_t>(hi - lo + 1)); }

    /// Nonzero polynomial in x (and y) with coefficients in [-3, 3].
    CoordFunction polynomial(unsigned max_degree, unsigned dims = 1) {
        for (;;) {
            Polynomial p;
            long terms = integer(1, 4);
            for (long t = 0; t < terms; ++t) {
                unsigned dx = static_cast<unsigned>(integer(0, max_degree));
                unsigned dy = dims == 2 ? static_cast<unsigned>(integer(0, max_degree - dx)) : 0;
                Monomial m = Monomial::power(var::x, dx) * Monomial::power(var::y, dy);
                p += Polynomial::monomial(m, Integer(integer(-3, 3)));
            }
            if (!p.is_zero()) return CoordFunction(p);
        }
    }

    /// Quotient of two such polynomials.
    CoordFunction rational(unsigned max_degree, unsigned dims = 1) {
        return polynomial(max_degree, dims) / polynomial(max_degree > 0 ? max_degree - 1 : 0, dims);
    }

    /// Scalar rational function in q of low degree, never zero.
    Scalar q_scalar() {
        Scalar q = scalar::q();
        Scalar num = Scalar(integer(1, 3)) + Scalar(integer(-2, 2)) * q;
        Scalar den = Scalar(1) + Scalar(integer(0, 2)) * q * q;
        return num / den;
    }

    /// Random element of U_q(su_2) with PBW monomials of degree <= max_degree.
    uq::UqElement pbw_element(std::uint32_t max_degree = 3) {
        uq::UqElement u;
        long terms = integer(1, 3);
        for (long t = 0; t < terms; ++t) {
            std::uint32_t budget = static_cast<std::uint32_t>(integer(0, max_degree));
            std::uint32_t plus = static_cast<std::uint32_t>(integer(0, budget));
            std::uint32_t minus = static_cast<std::uint32_t>(integer(0, budget - plus));
            long krange = static_cast<long>(budget - plus - minus);
            auto k = static_cast<std::int32_t>(integer(-krange, krange));
            u += uq::monomial(plus, k, minus, q_scalar());
        }
        return u;
    }

    /// Random 1-form sum theta_m * f_m with rational coefficients.
    GradedForm one_form(const CalculusSpec& s, unsigned max_degree) {
        GradedForm g(1);
        for (std::size_t m = 0; m < s.dimension(); ++m) g.add(static_cast<int>(m), rational(max_degree, s.dims));
        return g;
    }

private:
    std::mt19937 rng_;
};

}  // namespace bicalc

#endif
