#pragma once

#include "fakeclass/fieldsdb.hpp"

#include <functional>

namespace fakeclass {

/* Q(theta), theta^2 + c1 theta + c0 = 0, theta the larger real root. Elements
 * are x0 + x1 theta with rational coordinates. */
struct RealQuadratic {
    Integer c0, c1;

    struct Elem {
        Rational x0, x1;
    };

    explicit RealQuadratic(const NumberFieldRecord& k);

    Integer disc() const { return c1 * c1 - 4 * c0; }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem add(const Elem& a, const Elem& b) const { return {a.x0 + b.x0, a.x1 + b.x1}; }
    Elem scale(const Elem& a, const Rational& r) const { return {a.x0 * r, a.x1 * r}; }
    Elem conj(const Elem& a) const { return {a.x0 - c1 * a.x1, -a.x1}; }
    Elem inverse(const Elem& a) const;
    Rational norm(const Elem& a) const;
    Rational trace(const Elem& a) const { return 2 * a.x0 - c1 * a.x1; }
    double approx(const Elem& a) const;

    // fundamental unit a + b theta with b > 0 and value > 1
    Elem fundamental_unit() const;
};

/* L(-m, psi) over a real quadratic k with narrow class number 1, for psi a
 * character on O_k / M O_k given on a + b theta by `psi`, trivial on totally
 * positive units. Shintani cone decomposition with the cone spanned by 1 and
 * the totally positive fundamental unit. */
Rational shintani_L_negative(const NumberFieldRecord& k, long M, const std::function<int(long a, long b)>& psi,
                             long m);

} // namespace fakeclass
