#pragma once

#include "fakeclass/analytic.hpp"

#include <functional>
#include <vector>

namespace fakeclass {

// prod_{j=1}^{n-1} (2pi)^(j+1) / j!
Interval P_factor(long n, int digits = kDefaultDigits);

// prod_{j=1}^{(n-1)/2} zeta(2dj)^(1/2)
Interval E0(long n, long d, int digits = kDefaultDigits);

// Gamma(s) zeta(s)^2 / (2pi)^s, s = 1 + delta; times e^-0.1 when `with_e`
Interval A_factor(const Rational& delta, bool with_e, int digits = kDefaultDigits);

Interval f_bound(long n, long d, const Rational& delta, int digits = kDefaultDigits);

Interval p1(long n, long d, const Integer& Dk, const Rational& delta, int digits = kDefaultDigits);
Interval p2(long n, long d, const Integer& Dk, const Rational& reg_ratio, const Rational& delta,
            int digits = kDefaultDigits);
Interval p3(long n, long d, const Integer& Dk, long h, int digits = kDefaultDigits);

Interval phi_bound(long n, long d, const Rational& reg_ratio, const Rational& delta, int digits = kDefaultDigits);

Interval d_bound(long n, const Rational& delta, int digits = kDefaultDigits);

Interval lambda_bound(long n, long h, int digits = kDefaultDigits);

Interval L_elimination(long n, long d, long q, long h, int digits = kDefaultDigits);

// lower bound for 1/h_ell, ell of degree 2d
Interval class_number_bound(const Integer& D_ell, long d, const Rational& delta, int digits = kDefaultDigits);

// 0.02, 0.1, 0.2, ..., 10
std::vector<Rational> delta_grid();

struct DeltaChoice {
    Rational delta;
    Interval value;
};

// delta on the grid with the smallest upper endpoint; ties keep the first
DeltaChoice minimize_over_delta(const std::function<Interval(const Rational&)>& bound,
                                const std::vector<Rational>& grid = delta_grid());

} // namespace fakeclass
