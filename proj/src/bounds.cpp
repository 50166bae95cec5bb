#include "fakeclass/bounds.hpp"

#include <optional>
#include <stdexcept>

namespace fakeclass {

namespace {

mpfr_prec_t work_bits(int digits) { return bits_for_digits(digits + 10); }

void check_n(long n)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
}

void check_delta(const Rational& delta)
{
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
}

Interval I(const Rational& r, mpfr_prec_t bits) { return Interval(r, bits); }

// e^(0.1)
Interval e_tenth(mpfr_prec_t bits) { return exp(I(frac(1, 10), bits)); }

// (n^2 - 2 delta - 3)
Rational f_den(long n, const Rational& delta) { return Rational(n * n - 3) - 2 * delta; }
// (n^2 + n - 2 delta - 4)
Rational p_den(long n, const Rational& delta) { return Rational(n * n + n - 4) - 2 * delta; }

} // namespace

Interval P_factor(long n, int digits)
{
    mpfr_prec_t bits = work_bits(digits);
    Integer facts = 1;
    for (long j = 1; j <= n - 1; ++j) facts *= factorial(static_cast<unsigned long>(j));
    long e = (n - 1) * (n + 2) / 2;
    return pow(two_pi_interval(bits), e) / Rational(facts);
}

Interval E0(long n, long d, int digits)
{
    check_n(n);
    mpfr_prec_t bits = work_bits(digits);
    Interval acc = I(1, bits);
    for (long j = 1; j <= (n - 1) / 2; ++j) acc *= zeta_interval(Rational(2 * d * j), digits + 10);
    return sqrt(acc);
}

Interval A_factor(const Rational& delta, bool with_e, int digits)
{
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Rational s = 1 + delta;
    Interval z = zeta_interval(s, digits + 10);
    Interval a = gamma_interval(s, digits + 10) * z * z / pow(two_pi_interval(bits), s);
    if (with_e) a /= e_tenth(bits);
    return a;
}

Interval f_bound(long n, long d, const Rational& delta, int digits)
{
    check_n(n);
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Interval base = A_factor(delta, true, digits) * P_factor(n, digits) *
                    pow(I(50 * delta * (1 + delta), bits), Rational(1, d));
    return pow(base, 2 / f_den(n, delta));
}

Interval p1(long n, long d, const Integer& Dk, const Rational& delta, int digits)
{
    check_n(n);
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Interval AP = A_factor(delta, true, digits) * P_factor(n, digits);
    Interval base = I(50 * delta * (1 + delta), bits) / E0(n, d, digits) /
                    pow(I(Rational(Dk), bits), f_den(n, delta) / 2) * pow(AP, d);
    return pow(base, 4 / p_den(n, delta));
}

Interval p2(long n, long d, const Integer& Dk, const Rational& reg_ratio, const Rational& delta, int digits)
{
    check_n(n);
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Interval AP = A_factor(delta, false, digits) * P_factor(n, digits);
    Interval base = I(delta * (1 + delta) / reg_ratio, bits) / E0(n, d, digits) /
                    pow(I(Rational(Dk), bits), f_den(n, delta) / 2) * pow(AP, d);
    return pow(base, 4 / p_den(n, delta));
}

Interval p3(long n, long d, const Integer& Dk, long h, int digits)
{
    check_n(n);
    mpfr_prec_t bits = work_bits(digits);
    Interval base = I(h, bits) / E0(n, d, digits) * pow(P_factor(n, digits), d) /
                    pow(I(Rational(Dk), bits), Rational(n * n - 1, 2));
    return pow(base, Rational(4, (n - 1) * (n + 2)));
}

Interval phi_bound(long n, long d, const Rational& reg_ratio, const Rational& delta, int digits)
{
    check_n(n);
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Interval inner = I(delta * (1 + delta) / reg_ratio, bits) / E0(n, d, digits);
    Interval base = A_factor(delta, false, digits) * P_factor(n, digits) * pow(inner, Rational(1, d));
    return pow(base, 2 / f_den(n, delta));
}

Interval d_bound(long n, const Rational& delta, int digits)
{
    check_n(n);
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Interval base = I(50 * delta * (1 + delta), bits) * A_factor(delta, true, digits) * P_factor(n, digits);
    return pow(base, 4 / p_den(n, delta));
}

Interval lambda_bound(long n, long h, int digits)
{
    check_n(n);
    mpfr_prec_t bits = work_bits(digits);
    return pow(I(h, bits) * P_factor(n, digits), Rational(4, (n - 1) * (n + 2)));
}

Interval L_elimination(long n, long d, long q, long h, int digits)
{
    check_n(n);
    if (d <= 1 || n % d != 0) throw std::invalid_argument("L_elimination: d must be a divisor of n above 1");
    if (q < 2) throw std::invalid_argument("L_elimination: q must be a prime");
    mpfr_prec_t bits = work_bits(digits);
    Integer num = 1, den = 1;
    Integer Q = q;
    for (long j = 1; j <= n / d; ++j) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(j * d));
        num *= t - 1;
    }
    for (long j = 1; j <= n; ++j) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(j));
        den *= t - 1;
    }
    Rational exact = Rational(n * h) * Rational(num) / Rational(den);
    Interval zr = I(1, bits);
    for (long j = 1; j <= (n - 1) / 2; ++j)
        zr *= zeta_interval(Rational(2 * j + 1), digits + 10) / zeta_interval(Rational(2 * j), digits + 10);
    Interval base = zr * P_factor(n, digits) * exact;
    return pow(base, Rational(4, (n - 1) * (n + 2)));
}

Interval class_number_bound(const Integer& D_ell, long d, const Rational& delta, int digits)
{
    check_delta(delta);
    mpfr_prec_t bits = work_bits(digits);
    Rational s = 1 + delta;
    Interval g = pow(two_pi_interval(bits), s) * e_tenth(bits) / gamma_interval(s, digits + 10);
    Interval z = zeta_interval(s, digits + 10);
    Interval res = I(frac(2, 100) / (s * delta), bits) * pow(g, d);
    res /= pow(I(Rational(D_ell), bits), s / 2);
    res /= pow(z, 2 * d);
    return res;
}

std::vector<Rational> delta_grid()
{
    std::vector<Rational> g{frac(2, 100)};
    for (long i = 1; i <= 100; ++i) g.push_back(frac(i, 10));
    return g;
}

DeltaChoice minimize_over_delta(const std::function<Interval(const Rational&)>& bound,
                                const std::vector<Rational>& grid)
{
    if (grid.empty()) throw std::invalid_argument("empty delta grid");
    std::optional<DeltaChoice> best;
    for (const auto& d : grid) {
        Interval v = bound(d);
        if (!best || mpfr_cmp(v.hi(), best->value.hi()) < 0) best = DeltaChoice{d, v};
    }
    return *best;
}

} // namespace fakeclass
