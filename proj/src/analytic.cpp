#include "fakeclass/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace fakeclass {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

namespace {

Rational two_power_neg(mpfr_prec_t e)
{
    Integer d = Integer(1) << static_cast<unsigned long>(e);
    return Rational(Integer(1), d);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// rational lower bound for pi, good to 9 digits; only used inside tail bounds
const Rational& pi_floor()
{
    static const Rational p = parse_rational("3.14159265");
    return p;
}

} // namespace

Interval gamma_interval(const Rational& s, int digits)
{
    if (s <= 0)
        throw std::invalid_argument("gamma_interval: s must be positive, got " + to_string(s));
    mpfr_prec_t bits = bits_for_digits(digits);
    Rational eps = two_power_neg(bits + 8);

    // shift s up until the asymptotic series is sharp enough
    Rational zmin(digits + 10);
    Rational z = s, shift = 1;
    while (z < zmin) {
        shift *= z;
        z += 1;
    }

    Rational series = 0, remainder;
    Rational zinv = Rational(1) / z, zinv2 = zinv * zinv;
    Rational zpow = zinv;                             // z^(1-2k)
    for (unsigned k = 1;; ++k) {
        if (k > 1) zpow *= zinv2;
        series += bernoulli(2 * k) / Rational(Integer(2 * k) * Integer(2 * k - 1)) * zpow;
        Rational next = abs(bernoulli(2 * k + 2)) / Rational(Integer(2 * k + 2) * Integer(2 * k + 1))
                      * zpow * zinv2;
        if (next < eps || k > 4000) {
            remainder = next;
            break;
        }
    }

    Interval zi(z, bits);
    Interval lg = (zi - Rational(1, 2)) * log(zi) - zi + log_two_pi_interval(bits) * Rational(1, 2);
    lg += series;
    lg.inflate(remainder);
    return exp(lg) / shift;
}

Interval hurwitz_zeta_interval(const Rational& s, const Rational& a, int digits)
{
    if (s <= 1)
        throw std::invalid_argument("hurwitz_zeta_interval: s must exceed 1, got " + to_string(s));
    if (a <= 0)
        throw std::invalid_argument("hurwitz_zeta_interval: a must be positive");
    mpfr_prec_t bits = bits_for_digits(digits);
    Rational eps = two_power_neg(bits + 8);

    long M = static_cast<long>(std::ceil(0.6 * digits)) + 10;
    Rational poch = 1;                                // (s)_{2M}
    for (long i = 0; i < 2 * M; ++i) poch *= s + i;
    Rational twopi_pow = rational_pow(2 * pi_floor(), 2 * M);
    Integer sfloor;
    mpz_fdiv_q(sfloor.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());

    long N = M;
    Rational X, bound;
    for (;;) {
        X = a + N;
        // X^(1-s) <= X^(1-floor(s)) since X >= 1
        bound = 4 * abs(poch) / twopi_pow * rational_pow(X, 1 - sfloor.get_si() - 2 * M)
              / (s + 2 * M - 1);
        if (bound < eps) break;
        N *= 2;
    }

    // sum_{k=1}^{M} B_2k/(2k)! (s)_{2k-1} X^{1-2k}
    Rational corr = 0, p = s, xinv = Rational(1) / X, xp = xinv;
    for (long k = 1; k <= M; ++k) {
        if (k > 1) p *= (s + 2 * k - 3) * (s + 2 * k - 2);
        if (k > 1) xp *= xinv * xinv;
        corr += bernoulli(2 * k) / Rational(factorial(2 * k)) * p * xp;
    }
    Rational tail_factor = X / (s - 1) + Rational(1, 2) + corr;   // times X^(-s)

    if (is_integer(s)) {
        long si = s.get_num().get_si();
        Rational sum = 0;
        for (long k = 0; k < N; ++k)
            sum += rational_pow(a + k, -si);
        sum += rational_pow(X, -si) * tail_factor;
        Interval r(sum, bits);
        r.inflate(bound);
        return r;
    }

    Interval sum(Rational(0), bits);
    for (long k = 0; k < N; ++k)
        sum += exp(log(Interval(a + k, bits)) * Rational(-s));
    sum += exp(log(Interval(X, bits)) * Rational(-s)) * tail_factor;
    sum.inflate(bound);
    return sum;
}

Interval zeta_interval(const Rational& s, int digits)
{
    if (s <= 1)
        throw std::invalid_argument("zeta_interval: s must exceed 1, got " + to_string(s));
    return hurwitz_zeta_interval(s, 1, digits);
}

Verdict certify_less_than(const Interval& x, const Rational& c)
{
    if (mpfr_cmp_q(x.hi(), c.get_mpq_t()) < 0) return Verdict::Certified;
    if (mpfr_cmp_q(x.lo(), c.get_mpq_t()) >= 0) return Verdict::Refuted;
    return Verdict::Undecided;
}

Verdict certify_greater_than(const Interval& x, const Rational& c)
{
    if (mpfr_cmp_q(x.lo(), c.get_mpq_t()) > 0) return Verdict::Certified;
    if (mpfr_cmp_q(x.hi(), c.get_mpq_t()) <= 0) return Verdict::Refuted;
    return Verdict::Undecided;
}

namespace {

Certification certify_with_retry(const std::function<Interval(int)>& f, const Rational& c, int digits,
                                 Verdict (*cmp)(const Interval&, const Rational&))
{
    Interval v = f(digits);
    Verdict r = cmp(v, c);
    if (r != Verdict::Undecided)
        return {r, std::move(v), digits};
    Interval w = f(2 * digits);
    return {cmp(w, c), std::move(w), 2 * digits};
}

} // namespace

Certification certify_less(const std::function<Interval(int)>& f, const Rational& c, int digits)
{
    return certify_with_retry(f, c, digits, certify_less_than);
}

Certification certify_greater(const std::function<Interval(int)>& f, const Rational& c, int digits)
{
    return certify_with_retry(f, c, digits, certify_greater_than);
}

} // namespace fakeclass
