#include "doctest.h"

#include "fakeclass/analytic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace fakeclass;

namespace {

// centre +- 10^-e
Interval around(const char* centre, int e, mpfr_prec_t bits = 400)
{
    Integer p = 1;
    for (int i = 0; i < e; ++i) p *= 10;
    Rational c = parse_rational(centre), r = Rational(1) / Rational(p);
    return Interval(c - r, c + r, bits);
}

// Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
Interval gamma_half_reference(unsigned k, mpfr_prec_t bits)
{
    Rational c(factorial(2 * k), Integer(1) << (2 * k));
    c /= Rational(factorial(k));
    return sqrt(pi_interval(bits)) * c;
}

// zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
Interval zeta_even_reference(unsigned k, mpfr_prec_t bits)
{
    Rational c = bernoulli(2 * k) / (2 * Rational(factorial(2 * k)));
    if (k % 2 == 0) c = -c;
    return pow(two_pi_interval(bits), static_cast<long>(2 * k)) * c;
}

} // namespace

TEST_SUITE("analytic") {

TEST_CASE("interval arithmetic encloses exact results")
{
    mpfr_prec_t b = bits_for_digits(30);
    Interval third(frac(1, 3), b);
    Interval x = third * Rational(3);
    CHECK(x.contains(Rational(1)));
    Interval y = Interval(Rational(2), b);
    CHECK((sqrt(y) * sqrt(y)).contains(Rational(2)));
    CHECK(exp(log(y)).contains(Rational(2)));
    CHECK(pow(y, 10L).contains(Rational(1024)));
    CHECK(pow(y, frac(1, 2)).overlaps(sqrt(y)));
    CHECK(cos(pi_interval(b)).contains(Rational(-1)));
    CHECK((-third).is_negative());
    CHECK_FALSE(third.contains_zero());
}

TEST_CASE("gamma at small arguments")
{
    Interval g3 = gamma_interval(3, 30);
    CHECK(g3.contains(Rational(2)));
    CHECK(g3.width_below(Rational(1) / Rational(Integer("10000000000000000000000000000"))));
    CHECK(gamma_interval(1, 30).contains(Rational(1)));
    Interval g52 = gamma_interval(frac(5, 2), 30);
    CHECK(g52.overlaps(sqrt(pi_interval(200)) * frac(3, 4)));
    CHECK(g52.contains(gamma_half_reference(2, bits_for_digits(80))));
    CHECK_THROWS_AS(gamma_interval(0, 30), std::invalid_argument);
    CHECK_THROWS_AS(gamma_interval(-1, 30), std::invalid_argument);
}

TEST_CASE("zeta at classical points")
{
    mpfr_prec_t hb = bits_for_digits(90);
    Interval pi = pi_interval(hb);
    CHECK(zeta_interval(2, 30).contains(pi * pi / Rational(6)));
    CHECK(zeta_interval(4, 30).contains(pow(pi, 4L) / Rational(90)));
    Interval z3 = zeta_interval(3, 30);
    CHECK(z3.contains(around("1.202056903159594285399738161511449990764986292", 45)));
    CHECK(zeta_interval(3, 60).contains(zeta_interval(3, 120)));
    CHECK_THROWS_AS(zeta_interval(1, 30), std::invalid_argument);
    CHECK_THROWS_AS(zeta_interval(frac(1, 2), 30), std::invalid_argument);
}

TEST_CASE("non-integer arguments")
{
    // zeta(3/2) = 2.612375348685488343348567567924071...
    CHECK(around("2.6123753486854883433485675679240716305708", 38).contains(zeta_interval(frac(3, 2), 40)));
    // Gamma(1/3) = 2.678938534707747633655692940974677644128689377957...
    CHECK(around("2.67893853470774763365569294097467764412868937796", 38).contains(gamma_interval(frac(1, 3), 40)));
    // Hurwitz zeta(2, 1/4) = pi^2 + 8 G with Catalan's G
    Interval pi = pi_interval(300);
    Interval catalan = around("0.915965594177219015054603514932384110774149374281672134266", 57);
    CHECK(hurwitz_zeta_interval(2, frac(1, 4), 40).overlaps(pi * pi + catalan * Rational(8)));
    CHECK(hurwitz_zeta_interval(2, frac(1, 4), 40).width() < 1e-38);
}

TEST_CASE("pi consistency")
{
    for (int digits : {20, 40, 60}) {
        mpfr_prec_t b = bits_for_digits(digits);
        Interval diff = zeta_interval(2, digits) - pi_interval(b) * pi_interval(b) / Rational(6);
        CHECK(diff.contains(Rational(0)));
        CHECK(diff.width() < std::pow(10.0, 2 - digits));
    }
}

TEST_CASE("enclosure soundness on random closed forms")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<unsigned> pick(0, 3), halfk(0, 30), zk(1, 25), digits(20, 70);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        int d = static_cast<int>(digits(rng));
        mpfr_prec_t ref_bits = bits_for_digits(2 * d + 20);
        switch (pick(rng)) {
        case 0: {
            unsigned k = halfk(rng);
            Rational s = Rational(k) + frac(1, 2);
            if (!gamma_interval(s, d).contains(gamma_half_reference(k, ref_bits))) ++failures;
            break;
        }
        case 1: {
            unsigned k = halfk(rng) + 1;
            if (!gamma_interval(Rational(k), d).contains(Rational(factorial(k - 1)))) ++failures;
            break;
        }
        default: {
            unsigned k = zk(rng);
            if (!zeta_interval(Rational(2 * k), d).contains(zeta_even_reference(k, ref_bits))) ++failures;
            break;
        }
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("monotone refinement")
{
    for (const Rational& s : {Rational(2), frac(11, 5), frac(3, 2), Rational(7)}) {
        double prev = 1e300;
        for (int d : {20, 30, 45, 60, 90}) {
            double w = zeta_interval(s, d).width();
            CHECK(w <= prev);
            prev = w;
        }
        prev = 1e300;
        for (int d : {20, 30, 45, 60, 90}) {
            double w = gamma_interval(s, d).width();
            CHECK(w <= prev);
            prev = w;
        }
    }
}

TEST_CASE("certify verdicts")
{
    Interval a = around("2.59", 20);
    CHECK(certify_less_than(a, frac(26, 10)) == Verdict::Certified);
    CHECK(certify_less_than(around("3.0", 20), frac(26, 10)) == Verdict::Refuted);
    CHECK(certify_less_than(Interval(frac(21, 10), frac(31, 10), 200), frac(26, 10)) == Verdict::Undecided);
    CHECK(certify_greater_than(a, Rational(2)) == Verdict::Certified);
    CHECK(certify_greater_than(a, Rational(3)) == Verdict::Refuted);
    CHECK(to_string(Verdict::Undecided) == "Undecided");
}

TEST_CASE("retry at doubled precision")
{
    int calls = 0;
    // a value whose enclosure only separates from 1 + 10^-25 above 30 digits
    auto f = [&](int digits) {
        ++calls;
        Integer p = 1;
        for (int i = 0; i < digits - 5; ++i) p *= 10;
        Rational half_width = Rational(1) / Rational(p);
        return Interval(Rational(1) - half_width, Rational(1) + half_width, bits_for_digits(digits));
    };
    Rational c = 1 + Rational(1) / Rational(Integer("10000000000000000000000000"));
    auto cert = certify_less(f, c, 20);
    CHECK(cert.verdict == Verdict::Certified);
    CHECK(cert.digits == 40);
    CHECK(calls == 2);

    calls = 0;
    auto again = certify_less(f, Rational(2), 20);
    CHECK(again.verdict == Verdict::Certified);
    CHECK(calls == 1);
    CHECK(certify_greater(f, c, 20).verdict == Verdict::Refuted);
}

}
