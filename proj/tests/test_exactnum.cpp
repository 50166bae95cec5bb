#include "doctest.h"

#include "fakeclass/exactnum.hpp"

#include <random>
#include <stdexcept>

using namespace fakeclass;

namespace {

// B_n from sum_{k<n} C(n+1,k) B_k = -(n+1) B_n, independent of the library path
std::vector<Rational> bernoulli_by_recurrence(unsigned nmax)
{
    std::vector<Rational> b(nmax + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= nmax; ++n) {
        Rational s = 0;
        for (unsigned k = 0; k < n; ++k)
            s += Rational(binomial(n + 1, k)) * b[k];
        b[n] = -s / (n + 1);
    }
    return b;
}

} // namespace

TEST_SUITE("exactnum") {

TEST_CASE("parse and print rationals")
{
    CHECK(parse_rational("0.09058") == frac(9058, 100000));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("4/-6") == frac(-2, 3));
    CHECK(parse_rational("1.26") == frac(63, 50));
    CHECK(to_string(frac(-16, 7)) == "-16/7");
    CHECK(to_string(Rational(32)) == "32");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("frac handles negative denominators")
{
    CHECK(frac(3, -6) == frac(-1, 2));
    CHECK(frac(3, -6).get_den() == 2);
}

TEST_CASE("factor")
{
    auto f = factor(Integer(497664));   // 2^11 3^5
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 11);
    CHECK(f[1].first == 3);
    CHECK(f[1].second == 5);
    CHECK(factor(Integer(1)).empty());
    CHECK(recompose(factor(Integer(23 * 41 * 41 * 61))) == 23 * 41 * 41 * 61);
    CHECK(factor(Integer(-12)).size() == 2);
    CHECK_THROWS_AS(factor(Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(factor(Integer("1000000000000000000")), std::domain_error);
}

TEST_CASE("bernoulli numbers agree with the recurrence up to 60")
{
    auto ref = bernoulli_by_recurrence(60);
    for (unsigned n = 0; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(bernoulli(n) == ref[n]);
    }
    CHECK(bernoulli(12) == frac(-691, 2730));
}

TEST_CASE("bernoulli polynomials")
{
    CHECK(bernoulli_polynomial(1, frac(1, 2)) == 0);
    CHECK(bernoulli_polynomial(2, 0) == frac(1, 6));
    CHECK(bernoulli_polynomial(3, frac(1, 3)) == frac(1, 27));
    // B_n(1 - x) = (-1)^n B_n(x)
    for (unsigned n = 1; n < 12; ++n) {
        Rational x = frac(2, 7);
        Rational lhs = bernoulli_polynomial(n, 1 - x), rhs = bernoulli_polynomial(n, x);
        CHECK(lhs == (n % 2 ? Rational(-rhs) : rhs));
    }
}

TEST_CASE("arithmetic helpers")
{
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(6) == 720);
    CHECK(rational_pow(frac(2, 3), -2) == frac(9, 4));
    CHECK(euler_phi(15) == 8);
    CHECK(lcm_long(4, 6) == 12);
    CHECK(gcd_long(-12, 18) == 6);
}

TEST_CASE("cyclotomic arithmetic")
{
    auto z = CyclotomicRational::zeta_power(5, 1);
    auto s = CyclotomicRational(5, 0);
    for (long k = 0; k < 5; ++k)
        s += CyclotomicRational::zeta_power(5, k);
    CHECK(s.is_zero());

    auto z3 = CyclotomicRational::zeta_power(3, 1);
    auto w = z3 + z3.conjugate(2);
    CHECK(w.is_rational());
    CHECK(w.to_rational() == -1);
    CHECK_THROWS_AS(z3.to_rational(), std::domain_error);

    auto e = z3.embed(12);
    CHECK(e == CyclotomicRational::zeta_power(12, 4));
    CHECK(z * z.conjugate(4) == CyclotomicRational(5, 1));
    auto phi12 = cyclotomic_polynomial(12);
    CHECK(phi12 == std::vector<Integer>{1, 0, -1, 0, 1});
}

}
