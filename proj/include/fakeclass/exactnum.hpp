#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fakeclass {

using Integer = mpz_class;
using Rational = mpq_class;

/* Parse "p/q", "-7", or a decimal literal such as "0.09058" into an exact
 * rational. Throws std::invalid_argument on anything else. */
Rational parse_rational(const std::string& text);

// n/d in lowest terms
inline Rational frac(long n, long d)
{
    Rational r{Integer(n), Integer(d)};
    r.canonicalize();
    return r;
}

// "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& r);

Rational rational_pow(const Rational& base, long exponent);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

using PrimeFactorization = std::vector<std::pair<Integer, unsigned>>;

inline const Integer kFactorCap("100000000000000");   // 1e14

/* Trial division. Rejects zero and anything above the cap in absolute value. */
PrimeFactorization factor(const Integer& n, const Integer& cap = kFactorCap);

Integer recompose(const PrimeFactorization& f);

/* B_n with B_1 = -1/2. Memoized; safe to call from several threads. */
Rational bernoulli(unsigned n);

// B_n(x) = sum_k C(n,k) B_k x^(n-k)
Rational bernoulli_polynomial(unsigned n, const Rational& x);

long euler_phi(long m);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/* An element of Q(zeta_m) written in the power basis 1, z, ..., z^(phi(m)-1)
 * of a fixed primitive m-th root of unity z, reduced modulo Phi_m. */
class CyclotomicRational {
public:
    explicit CyclotomicRational(long m = 1);
    CyclotomicRational(long m, const Rational& r);

    static CyclotomicRational zeta_power(long m, long k);

    long conductor() const { return m_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // throws std::domain_error if a non-rational coordinate is nonzero
    Rational to_rational() const;

    // image under z -> z^a, gcd(a, m) = 1
    CyclotomicRational conjugate(long a) const;
    // the same number viewed in Q(zeta_M), m | M
    CyclotomicRational embed(long M) const;

    CyclotomicRational& operator+=(const CyclotomicRational& o);
    CyclotomicRational& operator-=(const CyclotomicRational& o);
    CyclotomicRational& operator*=(const CyclotomicRational& o);
    CyclotomicRational& operator*=(const Rational& r);

    friend CyclotomicRational operator+(CyclotomicRational a, const CyclotomicRational& b) { return a += b; }
    friend CyclotomicRational operator-(CyclotomicRational a, const CyclotomicRational& b) { return a -= b; }
    friend CyclotomicRational operator*(CyclotomicRational a, const CyclotomicRational& b) { return a *= b; }
    friend CyclotomicRational operator*(CyclotomicRational a, const Rational& r) { return a *= r; }
    friend CyclotomicRational operator*(const Rational& r, CyclotomicRational a) { return a *= r; }
    CyclotomicRational operator-() const;

    bool operator==(const CyclotomicRational& o) const;
    bool operator!=(const CyclotomicRational& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same(const CyclotomicRational& o) const;
    void reduce(std::vector<Rational>& poly) const;

    long m_;
    std::vector<Rational> c_;
};

// integer coefficients of Phi_m, constant first; cached
const std::vector<Integer>& cyclotomic_polynomial(long m);

} // namespace fakeclass
