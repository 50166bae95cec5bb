#include "fakeclass/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace fakeclass {

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw std::invalid_argument("empty rational");

    auto slash = s.find('/');
    auto dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            if (dot != std::string::npos)
                throw std::invalid_argument("mixed decimal and fraction");
            Integer num(s.substr(0, slash), 10), den(s.substr(slash + 1), 10);
            if (den == 0)
                throw std::invalid_argument("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        if (dot != std::string::npos) {
            std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
            bool neg = !intpart.empty() && intpart[0] == '-';
            if (neg || (!intpart.empty() && intpart[0] == '+'))
                intpart = intpart.substr(1);
            if (intpart.empty()) intpart = "0";
            if (frac.empty()) frac = "0";
            if (frac.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad decimal");
            Integer num(intpart + frac, 10);
            Integer den(1);
            for (size_t i = 0; i < frac.size(); ++i) den *= 10;
            Rational r(num, den);
            r.canonicalize();
            return neg ? Rational(-r) : r;
        }
        return Rational(Integer(s, 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("zero to a negative power");
        return rational_pow(Rational(1) / base, -exponent);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

PrimeFactorization factor(const Integer& n, const Integer& cap)
{
    if (n == 0)
        throw std::invalid_argument("factor: zero has no factorization");
    Integer m = abs(n);
    if (m > cap)
        throw std::domain_error("factor: " + m.get_str() + " exceeds trial-division cap " + cap.get_str());

    PrimeFactorization out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (Integer p = 5; p * p <= m; p += 6) {
        strip(p);
        Integer q = p + 2;
        strip(q);
    }
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

Integer recompose(const PrimeFactorization& f)
{
    Integer r = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

namespace {

std::mutex bern_mutex;
std::vector<Rational> bern_even;   // bern_even[k] = B_{2k}

// tangent numbers give every B_{2k} up to 2*kmax with integer work only
void extend_bernoulli(unsigned kmax)
{
    if (bern_even.size() > kmax)
        return;
    unsigned n = std::max({kmax, 2 * static_cast<unsigned>(bern_even.size()), 8u});
    std::vector<Integer> T(n + 1);
    T[1] = 1;
    for (unsigned k = 2; k <= n; ++k)
        T[k] = (k - 1) * T[k - 1];
    for (unsigned k = 2; k <= n; ++k)
        for (unsigned j = k; j <= n; ++j)
            T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];

    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        Integer p2 = Integer(1) << (2 * k);
        Rational v(Integer(2 * k) * T[k], p2 * (p2 - 1));
        v.canonicalize();
        b[k] = (k % 2 == 1) ? v : Rational(-v);
    }
    bern_even = std::move(b);
}

} // namespace

Rational bernoulli(unsigned n)
{
    if (n == 1)
        return Rational(-1, 2);
    if (n % 2 == 1)
        return 0;
    std::lock_guard<std::mutex> lock(bern_mutex);
    extend_bernoulli(n / 2);
    return bern_even[n / 2];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x)
{
    Rational sum = 0, xp = 1;
    // accumulate from k = n downwards so the power of x grows
    for (long k = n; k >= 0; --k) {
        Rational bk = bernoulli(static_cast<unsigned>(k));
        if (bk != 0)
            sum += Rational(binomial(n, static_cast<unsigned long>(k))) * bk * xp;
        xp *= x;
    }
    return sum;
}

long gcd_long(long a, long b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b)
{
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

long euler_phi(long m)
{
    if (m <= 0)
        throw std::invalid_argument("euler_phi: m must be positive");
    long r = m, x = m;
    for (long p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) x /= p;
            r -= r / p;
        }
    }
    if (x > 1) r -= r / x;
    return r;
}

} // namespace fakeclass
