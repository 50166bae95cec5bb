#include "fakeclass/localfactors.hpp"
#include "fakeclass/characters.hpp"
#include "fakeclass/errors.hpp"

#include <stdexcept>

namespace fakeclass {

std::string to_string(SplitType t)
{
    switch (t) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
    }
    return "?";
}

bool is_prime(long p)
{
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

Integer ipow(const Integer& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

long powmod(long b, long e, long m)
{
    long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % m);
        b = static_cast<long>((static_cast<__int128>(b) * b) % m);
        e >>= 1;
    }
    return r;
}

bool squarefree(long a)
{
    for (long d = 2; d * d <= a; ++d)
        if (a % (d * d) == 0) return false;
    return true;
}

} // namespace

Integer e_prime_inner_form(long n, const Integer& q, long d)
{
    if (d <= 1 || n % d != 0) throw std::invalid_argument("e_prime_inner_form: need d > 1 dividing n");
    if (q < 2) throw std::invalid_argument("e_prime_inner_form: q must be at least 2");
    Integer num = 1, den = 1;
    for (long j = 1; j <= n; ++j) num *= ipow(q, j) - 1;
    for (long j = 1; j <= n / d; ++j) den *= ipow(q, j * d) - 1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("inner-form factor is not an integer");
    return num / den;
}

bool e_prime_lower_bound_check(long n, const Integer& q, long d)
{
    Integer e = e_prime_inner_form(n, q, d);
    // compare 2d-th powers so the exponent (n^2-2n)(d-1)/2d becomes an integer
    unsigned long two_d = static_cast<unsigned long>(2 * d);
    Integer mid = ipow(q, static_cast<unsigned long>((n * n - 2 * n) * (d - 1)));
    return ipow(e, two_d) > mid && mid > ipow(Integer(n), two_d);
}

SplitType split_behavior(long p, long a)
{
    if (!is_prime(p)) throw std::invalid_argument("split_behavior: p must be prime");
    if (a < 1 || !squarefree(a)) throw std::invalid_argument("split_behavior: a must be square-free and positive");
    if (p == 2) {
        // disc is -a when a = 3 mod 4, else -4a
        if (a % 4 != 3) return SplitType::Ramified;
        return a % 8 == 7 ? SplitType::Split : SplitType::Inert;
    }
    if (a % p == 0) return SplitType::Ramified;
    // Euler's criterion for -a
    long r = powmod(-a, (p - 1) / 2, p);
    return r == 1 ? SplitType::Split : SplitType::Inert;
}

long smallest_split_prime(long a)
{
    for (long p = 2;; ++p)
        if (is_prime(p) && split_behavior(p, a) == SplitType::Split) return p;
}

Rational e_prime_split_product(long n, const Integer& q, SplitType t)
{
    Rational acc = 1;
    Rational qq(q);
    switch (t) {
    case SplitType::Split:
        for (long j = 1; j <= n - 1; ++j) acc *= 1 - 1 / rational_pow(qq, j + 1);
        break;
    case SplitType::Inert:
        for (long j = 1; j <= n - 1; ++j) {
            Rational term = 1 / rational_pow(qq, j + 1);
            acc *= (j % 2 == 1) ? Rational(1 - term) : Rational(1 + term);
        }
        break;
    case SplitType::Ramified:
        for (long j = 1; j <= (n - 1) / 2; ++j) acc *= 1 - 1 / rational_pow(qq, 2 * j);
        break;
    }
    return acc;
}

Integer local_factor(long n, const LocalDatum& v)
{
    if (v.inner_degree > 1) {
        if (v.split != SplitType::Split) throw std::invalid_argument("division algebra at a non-split place");
        return e_prime_inner_form(n, v.q, v.inner_degree);
    }
    if (v.parahoric == ParahoricType::Hyperspecial || v.parahoric == ParahoricType::Special) return 1;
    throw std::invalid_argument("local_factor: only hyperspecial, special and inner-form places have closed forms here");
}

Integer residue_size(const NumberFieldRecord& k, long p)
{
    if (!is_prime(p)) throw std::invalid_argument("residue_size: p must be prime");
    if (k.degree == 1) return p;
    if (k.degree != 2) throw UnsupportedField("residue_size: only Q and quadratic fields");
    int kr = kronecker_symbol(k.disc.get_si(), p);
    return kr == -1 ? Integer(p * p) : Integer(p);
}

} // namespace fakeclass
