#include "fakeclass/characters.hpp"
#include "fakeclass/errors.hpp"

#include <deque>

namespace fakeclass {

DirichletCharacter::DirichletCharacter() : f_(1), order_(1), exps_{0} {}

DirichletCharacter DirichletCharacter::from_data(const CharacterData& data)
{
    DirichletCharacter c;
    c.f_ = data.modulus;
    long ord = 1;
    for (const auto& gv : data.generator_values) ord = lcm_long(ord, gv.m);
    c.order_ = ord;
    c.exps_.assign(static_cast<std::size_t>(c.f_), -1);
    // residue 0 is the unit class when f = 1
    c.exps_[1 % c.f_] = 0;

    std::deque<long> queue{1 % c.f_};
    while (!queue.empty()) {
        long a = queue.front();
        queue.pop_front();
        for (const auto& gv : data.generator_values) {
            long e = ((gv.e % gv.m + gv.m) % gv.m) * (ord / gv.m);
            long b = (a * (gv.g % c.f_)) % c.f_;
            long eb = (c.exps_[a] + e) % ord;
            if (c.exps_[b] == -1) {
                c.exps_[b] = eb;
                queue.push_back(b);
            } else if (c.exps_[b] != eb) {
                throw DatabaseError("character mod " + std::to_string(c.f_) + ": generator values are inconsistent");
            }
        }
    }
    for (long a = 0; a < c.f_; ++a)
        if (gcd_long(a, c.f_) == 1 && c.exps_[a] == -1)
            throw DatabaseError("character mod " + std::to_string(c.f_) + ": generators do not span the unit group");

    // the true order may be smaller than the lcm of the declared ones
    long g = ord;
    for (long e : c.exps_)
        if (e >= 0) g = gcd_long(g, e);
    if (g > 1) {
        for (long& e : c.exps_)
            if (e >= 0) e /= g;
        c.order_ = ord / g;
    }
    return c;
}

int kronecker_symbol(long D, long n)
{
    if (n <= 0) throw std::invalid_argument("kronecker_symbol: n must be positive");
    int result = 1;
    // factor out twos
    while (n % 2 == 0) {
        n /= 2;
        long r = ((D % 8) + 8) % 8;
        if (r % 2 == 0) return 0;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (D/n), n odd
    long a = ((D % n) + n) % n;
    long m = n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

DirichletCharacter DirichletCharacter::kronecker(long D)
{
    DirichletCharacter c;
    long f = D < 0 ? -D : D;
    if (f == 1) return c;
    c.f_ = f;
    c.order_ = 2;
    c.exps_.assign(static_cast<std::size_t>(f), -1);
    for (long a = 1; a < f; ++a) {
        int k = kronecker_symbol(D, a);
        if (k != 0) c.exps_[a] = k == 1 ? 0 : 1;
    }
    return c;
}

std::optional<long> DirichletCharacter::exponent(long a) const
{
    long r = ((a % f_) + f_) % f_;
    long e = exps_[static_cast<std::size_t>(r)];
    if (e < 0) return std::nullopt;
    return e;
}

CyclotomicRational DirichletCharacter::value(long a, long M) const
{
    if (M % order_ != 0) throw std::invalid_argument("character order does not divide the target conductor");
    auto e = exponent(a);
    if (!e) return CyclotomicRational(M, 0);
    return CyclotomicRational::zeta_power(M, *e * (M / order_));
}

ComplexInterval DirichletCharacter::numeric_value(long a, mpfr_prec_t bits) const
{
    auto e = exponent(a);
    if (!e) return ComplexInterval(Interval(Rational(0), bits), Interval(Rational(0), bits));
    return root_of_unity(*e, order_, bits);
}

bool DirichletCharacter::is_even() const
{
    return *exponent(-1) == 0;
}

bool DirichletCharacter::is_primitive() const
{
    if (f_ == 1) return true;
    if (f_ == 2) return false;
    std::vector<long> primes;
    long x = f_;
    for (long p = 2; p * p <= x; ++p)
        if (x % p == 0) {
            primes.push_back(p);
            while (x % p == 0) x /= p;
        }
    if (x > 1) primes.push_back(x);
    for (long p : primes) {
        long d = f_ / p;
        // induced from mod d iff chi is trivial on units congruent to 1 mod d
        bool induced = true;
        for (long a = 1; a < f_ && induced; a += d)
            if (gcd_long(a, f_) == 1 && *exponent(a) != 0) induced = false;
        if (induced) return false;
    }
    return true;
}

bool DirichletCharacter::operator<(const DirichletCharacter& o) const
{
    if (f_ != o.f_) return f_ < o.f_;
    if (order_ != o.order_) return order_ < o.order_;
    return exps_ < o.exps_;
}

std::vector<DirichletCharacter> field_characters(const NumberFieldRecord& K)
{
    if (!K.abelian || !K.characters)
        throw UnsupportedField("field " + K.display_name() + " is not abelian; no character data");
    std::vector<DirichletCharacter> out;
    for (const auto& c : *K.characters) out.push_back(DirichletCharacter::from_data(c));
    return out;
}

} // namespace fakeclass
