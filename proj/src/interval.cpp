#include "fakeclass/interval.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fakeclass {

mpfr_prec_t bits_for_digits(int digits)
{
    if (digits < 1)
        throw std::invalid_argument("precision must be at least one digit");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Interval::Interval(mpfr_prec_t bits) : bits_(bits)
{
    mpfr_init2(lo_, bits_);
    mpfr_init2(hi_, bits_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& r, mpfr_prec_t bits) : Interval(bits)
{
    mpfr_set_q(lo_, r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, r.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t bits) : Interval(bits)
{
    if (lo > hi)
        throw std::invalid_argument("interval endpoints out of order");
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : bits_(o.bits_)
{
    mpfr_init2(lo_, bits_);
    mpfr_init2(hi_, bits_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.bits_)
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o)
{
    if (this != &o) {
        bits_ = o.bits_;
        mpfr_set_prec(lo_, bits_);
        mpfr_set_prec(hi_, bits_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept
{
    std::swap(bits_, o.bits_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

int Interval::digits() const
{
    return static_cast<int>((bits_ - 32) / 3.3219280948873623);
}

bool Interval::contains(const Rational& r) const
{
    return mpfr_cmp_q(lo_, r.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, r.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const
{
    return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

bool Interval::overlaps(const Interval& o) const
{
    return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double Interval::width() const
{
    mpfr_t w;
    mpfr_init2(w, bits_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::width_below(const Rational& eps) const
{
    mpfr_t w;
    mpfr_init2(w, bits_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    bool r = mpfr_cmp_q(w, eps.get_mpq_t()) < 0;
    mpfr_clear(w);
    return r;
}

namespace {

std::string format(const __mpfr_struct* x, int sig, bool up)
{
    char* buf = nullptr;
    if (sig < 2) sig = 2;
    mpfr_asprintf(&buf, up ? "%.*RUe" : "%.*RDe", sig - 1, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

} // namespace

std::string Interval::lo_str(int sig) const { return format(lo_, sig, false); }
std::string Interval::hi_str(int sig) const { return format(hi_, sig, true); }
std::string Interval::str(int sig) const { return "[" + lo_str(sig) + ", " + hi_str(sig) + "]"; }

double Interval::mid_double() const
{
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

Interval& Interval::operator+=(const Interval& o)
{
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& o)
{
    mpfr_t l;
    mpfr_init2(l, bits_);
    mpfr_sub(l, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
    mpfr_swap(lo_, l);
    mpfr_clear(l);
    return *this;
}

Interval& Interval::operator*=(const Interval& o)
{
    mpfr_t a, b, t;
    mpfr_inits2(bits_, a, b, t, static_cast<mpfr_ptr>(nullptr));
    const __mpfr_struct* xs[2] = {lo_, hi_};
    const __mpfr_struct* ys[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, a)) mpfr_set(a, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, b)) mpfr_set(b, t, MPFR_RNDU);
            first = false;
        }
    mpfr_swap(lo_, a);
    mpfr_swap(hi_, b);
    mpfr_clears(a, b, t, static_cast<mpfr_ptr>(nullptr));
    return *this;
}

Interval& Interval::operator/=(const Interval& o)
{
    if (o.contains_zero())
        throw std::domain_error("interval division by an interval containing zero");
    mpfr_t a, b, t;
    mpfr_inits2(bits_, a, b, t, static_cast<mpfr_ptr>(nullptr));
    const __mpfr_struct* xs[2] = {lo_, hi_};
    const __mpfr_struct* ys[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, a)) mpfr_set(a, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, b)) mpfr_set(b, t, MPFR_RNDU);
            first = false;
        }
    mpfr_swap(lo_, a);
    mpfr_swap(hi_, b);
    mpfr_clears(a, b, t, static_cast<mpfr_ptr>(nullptr));
    return *this;
}

Interval& Interval::operator+=(const Rational& r) { return *this += Interval(r, bits_); }
Interval& Interval::operator-=(const Rational& r) { return *this -= Interval(r, bits_); }
Interval& Interval::operator*=(const Rational& r) { return *this *= Interval(r, bits_); }
Interval& Interval::operator/=(const Rational& r)
{
    if (r == 0)
        throw std::domain_error("interval division by zero");
    return *this *= Interval(Rational(1) / r, bits_);
}

Interval Interval::operator-() const
{
    Interval r(bits_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval& Interval::inflate(const Rational& radius)
{
    if (radius < 0)
        throw std::invalid_argument("negative inflation radius");
    mpfr_t r;
    mpfr_init2(r, bits_);
    mpfr_set_q(r, radius.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(lo_, lo_, r, MPFR_RNDD);
    mpfr_add(hi_, hi_, r, MPFR_RNDU);
    mpfr_clear(r);
    return *this;
}

Interval hull(const Interval& a, const Interval& b)
{
    Interval r(a);
    if (mpfr_less_p(b.lo(), r.lo())) mpfr_set(r.lo(), b.lo(), MPFR_RNDD);
    if (mpfr_greater_p(b.hi(), r.hi())) mpfr_set(r.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& x)
{
    if (mpfr_sgn(x.lo()) < 0)
        throw std::domain_error("sqrt of an interval reaching below zero");
    Interval r(x.bits());
    mpfr_sqrt(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

Interval exp(const Interval& x)
{
    Interval r(x.bits());
    mpfr_exp(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_exp(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

Interval log(const Interval& x)
{
    if (!x.is_positive())
        throw std::domain_error("log of an interval not bounded away from zero");
    Interval r(x.bits());
    mpfr_log(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_log(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

Interval pow(const Interval& x, long n)
{
    mpfr_prec_t bits = x.bits();
    if (n == 0)
        return Interval(Rational(1), bits);
    if (n < 0)
        return Interval(Rational(1), bits) / pow(x, -n);
    Interval r(bits);
    if (n % 2 == 1 || mpfr_sgn(x.lo()) >= 0) {
        mpfr_pow_si(r.lo(), x.lo(), n, MPFR_RNDD);
        mpfr_pow_si(r.hi(), x.hi(), n, MPFR_RNDU);
    } else if (mpfr_sgn(x.hi()) <= 0) {
        mpfr_pow_si(r.lo(), x.hi(), n, MPFR_RNDD);
        mpfr_pow_si(r.hi(), x.lo(), n, MPFR_RNDU);
    } else {
        mpfr_t a;
        mpfr_init2(a, bits);
        mpfr_abs(a, x.lo(), MPFR_RNDU);
        if (mpfr_less_p(a, x.hi())) mpfr_set(a, x.hi(), MPFR_RNDU);
        mpfr_set_zero(r.lo(), 1);
        mpfr_pow_si(r.hi(), a, n, MPFR_RNDU);
        mpfr_clear(a);
    }
    return r;
}

Interval pow(const Interval& x, const Interval& y)
{
    return exp(y * log(x));
}

Interval pow(const Interval& x, const Rational& y)
{
    if (y.get_den() == 1 && y.get_num().fits_slong_p())
        return pow(x, y.get_num().get_si());
    return exp(log(x) * y);
}

namespace {

// f has Lipschitz constant 1: evaluate at lo both ways, then widen by the width
Interval lipschitz_trig(const Interval& x, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t))
{
    mpfr_prec_t bits = x.bits();
    Interval r(bits);
    mpfr_t w;
    mpfr_init2(w, bits);
    mpfr_sub(w, x.hi(), x.lo(), MPFR_RNDU);
    f(r.lo(), x.lo(), MPFR_RNDD);
    f(r.hi(), x.lo(), MPFR_RNDU);
    mpfr_sub(r.lo(), r.lo(), w, MPFR_RNDD);
    mpfr_add(r.hi(), r.hi(), w, MPFR_RNDU);
    if (mpfr_cmp_si(r.lo(), -1) < 0) mpfr_set_si(r.lo(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi(), 1) > 0) mpfr_set_si(r.hi(), 1, MPFR_RNDU);
    mpfr_clear(w);
    return r;
}

} // namespace

Interval cos(const Interval& x) { return lipschitz_trig(x, mpfr_cos); }
Interval sin(const Interval& x) { return lipschitz_trig(x, mpfr_sin); }

namespace {

std::mutex const_mutex;
std::map<mpfr_prec_t, Interval> pi_cache, log2pi_cache;

} // namespace

Interval pi_interval(mpfr_prec_t bits)
{
    std::lock_guard<std::mutex> lock(const_mutex);
    auto it = pi_cache.find(bits);
    if (it != pi_cache.end())
        return it->second;
    Interval p(bits);
    mpfr_const_pi(p.lo(), MPFR_RNDD);
    mpfr_const_pi(p.hi(), MPFR_RNDU);
    pi_cache.emplace(bits, p);
    return p;
}

Interval two_pi_interval(mpfr_prec_t bits)
{
    return pi_interval(bits) * Rational(2);
}

Interval log_two_pi_interval(mpfr_prec_t bits)
{
    {
        std::lock_guard<std::mutex> lock(const_mutex);
        auto it = log2pi_cache.find(bits);
        if (it != log2pi_cache.end())
            return it->second;
    }
    Interval l = log(two_pi_interval(bits));
    std::lock_guard<std::mutex> lock(const_mutex);
    log2pi_cache.emplace(bits, l);
    return l;
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& o)
{
    Interval r = re * o.re - im * o.im;
    Interval i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

ComplexInterval& ComplexInterval::operator*=(const Interval& o)
{
    re *= o;
    im *= o;
    return *this;
}

ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b)
{
    return a *= b;
}

ComplexInterval root_of_unity(long k, long m, mpfr_prec_t bits)
{
    k = ((k % m) + m) % m;
    Interval zero(Rational(0), bits), one(Rational(1), bits);
    if (k == 0) return {one, zero};
    if (2 * k == m) return {-one, zero};
    if (4 * k == m) return {zero, one};
    if (4 * k == 3 * m) return {zero, -one};
    Interval angle = two_pi_interval(bits) * frac(k, m);
    return {cos(angle), sin(angle)};
}

} // namespace fakeclass
