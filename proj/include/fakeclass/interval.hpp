#pragma once

#include "fakeclass/exactnum.hpp"

#include <mpfr.h>

#include <string>

namespace fakeclass {

inline constexpr int kDefaultDigits = 60;

// working bits for a requested number of decimal digits, with guard bits
mpfr_prec_t bits_for_digits(int digits);

/* Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
 * lo toward -inf and hi toward +inf, so the true result is always enclosed. */
class Interval {
public:
    explicit Interval(mpfr_prec_t bits = bits_for_digits(kDefaultDigits));
    Interval(const Rational& r, mpfr_prec_t bits);
    Interval(const Rational& lo, const Rational& hi, mpfr_prec_t bits);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    mpfr_prec_t bits() const { return bits_; }
    int digits() const;

    const __mpfr_struct* lo() const { return lo_; }
    const __mpfr_struct* hi() const { return hi_; }
    __mpfr_struct* lo() { return lo_; }
    __mpfr_struct* hi() { return hi_; }

    bool contains(const Rational& r) const;
    bool contains(const Interval& o) const;
    bool overlaps(const Interval& o) const;
    bool is_positive() const;        // lo > 0
    bool is_negative() const;        // hi < 0
    bool contains_zero() const;

    // upper bound on hi - lo
    double width() const;
    // hi - lo rounded up, as an interval-free exact comparison helper
    bool width_below(const Rational& eps) const;

    // decimal endpoints rounded outward, `sig` significant digits
    std::string lo_str(int sig = 30) const;
    std::string hi_str(int sig = 30) const;
    std::string str(int sig = 30) const;
    double mid_double() const;

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);
    Interval& operator+=(const Rational& r);
    Interval& operator-=(const Rational& r);
    Interval& operator*=(const Rational& r);
    Interval& operator/=(const Rational& r);

    Interval operator-() const;

    // widen both ends by a nonnegative exact radius
    Interval& inflate(const Rational& radius);

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
    friend Interval operator+(Interval a, const Rational& b) { return a += b; }
    friend Interval operator-(Interval a, const Rational& b) { return a -= b; }
    friend Interval operator*(Interval a, const Rational& b) { return a *= b; }
    friend Interval operator/(Interval a, const Rational& b) { return a /= b; }
    friend Interval operator*(const Rational& b, Interval a) { return a *= b; }

private:
    mpfr_prec_t bits_;
    mpfr_t lo_, hi_;
};

Interval hull(const Interval& a, const Interval& b);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval pow(const Interval& x, long n);
Interval pow(const Interval& x, const Interval& y);     // x > 0
Interval pow(const Interval& x, const Rational& y);     // x > 0 unless y is an integer
Interval cos(const Interval& x);
Interval sin(const Interval& x);

// cached per working precision
Interval pi_interval(mpfr_prec_t bits);
Interval two_pi_interval(mpfr_prec_t bits);
Interval log_two_pi_interval(mpfr_prec_t bits);

/* Complex interval as a rectangle; enough for character sums. */
struct ComplexInterval {
    Interval re, im;
    explicit ComplexInterval(mpfr_prec_t bits) : re(bits), im(bits) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    ComplexInterval& operator+=(const ComplexInterval& o);
    ComplexInterval& operator*=(const ComplexInterval& o);
    ComplexInterval& operator*=(const Interval& o);
};

ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b);

// e^(2 pi i k / m)
ComplexInterval root_of_unity(long k, long m, mpfr_prec_t bits);

} // namespace fakeclass
