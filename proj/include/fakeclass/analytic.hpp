#pragma once

#include "fakeclass/interval.hpp"

#include <functional>
#include <string>

namespace fakeclass {

enum class Verdict { Certified, Refuted, Undecided };

std::string to_string(Verdict v);

// Gamma(s) for rational s > 0, Stirling series after an upward shift
Interval gamma_interval(const Rational& s, int digits = kDefaultDigits);

// zeta(s, a) for rational s > 1 and rational a > 0, Euler-Maclaurin with tail bound
Interval hurwitz_zeta_interval(const Rational& s, const Rational& a, int digits = kDefaultDigits);

// zeta(s) for rational s > 1
Interval zeta_interval(const Rational& s, int digits = kDefaultDigits);

/* Certified iff hi(x) < c, Refuted iff lo(x) >= c, Undecided otherwise. */
Verdict certify_less_than(const Interval& x, const Rational& c);
// Certified iff lo(x) > c, Refuted iff hi(x) <= c
Verdict certify_greater_than(const Interval& x, const Rational& c);

/* Evaluate `f` at `digits`; if the comparison is Undecided, retry once at
 * doubled precision. A second Undecided is returned as is, the caller decides
 * whether that is an error. */
struct Certification {
    Verdict verdict;
    Interval value;
    int digits;
};

Certification certify_less(const std::function<Interval(int)>& f, const Rational& c, int digits);
Certification certify_greater(const std::function<Interval(int)>& f, const Rational& c, int digits);

} // namespace fakeclass
