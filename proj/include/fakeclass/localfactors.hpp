#pragma once

#include "fakeclass/exactnum.hpp"
#include "fakeclass/fieldsdb.hpp"

#include <string>

namespace fakeclass {

enum class SplitType { Split, Inert, Ramified };
enum class ParahoricType { Hyperspecial, Special, MaximalInner, Other };

std::string to_string(SplitType t);

/* One finite place: residue size, behaviour in ell, inner degree d_v (1 unless
 * the place carries a division algebra) and parahoric type. `exceeds_n` marks
 * non-hyperspecial split places whose factor is only known to exceed n. */
struct LocalDatum {
    Integer q = 2;
    SplitType split = SplitType::Split;
    long inner_degree = 1;
    ParahoricType parahoric = ParahoricType::Hyperspecial;
    bool exceeds_n = false;
};

// prod_{j=1}^{n} (q^j - 1) / prod_{j=1}^{n/d} (q^{jd} - 1); exact integer
Integer e_prime_inner_form(long n, const Integer& q, long d);

// e' > q^((n^2-2n)(d-1)/2d) > n, decided with exact integer powers
bool e_prime_lower_bound_check(long n, const Integer& q, long d);

// behaviour of the prime p in Q(sqrt(-a)), a square-free
SplitType split_behavior(long p, long a);

long smallest_split_prime(long a);

/* The factor turning e into e':
 *   split     prod_{j=1}^{n-1} (1 - q^-(j+1))
 *   inert     prod_{j=1}^{n-1} (1 - (-1)^(j+1) q^-(j+1))
 *   ramified  prod_{j=1}^{(n-1)/2} (1 - q^-2j) */
Rational e_prime_split_product(long n, const Integer& q, SplitType t);

// e'(P_v) for the cases the pipeline uses: 1 for hyperspecial/special, the
// inner-form quotient for a division algebra place
Integer local_factor(long n, const LocalDatum& v);

// residue field size of k at a place above p (k = Q or quadratic)
Integer residue_size(const NumberFieldRecord& k, long p);

bool is_prime(long p);

} // namespace fakeclass
