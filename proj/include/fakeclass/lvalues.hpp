#pragma once

#include "fakeclass/analytic.hpp"
#include "fakeclass/characters.hpp"
#include "fakeclass/fieldsdb.hpp"

namespace fakeclass {

// B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f), in Q(zeta_order); memoized
CyclotomicRational generalized_bernoulli(const DirichletCharacter& chi, unsigned n);

// L(s, chi) for s = 1 - n <= 0, as -B_{n,chi}/n
CyclotomicRational dirichlet_L_negative(const DirichletCharacter& chi, long s);

// zeta_K(s) for s <= 0, product over the characters of K
Rational dedekind_zeta_negative(const NumberFieldRecord& K, long s);

/* zeta_ell(s)/zeta_k(s) at s <= 0 for a quadratic extension ell/k. Abelian
 * pairs use the characters of ell not coming from k; a non-abelian ell with
 * Hecke data over a real quadratic k goes through the cone engine. */
Rational hecke_L_relative(const NumberFieldRecord& k, const NumberFieldRecord& ell, long s);

// characters of ell that do not factor through k
std::vector<DirichletCharacter> relative_characters(const NumberFieldRecord& k, const NumberFieldRecord& ell);

// L(s, chi) for an integer s >= 2 via Hurwitz zeta sums
ComplexInterval dirichlet_L_positive(const DirichletCharacter& chi, long s, int digits);

// zeta_K(s), s >= 2, as a real enclosure from the character product
Interval dedekind_zeta_positive(const NumberFieldRecord& K, long s, int digits);

// L_{ell|k}(s), s >= 2, from the relative characters
Interval hecke_L_positive(const NumberFieldRecord& k, const NumberFieldRecord& ell, long s, int digits);

/* zeta_K(s) from the Euler product over primes below `prime_bound`; the tail
 * factor lies in [1, exp(T)], T = d (P^-s + P^(1-s)/(s-1)) / (1 - P^-s). */
Interval euler_product_zeta(const NumberFieldRecord& K, long s, int digits, long prime_bound = 10000);

struct FunctionalEquationResult {
    Verdict verdict;
    Interval lhs_zeta, rhs_zeta;            // zeta_k(2j) numeric vs from zeta_k(1-2j)
    std::optional<Interval> lhs_L, rhs_L;   // L_{ell|k}(2j+1) numeric vs from L_{ell|k}(-2j)
};

/* Both functional equations at j. `scale` multiplies the exact negative-side
 * values before comparison and exists for fault injection. Certified when the
 * enclosures overlap, Refuted when they are disjoint. */
FunctionalEquationResult functional_equation_check(const NumberFieldRecord& k, const NumberFieldRecord* ell, int j,
                                                   int digits, const Rational& scale = 1);

} // namespace fakeclass
