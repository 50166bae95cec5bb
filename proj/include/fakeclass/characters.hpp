#pragma once

#include "fakeclass/fieldsdb.hpp"
#include "fakeclass/interval.hpp"

#include <optional>
#include <vector>

namespace fakeclass {

/* A Dirichlet character mod f with values in the order-th roots of unity,
 * stored as the exponent table a -> e with chi(a) = zeta_order^e. */
class DirichletCharacter {
public:
    // trivial character mod 1
    DirichletCharacter();

    // from generator values; throws DatabaseError when they are inconsistent
    // or do not generate (Z/fZ)^x
    static DirichletCharacter from_data(const CharacterData& data);
    // the quadratic character of a fundamental discriminant D
    static DirichletCharacter kronecker(long D);

    long modulus() const { return f_; }
    long order() const { return order_; }

    // nullopt when gcd(a, f) > 1
    std::optional<long> exponent(long a) const;
    // chi(a) inside Q(zeta_M); order() must divide M
    CyclotomicRational value(long a, long M) const;
    // chi(a) as a complex enclosure
    ComplexInterval numeric_value(long a, mpfr_prec_t bits) const;

    bool is_trivial() const { return order_ == 1; }
    bool is_even() const;
    bool is_primitive() const;

    bool operator==(const DirichletCharacter& o) const { return f_ == o.f_ && exps_ == o.exps_ && order_ == o.order_; }
    bool operator<(const DirichletCharacter& o) const;

private:
    long f_ = 1;
    long order_ = 1;
    std::vector<long> exps_;      // -1 marks a non-unit
};

// Kronecker symbol (D/n) for n > 0
int kronecker_symbol(long D, long n);

// characters attached to an abelian record; throws UnsupportedField otherwise
std::vector<DirichletCharacter> field_characters(const NumberFieldRecord& K);

} // namespace fakeclass
