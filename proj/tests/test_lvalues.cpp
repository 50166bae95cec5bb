#include "doctest.h"

#include "fakeclass/characters.hpp"
#include "fakeclass/errors.hpp"
#include "fakeclass/lvalues.hpp"

using namespace fakeclass;

namespace {

const FieldDatabase& db() { return FieldDatabase::bundled(); }
const NumberFieldRecord& F(const char* n) { return db().get(n); }

Rational rat(const CyclotomicRational& c)
{
    REQUIRE(c.is_rational());
    return c.to_rational();
}

} // namespace

TEST_SUITE("lvalues") {

TEST_CASE("generalized Bernoulli numbers")
{
    auto one = DirichletCharacter::kronecker(1);
    CHECK(rat(generalized_bernoulli(one, 2)) == frac(1, 6));

    // direct finite sum: B_{1,chi} = sum chi(a) B_1(a/f) for conductor 4
    auto chi4 = DirichletCharacter::kronecker(-4);
    Rational direct = bernoulli_polynomial(1, frac(1, 4)) - bernoulli_polynomial(1, frac(3, 4));
    CHECK(rat(generalized_bernoulli(chi4, 1)) == direct);
    CHECK(direct == frac(-1, 2));

    auto chi7 = DirichletCharacter::kronecker(-7);
    CHECK(-rat(generalized_bernoulli(chi7, 3)) / 3 == frac(-16, 7));
}

TEST_CASE("Dirichlet L at negative integers")
{
    CHECK(rat(dirichlet_L_negative(DirichletCharacter::kronecker(1), -1)) == frac(-1, 12));
    auto chi7 = DirichletCharacter::kronecker(-7);
    CHECK(rat(dirichlet_L_negative(chi7, -2)) == frac(-16, 7));
    CHECK(rat(dirichlet_L_negative(chi7, -4)) == Rational(32));
    // parity zero
    CHECK(rat(dirichlet_L_negative(chi7, -1)) == 0);
}

TEST_CASE("Dedekind zeta values")
{
    CHECK(dedekind_zeta_negative(F("Q"), -1) == frac(-1, 12));
    CHECK(dedekind_zeta_negative(F("Q-sqrt3"), -1) == frac(1, 6));
    CHECK(dedekind_zeta_negative(F("Q-sqrt5"), -3) == frac(1, 60));
    CHECK(dedekind_zeta_negative(F("cubic-49"), -1) == frac(-1, 21));
    CHECK(dedekind_zeta_negative(F("Q-sqrt5"), -2) == 0);
}

TEST_CASE("relative L values")
{
    CHECK(hecke_L_relative(F("Q-sqrt3"), F("quartic-144"), -2) == frac(1, 9));
    CHECK(hecke_L_relative(F("Q-sqrt5"), F("Q-zeta5"), -4) == frac(1172, 25));
    CHECK(hecke_L_relative(F("quartic-1125"), F("Q-zeta15"), -2) == frac(128, 45));
    CHECK(hecke_L_relative(F("Q"), F("Q-sqrt-7"), -2) == frac(-16, 7));
}

TEST_CASE("non-abelian field without character data")
{
    CHECK_THROWS_AS(dedekind_zeta_negative(F("quartic-725"), -1), UnsupportedField);
}

TEST_CASE("Shintani engine for the non-abelian octic over Q(sqrt2)")
{
    // zeta_l(-1)/zeta_k(-1) reproduces through the product R(3) = 1/3
    const auto& k = F("Q-sqrt2");
    const auto& ell = F("Q-sqrt(-7+4sqrt2)");
    Rational z1 = dedekind_zeta_negative(k, -1);
    Rational l2 = hecke_L_relative(k, ell, -2);
    CHECK(Rational(1, 16) * z1 * l2 == frac(1, 3));
}

TEST_CASE("functional equations")
{
    CHECK(functional_equation_check(F("Q"), &F("Q-sqrt-7"), 1, 40).verdict == Verdict::Certified);
    CHECK(functional_equation_check(F("Q-sqrt5"), nullptr, 1, 40).verdict == Verdict::Certified);
    CHECK(functional_equation_check(F("Q"), nullptr, 2, 40, Rational(-1)).verdict == Verdict::Refuted);
}

TEST_CASE("character orthogonality")
{
    for (const auto& r : db().records()) {
        if (!r.abelian) continue;
        for (const auto& chi : field_characters(r)) {
            if (chi.is_trivial()) continue;
            CyclotomicRational s(chi.order());
            for (long a = 1; a <= chi.modulus(); ++a)
                if (chi.exponent(a)) s += chi.value(a, chi.order());
            CAPTURE(r.label);
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("Euler product encloses the factored zeta")
{
    for (const char* name : {"Q-sqrt-7", "Q-sqrt5", "Q-zeta5"}) {
        CAPTURE(name);
        const auto& K = F(name);
        Interval ep = euler_product_zeta(K, 2, 30);
        Interval ch = dedekind_zeta_positive(K, 2, 30);
        CHECK(ep.overlaps(ch));
    }
}

}
