#include "doctest.h"

#include "fakeclass/bounds.hpp"
#include "fakeclass/fieldsdb.hpp"
#include "fakeclass/lvalues.hpp"

using namespace fakeclass;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

bool below(const Interval& x, const char* c) { return certify_less_than(x, Q(c)) == Verdict::Certified; }
bool above(const Interval& x, const char* c) { return certify_greater_than(x, Q(c)) == Verdict::Certified; }
bool separated(const Interval& small, const Interval& big) { return mpfr_cmp(small.hi(), big.lo()) < 0; }

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("E0")
{
    Interval e = E0(5, 1);
    CHECK(e.overlaps(sqrt(zeta_interval(2) * zeta_interval(4))));
    Interval e4 = E0(5, 4);
    CHECK(above(e4, "1"));
    CHECK(separated(e4, zeta_interval(8)));
    CHECK(above(E0(15, 1), "1"));
}

TEST_CASE("f bounds")
{
    CHECK(below(f_bound(11, 2, Q("1.8")), "2.6"));
    CHECK(below(f_bound(5, 4, 1), "6.4"));
    CHECK(below(f_bound(7, 2, Q("1.2")), "4.3"));
}

TEST_CASE("relative discriminant bounds")
{
    CHECK(below(p2(7, 2, Integer(17), Q("0.09058"), Q("1.26")), "1.1"));
    CHECK(below(p3(5, 2, Integer(33), 1), "0.77"));
    CHECK(below(p2(5, 2, Integer(5), frac(1, 8), 1), "35.5"));
}

TEST_CASE("phi bounds")
{
    CHECK(below(pow(phi_bound(9, 2, Q("0.09058"), Q("1.5")), 4), "97"));
    CHECK(below(phi_bound(5, 2, Q("0.09058"), 1), "6.7"));
    CHECK(below(pow(phi_bound(5, 3, frac(1, 8), 1), 3), "243"));
}

TEST_CASE("discriminant and lambda bounds")
{
    CHECK(below(d_bound(5, frac(1, 2)), "37.4"));
    CHECK(below(d_bound(9, 2), "9.4"));
    CHECK(below(d_bound(19, 2), "2.2"));
    CHECK(below(lambda_bound(5, 1), "17.6"));
    CHECK(below(lambda_bound(9, 3), "8.1"));
    CHECK(below(lambda_bound(15, 3), "3.3"));
}

TEST_CASE("division algebra bound")
{
    CHECK(above(L_elimination(5, 5, 2, 1), "7"));
    CHECK(below(L_elimination(5, 5, 3, 1), "7"));
    CHECK(below(L_elimination(7, 7, 2, 1), "7"));
    CHECK(below(L_elimination(5, 5, 5, 1), "4"));
    CHECK_THROWS(L_elimination(5, 3, 2, 1));
}

TEST_CASE("class number bound")
{
    CHECK(above(class_number_bound(Integer(49), 1, 1), "0"));
    CHECK(separated(class_number_bound(Integer(400), 1, 1), class_number_bound(Integer(49), 1, 1)));
    // h = 1 for the 5th cyclotomic field
    CHECK(below(class_number_bound(Integer(125), 2, 1), "1"));
}

TEST_CASE("monotone in d")
{
    for (long n = 5; n <= 15; n += 2)
        for (long delta : {1, 2, 3})
            for (long d = 1; d <= 5; ++d) {
                CAPTURE(n);
                CAPTURE(d);
                CHECK(separated(f_bound(n, d + 1, delta), f_bound(n, d, delta)));
            }
}

TEST_CASE("monotone in q")
{
    for (long n : {5, 7}) {
        const long qs[] = {2, 3, 5, 7, 11};
        for (int i = 0; i + 1 < 5; ++i) CHECK(separated(L_elimination(n, n, qs[i + 1], 1), L_elimination(n, n, qs[i], 1)));
    }
}

TEST_CASE("divisor domination at n = 15")
{
    for (long q : {2, 3, 5, 7}) {
        CAPTURE(q);
        CHECK(separated(L_elimination(15, 15, q, 1), L_elimination(15, 3, q, 1)));
        CHECK(separated(L_elimination(15, 15, q, 1), L_elimination(15, 5, q, 1)));
    }
}

TEST_CASE("discriminant bound decreasing for n >= 19")
{
    CHECK(separated(d_bound(21, 2), d_bound(19, 2)));
    CHECK(separated(d_bound(23, 2), d_bound(21, 2)));
}

TEST_CASE("zeta_k(j)^(1/2) L(j+1) > 1 for Q(sqrt-7)")
{
    const auto& db = FieldDatabase::bundled();
    for (long j : {2, 4}) {
        Interval v = sqrt(zeta_interval(j, 40)) * hecke_L_positive(db.get("Q"), db.get("Q-sqrt-7"), j + 1, 40);
        CHECK(above(v, "1"));
    }
}

TEST_CASE("delta grid search")
{
    auto g = delta_grid();
    REQUIRE(g.size() > 10);
    CHECK(g.front() == Q("0.02"));
    CHECK(g.back() == 10);
    auto best = minimize_over_delta([](const Rational& d) { return f_bound(11, 2, d, 30); });
    CHECK(mpfr_cmp(best.value.hi(), f_bound(11, 2, Q("1.8"), 30).hi()) <= 0);
}

}
