#include "doctest.h"

#include "fakeclass/classifier.hpp"

#include <algorithm>
#include <set>

using namespace fakeclass;

namespace {

const FieldDatabase& db() { return FieldDatabase::bundled(); }
const NumberFieldRecord& F(const char* n) { return db().get(n); }

const LedgerEntry* find(const std::vector<LedgerEntry>& v, const std::string& id)
{
    auto it = std::find_if(v.begin(), v.end(), [&](const LedgerEntry& e) { return e.id == id; });
    return it == v.end() ? nullptr : &*it;
}

std::vector<long> candidate_as(long n)
{
    Classifier c(db(), 60);
    std::vector<FieldCandidate> out;
    c.run_field_stage(n, out);
    std::vector<long> as;
    for (const auto& x : out) as.push_back(x.a);
    return as;
}

} // namespace

TEST_SUITE("classifier") {

TEST_CASE("R values")
{
    CHECK(compute_R(5, F("Q-sqrt3"), F("quartic-144")) == frac(23, 2048 * 243));
    CHECK(compute_R(5, F("Q-sqrt2"), F("Q-zeta8")) == frac(11 * 19, 32768));
    CHECK(compute_R(5, F("Q"), F("Q-sqrt-7")) == frac(1, 315));
}

TEST_CASE("numerator prime check")
{
    auto a = proposition1_check(frac(23, 497664), 5);
    CHECK_FALSE(a.pass);
    CHECK(a.witness == 23);
    CHECK(proposition1_check(frac(1, 315), 5).pass);
    auto b = proposition1_check(frac(113, 63), 5);
    CHECK_FALSE(b.pass);
    CHECK(b.witness == 113);
    CHECK(proposition1_check(frac(25, 3), 5).pass);
}

TEST_CASE("covolume")
{
    LocalDatum v;
    v.q = 2;
    v.inner_degree = 5;
    v.parahoric = ParahoricType::MaximalInner;
    CHECK(covolume(5, F("Q"), F("Q-sqrt-7"), {v}) == 1);
    CHECK(covolume(5, F("Q"), F("Q-sqrt-7"), {}) == frac(1, 315));
    LocalDatum w;
    w.q = 4;
    w.inner_degree = 3;
    w.parahoric = ParahoricType::MaximalInner;
    CHECK(covolume(3, F("Q-sqrt5"), F("Q-sqrt-3-sqrt5"), {w}) == frac(1, 3));
}

TEST_CASE("Euler characteristic and index bound")
{
    CHECK(euler_characteristic(1, 5, 1, 1) == 5);
    CHECK(euler_characteristic(frac(1, 3), 3, 1, 2) == 3);
    CHECK(euler_characteristic(1, 3, 1, 2) == 9);
    CHECK(euler_characteristic(1, 5, 2, 1) == 10);
    CHECK(index_bound(5, 1, 1, 1) == 25);
    CHECK(index_bound(3, 2, 0, 1) == 9);
    CHECK(index_bound(5, 1, 2, 3) == 375);
}

TEST_CASE("degree stage for n = 13 is a single cap")
{
    Classifier c(db(), 60);
    auto v = c.run_degree_stage(13);
    REQUIRE(v.size() == 1);
    CHECK(v[0].verdict == CaseVerdict::Eliminated);
}

TEST_CASE("degree stage for n = 7 removes the two pairs by a numerator prime")
{
    Classifier c(db(), 60);
    auto v = c.run_degree_stage(7);
    for (const auto& e : v) CHECK(e.verdict == CaseVerdict::Eliminated);
    const auto* a = find(v, "degree:n=7:d=2:k=2.2.5.1:l=4.0.125.1");
    const auto* b = find(v, "degree:n=7:d=2:k=2.2.12.1:l=4.0.144.1");
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->reason == "numerator prime");
    CHECK(b->reason == "numerator prime");
}

TEST_CASE("degree stage for n = 5, d = 2 leaves exactly the eight C pairs to the numerator-prime test")
{
    Classifier c(db(), 60);
    auto v = c.run_degree_stage(5);
    std::set<std::string> got;
    for (const auto& e : v)
        if (e.reason == "numerator prime" && e.id.rfind("degree:n=5:d=2:", 0) == 0) got.insert(e.id);
    std::set<std::string> want;
    for (auto [k, l] : std::vector<std::pair<const char*, const char*>>{{"2.2.28.1", "4.0.784.1"},
                                                                       {"2.2.24.1", "4.0.576.1"},
                                                                       {"2.2.21.1", "4.0.441.1"},
                                                                       {"2.2.12.1", "4.0.144.1"},
                                                                       {"2.2.8.1", "4.0.256.1"},
                                                                       {"2.2.5.1", "4.0.125.1"},
                                                                       {"2.2.5.1", "4.0.225.1"},
                                                                       {"2.2.5.1", "4.0.400.1"}})
        want.insert(std::string("degree:n=5:d=2:k=") + k + ":l=" + l);
    CHECK(got == want);
}

TEST_CASE("field stage lists")
{
    CHECK(candidate_as(9) == std::vector<long>{1, 3, 7});
    CHECK(candidate_as(17).empty());
    CHECK(candidate_as(5) == std::vector<long>{1, 2, 3, 7, 11, 15});
    CHECK(candidate_as(15) == std::vector<long>{3});
}

TEST_CASE("cocompact stage")
{
    Classifier c(db(), 60);
    std::vector<FieldCandidate> cands;
    c.run_field_stage(5, cands);
    std::vector<Survivor> surv;
    auto v = c.run_cocompact_stage(cands, surv);
    REQUIRE(surv.size() == 1);
    CHECK(surv[0].a == 7);
    CHECK(surv[0].T0 == std::vector<long>{2});
    const auto* e1 = find(v, "cocompact:n=5:a=1");
    REQUIRE(e1);
    CHECK(e1->verdict == CaseVerdict::Eliminated);

    std::vector<FieldCandidate> c15;
    c.run_field_stage(15, c15);
    std::vector<Survivor> s15;
    c.run_cocompact_stage(c15, s15);
    CHECK(s15.empty());
}

TEST_CASE("existence data")
{
    Classifier c(db(), 60);
    std::vector<ExistenceRecord> ex;
    c.verify_existence(&ex);
    REQUIRE(ex.size() == 5);
    CHECK(ex[0].mu == 1);
    CHECK(ex[0].chi == 5);
    CHECK(ex[1].chi == 10);
    CHECK(ex[2].chi == 3);
    CHECK(ex[3].chi == 3);
    CHECK(ex[4].chi == 9);
}

TEST_CASE("full run: survivors, witnesses, completeness and determinism")
{
    Classifier c(db(), 60);
    std::vector<long> ns{5, 7, 9, 11, 13, 15, 17, 19};
    auto r1 = c.classify(ns, true);
    CHECK(r1.survivor_line() == "Survivors: n=5, ℓ=ℚ(√−7), 𝒯₀={2}");

    std::set<std::string> ids;
    for (const auto& e : r1.entries) {
        CAPTURE(e.id);
        CHECK(ids.insert(e.id).second);
        if (e.verdict == CaseVerdict::Eliminated) {
            REQUIRE(!e.witnesses.empty());
            for (const auto& w : e.witnesses) CHECK(check_witness(w, db(), r1.entries) == "");
        }
    }
    bool n9 = std::any_of(r1.summary.begin(), r1.summary.end(), [](const std::string& s) {
        return s.find("n=9: k=ℚ forced; a∈{1,3,7} after λ; all eliminated") != std::string::npos;
    });
    CHECK(n9);

    auto r2 = c.classify(ns, true);
    CHECK(ledger_to_json(r1.entries, 60, r1.survivor_labels()).dump() ==
          ledger_to_json(r2.entries, 60, r2.survivor_labels()).dump());
}

TEST_CASE("tampered witnesses are rejected")
{
    Witness w = certified_witness("x", Interval(Rational(3), 64), "<", Rational(2));
    CHECK(check_witness(w, db(), {}) != "");
    Witness p = prime_witness(frac(23, 5), 5, Integer(5));
    CHECK(check_witness(p, db(), {}) != "");
    Witness q = query_witness(4, 0, 2, "", Integer(117), {});
    CHECK(check_witness(q, db(), {}) != "");
    Witness s = subcases_witness({"no-such-id"});
    CHECK(check_witness(s, db(), {}) != "");
}

TEST_CASE("classify rejects even n")
{
    Classifier c(db(), 60);
    CHECK_THROWS(c.classify({4}));
}

}
