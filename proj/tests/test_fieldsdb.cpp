#include "doctest.h"

#include "fakeclass/errors.hpp"
#include "fakeclass/fieldsdb.hpp"

#include <sstream>

using namespace fakeclass;

namespace {

const FieldDatabase& db() { return FieldDatabase::bundled(); }

} // namespace

TEST_SUITE("fieldsdb") {

TEST_CASE("snapshot contains the quartic 117 and not 169 or 338")
{
    CHECK(db().fields_with(4, 0, 2, Integer(117)).size() == 1);
    CHECK(db().fields_with(4, 0, 2, Integer(169)).empty());
    CHECK(db().fields_with(4, 0, 2, Integer(338)).empty());
}

TEST_CASE("empty stream loads as an empty database")
{
    std::istringstream in("");
    auto e = FieldDatabase::load(in);
    CHECK(e.size() == 0);
    CHECK(e.fields_with(2, 2, 0, Integer(5)).empty());
}

TEST_CASE("malformed record names line and field")
{
    std::string first = std::string(bundled_snapshot()).substr(0, std::string(bundled_snapshot()).find('\n'));
    std::istringstream in(first + "\n{\"label\":\"2.2.5.1\",\"degree\":\"two\"}\n");
    try {
        FieldDatabase::load(in, "bad.jsonl");
        FAIL("expected DatabaseError");
    } catch (const DatabaseError& e) {
        std::string m = e.what();
        CHECK(m.find("line 2") != std::string::npos);
        CHECK(m.find("degree") != std::string::npos);
    }
}

TEST_CASE("fields_with")
{
    auto q144 = db().fields_with(4, 0, 2, Integer(144));
    REQUIRE(q144.size() == 1);
    CHECK(q144[0]->poly == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(db().fields_with(4, 0, 2, Integer(288)).empty());
    auto q5 = db().fields_with(2, 2, 0, Integer(5));
    REQUIRE(q5.size() == 1);
    CHECK(q5[0] == &db().get("Q-sqrt5"));
}

TEST_CASE("quadratic_extensions_of")
{
    auto oct = db().quadratic_extensions_of(db().get("quartic-1125"), true, Integer(1576875));
    REQUIRE(oct.size() == 1);
    CHECK(oct[0]->abs_disc() == 1265625);

    std::vector<Integer> ds;
    for (auto* r : db().quadratic_extensions_of(db().get("Q-sqrt5"), true, Integer(400))) ds.push_back(r->abs_disc());
    CHECK(ds == std::vector<Integer>{125, 225, 400});

    CHECK(db().quadratic_extensions_of(db().get("Q-sqrt2"), true, Integer(200)).empty());
}

TEST_CASE("fields_below is sorted and bounded")
{
    auto v = db().fields_below(2, 0, 1, Integer(40));
    REQUIRE(!v.empty());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i]->abs_disc() <= v[i + 1]->abs_disc());
    CHECK(v.back()->abs_disc() <= 40);
    CHECK(v.front()->abs_disc() == 3);
}

TEST_CASE("h_torsion")
{
    NumberFieldRecord r;
    CHECK(h_torsion(r, 5) == 1);
    r.class_group = {3};
    CHECK(h_torsion(r, 15) == 3);
    CHECK(h_torsion(r, 5) == 1);
    r.class_group = {2, 6};
    CHECK(h_torsion(r, 3) == 3);
}

TEST_CASE("snapshot invariants")
{
    for (const auto& r : db().records()) {
        CAPTURE(r.label);
        CHECK(r.r1 + 2 * r.r2 == r.degree);
        if (r.degree > 1) CHECK(r.abs_disc() > 1);
        if (r.abelian) {
            REQUIRE(r.characters.has_value());
            CHECK(static_cast<int>(r.characters->size()) == r.degree);
        }
        for (const auto& s : r.subfields) {
            const auto* k = db().find(s);
            REQUIRE(k != nullptr);
            CHECK(r.degree % k->degree == 0);
        }
    }
}

TEST_CASE("minimum discriminants are attained")
{
    for (int d = 2; d <= 8; ++d) {
        CAPTURE(d);
        if (auto m = minimum_real_disc(d); m && db().min_abs_disc(d, d, 0)) CHECK(*db().min_abs_disc(d, d, 0) == *m);
        if (d % 2 == 0)
            if (auto m = minimum_complex_disc(d); m && db().min_abs_disc(d, 0, d / 2))
                CHECK(*db().min_abs_disc(d, 0, d / 2) == *m);
    }
}

TEST_CASE("regulator exceptions")
{
    const auto& c = regulator_constants();
    CHECK(c.sextic_exceptions.size() == 6);
    CHECK(c.quartic_exceptions == std::vector<Integer>{117, 125, 144});
    CHECK(regulator_exception(4, Integer(125)));
    CHECK(!regulator_exception(4, Integer(400)));
    CHECK(regulator_exception(6, Integer(12167)));
}

TEST_CASE("degree thresholds")
{
    CHECK(degree_threshold(2) == parse_rational("2.23"));
    CHECK(degree_threshold(3) == parse_rational("3.65"));
    CHECK(degree_threshold(4) == parse_rational("5.18"));
    CHECK(degree_threshold(5) == parse_rational("6.8"));
    CHECK(degree_threshold(9) == parse_rational("9.1"));
}

}
