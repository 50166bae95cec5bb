#include "fakeclass/fieldsdb.hpp"
#include "fakeclass/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fakeclass {

using nlohmann::json;

Integer NumberFieldRecord::class_number() const
{
    Integer h = 1;
    for (const auto& m : class_group) h *= m;
    return h;
}

bool NumberFieldRecord::has_subfield(const std::string& l) const
{
    return std::find(subfields.begin(), subfields.end(), l) != subfields.end();
}

std::string NumberFieldRecord::display_name() const
{
    return aliases.empty() ? label : aliases.front();
}

namespace {

struct Loc {
    const std::string& source;
    std::size_t line;
    [[noreturn]] void fail(const std::string& field, const std::string& what) const
    {
        throw DatabaseError(source + " line " + std::to_string(line) + ": field '" + field + "': " + what);
    }
};

const json& need(const json& obj, const char* key, const Loc& loc)
{
    auto it = obj.find(key);
    if (it == obj.end()) loc.fail(key, "missing");
    return *it;
}

long as_long(const json& v, const std::string& key, const Loc& loc)
{
    if (!v.is_number_integer()) loc.fail(key, "expected integer");
    return v.get<long>();
}

Integer as_integer(const json& v, const std::string& key, const Loc& loc)
{
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    loc.fail(key, "expected integer");
}

std::vector<Integer> integer_list(const json& v, const std::string& key, const Loc& loc)
{
    if (!v.is_array()) loc.fail(key, "expected list");
    std::vector<Integer> out;
    for (const auto& x : v) out.push_back(as_integer(x, key, loc));
    return out;
}

std::vector<std::string> string_list(const json& v, const std::string& key, const Loc& loc)
{
    if (!v.is_array()) loc.fail(key, "expected list of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) loc.fail(key, "expected list of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

NumberFieldRecord parse_record(const json& j, const Loc& loc)
{
    if (!j.is_object()) loc.fail("<record>", "expected a JSON object");
    NumberFieldRecord r;
    const json& label = need(j, "label", loc);
    if (!label.is_string() || label.get<std::string>().empty()) loc.fail("label", "expected non-empty string");
    r.label = label.get<std::string>();
    r.degree = static_cast<int>(as_long(need(j, "degree", loc), "degree", loc));
    r.r1 = static_cast<int>(as_long(need(j, "r1", loc), "r1", loc));
    r.r2 = static_cast<int>(as_long(need(j, "r2", loc), "r2", loc));
    if (r.degree < 1) loc.fail("degree", "must be positive");
    if (r.r1 < 0 || r.r2 < 0 || r.r1 + 2 * r.r2 != r.degree) loc.fail("r2", "signature does not satisfy r1 + 2 r2 = degree");
    r.disc = as_integer(need(j, "disc", loc), "disc", loc);
    if (r.disc == 0) loc.fail("disc", "zero discriminant");
    if (r.degree > 1 && abs(r.disc) <= 1) loc.fail("disc", "|disc| must exceed 1 for degree > 1");
    // sign of the discriminant is (-1)^r2
    if ((r.disc < 0) != (r.r2 % 2 == 1)) loc.fail("disc", "sign disagrees with r2");
    r.class_group = integer_list(need(j, "class_group", loc), "class_group", loc);
    for (const auto& m : r.class_group)
        if (m < 1) loc.fail("class_group", "invariant factors must be positive");
    r.poly = integer_list(need(j, "poly", loc), "poly", loc);
    if (static_cast<int>(r.poly.size()) != r.degree + 1 || r.poly.back() != 1)
        loc.fail("poly", "expected a monic polynomial of the stated degree");

    const json& ab = need(j, "abelian", loc);
    if (!ab.is_boolean()) loc.fail("abelian", "expected boolean");
    r.abelian = ab.get<bool>();

    const json& cond = need(j, "conductor", loc);
    if (!cond.is_null()) r.conductor = as_long(cond, "conductor", loc);

    const json& chars = need(j, "characters", loc);
    if (!chars.is_null()) {
        if (!chars.is_array()) loc.fail("characters", "expected list or null");
        std::vector<CharacterData> list;
        for (const auto& c : chars) {
            if (!c.is_object()) loc.fail("characters", "expected objects");
            CharacterData cd;
            cd.modulus = as_long(need(c, "modulus", loc), "characters.modulus", loc);
            if (cd.modulus < 1) loc.fail("characters.modulus", "must be positive");
            const json& gv = need(c, "generator_values", loc);
            if (!gv.is_array()) loc.fail("characters.generator_values", "expected list");
            for (const auto& t : gv) {
                if (!t.is_array() || t.size() != 3) loc.fail("characters.generator_values", "expected [g, e, m] triples");
                GeneratorValue v{as_long(t[0], "characters.generator_values", loc),
                                 as_long(t[1], "characters.generator_values", loc),
                                 as_long(t[2], "characters.generator_values", loc)};
                if (v.m < 1 || gcd_long(v.g, cd.modulus) != 1)
                    loc.fail("characters.generator_values", "generator must be a unit and order positive");
                cd.generator_values.push_back(v);
            }
            list.push_back(std::move(cd));
        }
        r.characters = std::move(list);
    }
    if (r.abelian) {
        if (!r.characters) loc.fail("characters", "abelian field without characters");
        if (static_cast<int>(r.characters->size()) != r.degree) loc.fail("characters", "expected one character per degree");
        long l = 1;
        for (const auto& c : *r.characters) l = lcm_long(l, c.modulus);
        if (!r.conductor || *r.conductor != l) loc.fail("conductor", "must equal the lcm of the character moduli");
    } else if (r.characters) {
        loc.fail("characters", "present on a non-abelian field");
    }

    r.subfields = string_list(need(j, "subfields", loc), "subfields", loc);
    if (auto it = j.find("aliases"); it != j.end()) r.aliases = string_list(*it, "aliases", loc);
    if (auto it = j.find("hecke"); it != j.end() && !it->is_null()) {
        if (!it->is_object()) loc.fail("hecke", "expected object");
        HeckeData h;
        const json& b = need(*it, "base", loc);
        if (!b.is_string()) loc.fail("hecke.base", "expected string");
        h.base = b.get<std::string>();
        h.prime = as_long(need(*it, "prime", loc), "hecke.prime", loc);
        h.root = as_long(need(*it, "root", loc), "hecke.root", loc);
        r.hecke = h;
    }
    return r;
}

} // namespace

void FieldDatabase::add(NumberFieldRecord rec, const std::string& where)
{
    std::vector<std::string> names{rec.label};
    names.insert(names.end(), rec.aliases.begin(), rec.aliases.end());
    for (const auto& n : names)
        if (by_name_.count(n))
            throw DatabaseError(where + ": field 'label': duplicate name '" + n + "'");
    std::size_t idx = records_.size();
    for (const auto& n : names) by_name_[n] = idx;
    by_key_.emplace(std::make_tuple(rec.degree, rec.r1, rec.r2, rec.abs_disc()), idx);
    records_.push_back(std::move(rec));
}

FieldDatabase FieldDatabase::load(std::istream& in, const std::string& source)
{
    FieldDatabase db;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Loc loc{source, lineno};
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            loc.fail("<record>", std::string("invalid JSON: ") + e.what());
        }
        db.add(parse_record(j, loc), source + " line " + std::to_string(lineno));
    }
    // subfield links must resolve, with degree divisibility
    for (const auto& r : db.records_) {
        for (const auto& s : r.subfields) {
            const NumberFieldRecord* sub = db.find(s);
            if (sub && r.degree % sub->degree != 0)
                throw DatabaseError(source + ": field 'subfields': " + r.label + " lists " + s
                                    + " whose degree does not divide");
        }
    }
    return db;
}

FieldDatabase FieldDatabase::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DatabaseError("cannot open field database '" + path + "'");
    return load(in, path);
}

const FieldDatabase& FieldDatabase::bundled()
{
    static const FieldDatabase db = [] {
        std::istringstream in(bundled_snapshot());
        return load(in, "bundled snapshot");
    }();
    return db;
}

std::vector<const NumberFieldRecord*> FieldDatabase::fields_with(int degree, int r1, int r2, const Integer& abs_disc) const
{
    std::vector<const NumberFieldRecord*> out;
    auto [lo, hi] = by_key_.equal_range(std::make_tuple(degree, r1, r2, abs_disc));
    for (auto it = lo; it != hi; ++it) out.push_back(&records_[it->second]);
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a->label < b->label; });
    return out;
}

const NumberFieldRecord* FieldDatabase::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &records_[it->second];
}

const NumberFieldRecord& FieldDatabase::get(const std::string& name) const
{
    if (const auto* r = find(name)) return *r;
    throw DatabaseError("no field named '" + name + "' in the database");
}

std::vector<const NumberFieldRecord*> FieldDatabase::quadratic_extensions_of(const NumberFieldRecord& k, bool totally_complex,
                                                                             const Integer& max_abs_disc) const
{
    std::vector<const NumberFieldRecord*> out;
    for (const auto& r : records_) {
        if (r.degree != 2 * k.degree || !r.has_subfield(k.label)) continue;
        if (r.totally_complex() != totally_complex) continue;
        if (r.abs_disc() > max_abs_disc) continue;
        out.push_back(&r);
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        if (a->abs_disc() != b->abs_disc()) return a->abs_disc() < b->abs_disc();
        return a->label < b->label;
    });
    return out;
}

std::vector<const NumberFieldRecord*> FieldDatabase::fields_below(int degree, int r1, int r2,
                                                                  const Integer& max_abs_disc) const
{
    std::vector<const NumberFieldRecord*> out;
    for (const auto& r : records_)
        if (r.degree == degree && r.r1 == r1 && r.r2 == r2 && r.abs_disc() <= max_abs_disc) out.push_back(&r);
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        if (a->abs_disc() != b->abs_disc()) return a->abs_disc() < b->abs_disc();
        return a->label < b->label;
    });
    return out;
}

std::optional<Integer> FieldDatabase::min_abs_disc(int degree, int r1, int r2) const
{
    std::optional<Integer> best;
    for (const auto& r : records_)
        if (r.degree == degree && r.r1 == r1 && r.r2 == r2 && (!best || r.abs_disc() < *best))
            best = r.abs_disc();
    return best;
}

long h_torsion(const NumberFieldRecord& record, long n)
{
    long h = 1;
    for (const auto& m : record.class_group) {
        Integer g;
        mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
        h *= g.get_si();
    }
    return h;
}

std::optional<Integer> minimum_real_disc(int d)
{
    static const std::map<int, Integer> t{{1, 1}, {2, 5}, {3, 49}, {4, 725}, {5, 14641},
                                          {6, 300125}, {7, 20134393}, {8, 282300416}};
    auto it = t.find(d);
    return it == t.end() ? std::nullopt : std::optional<Integer>(it->second);
}

std::optional<Integer> minimum_complex_disc(int d)
{
    static const std::map<int, Integer> t{{2, 3}, {4, 117}, {6, 9747}, {8, 1257728}};
    auto it = t.find(d);
    return it == t.end() ? std::nullopt : std::optional<Integer>(it->second);
}

Rational degree_threshold(int d)
{
    if (d < 2) throw std::invalid_argument("degree_threshold: d must be at least 2");
    if (d >= 9) return parse_rational("9.1");
    if (d >= 5) return parse_rational("6.8");
    if (d == 4) return parse_rational("5.18");
    if (d == 3) return parse_rational("3.65");
    return parse_rational("2.23");
}

const RegulatorConstants& regulator_constants()
{
    static const RegulatorConstants c{
        frac(1, 8),
        parse_rational("0.09058"),
        parse_rational("0.1482"),
        parse_rational("0.02"),
        parse_rational("0.1"),
        {9747, 10051, 10571, 10816, 11691, 12167},
        {117, 125, 144},
    };
    return c;
}

bool regulator_exception(int degree, const Integer& abs_disc)
{
    const auto& c = regulator_constants();
    const auto& list = degree == 6 ? c.sextic_exceptions : degree == 4 ? c.quartic_exceptions : std::vector<Integer>{};
    return std::find(list.begin(), list.end(), abs_disc) != list.end();
}

} // namespace fakeclass
