#include "fakeclass/ledger.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fakeclass {

std::string to_string(CaseVerdict v)
{
    switch (v) {
    case CaseVerdict::Eliminated: return "Eliminated";
    case CaseVerdict::Survives: return "Survives";
    case CaseVerdict::ExistenceVerified: return "ExistenceVerified";
    }
    return "?";
}

std::string to_string(WitnessKind k)
{
    switch (k) {
    case WitnessKind::Certified: return "certified-inequality";
    case WitnessKind::NonPowerPrime: return "numerator-prime";
    case WitnessKind::EmptyQuery: return "empty-database-query";
    case WitnessKind::SubCases: return "sub-cases";
    }
    return "?";
}

Rational lower_rational(const Interval& x)
{
    Rational r;
    mpfr_get_q(r.get_mpq_t(), x.lo());
    return r;
}

Rational upper_rational(const Interval& x)
{
    Rational r;
    mpfr_get_q(r.get_mpq_t(), x.hi());
    return r;
}

Witness certified_witness(const std::string& quantity, const Interval& value, const std::string& relation,
                          const Rational& bound)
{
    Witness w;
    w.kind = WitnessKind::Certified;
    w.quantity = quantity;
    w.relation = relation;
    w.bound = bound;
    w.lo = value.lo_str(25);
    w.hi = value.hi_str(25);
    w.claim = quantity + " " + relation + " " + to_string(bound);
    return w;
}

Witness prime_witness(const Rational& R, long n, const Integer& prime)
{
    Witness w;
    w.kind = WitnessKind::NonPowerPrime;
    w.R = R;
    w.n = n;
    w.prime = prime;
    w.claim = prime.get_str() + " divides the numerator of " + to_string(R) + " but not " + std::to_string(n);
    return w;
}

Witness query_witness(int degree, int r1, int r2, const std::string& subfield, const Integer& max_abs_disc,
                      std::vector<Integer> extra)
{
    Witness w;
    w.kind = WitnessKind::EmptyQuery;
    w.degree = degree;
    w.r1 = r1;
    w.r2 = r2;
    w.subfield = subfield;
    w.max_abs_disc = max_abs_disc;
    w.extra_discs = std::move(extra);
    w.claim = "no field of degree " + std::to_string(degree) + " signature (" + std::to_string(r1) + "," +
              std::to_string(r2) + ")" + (subfield.empty() ? "" : " containing " + subfield) +
              " with |disc| <= " + max_abs_disc.get_str();
    if (!w.extra_discs.empty()) {
        w.claim += " or |disc| in {";
        for (std::size_t i = 0; i < w.extra_discs.size(); ++i)
            w.claim += (i ? "," : "") + w.extra_discs[i].get_str();
        w.claim += "}";
    }
    return w;
}

Witness subcases_witness(std::vector<std::string> ids)
{
    Witness w;
    w.kind = WitnessKind::SubCases;
    w.cases = std::move(ids);
    w.claim = "all " + std::to_string(w.cases.size()) + " sub-cases eliminated";
    return w;
}

nlohmann::ordered_json to_json(const Witness& w)
{
    nlohmann::ordered_json j;
    j["kind"] = to_string(w.kind);
    j["claim"] = w.claim;
    switch (w.kind) {
    case WitnessKind::Certified:
        j["quantity"] = w.quantity;
        j["relation"] = w.relation;
        j["bound"] = to_string(w.bound);
        j["interval"] = {w.lo, w.hi};
        break;
    case WitnessKind::NonPowerPrime:
        j["R"] = to_string(w.R);
        j["n"] = w.n;
        j["prime"] = w.prime.get_str();
        break;
    case WitnessKind::EmptyQuery: {
        j["degree"] = w.degree;
        j["r1"] = w.r1;
        j["r2"] = w.r2;
        j["subfield"] = w.subfield;
        j["max_abs_disc"] = w.max_abs_disc.get_str();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& d : w.extra_discs) arr.push_back(d.get_str());
        j["extra_discs"] = arr;
        break;
    }
    case WitnessKind::SubCases:
        j["cases"] = w.cases;
        break;
    }
    return j;
}

nlohmann::ordered_json to_json(const LedgerEntry& e)
{
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["stage"] = e.stage;
    j["verdict"] = to_string(e.verdict);
    j["reason"] = e.reason;
    auto vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.values) vals[k] = v;
    j["values"] = vals;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : e.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = ws;
    j["citation"] = citation_label(e.citation);
    return j;
}

nlohmann::ordered_json ledger_to_json(const std::vector<LedgerEntry>& entries, int digits,
                                      const std::vector<std::string>& survivors)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kLedgerSchemaVersion;
    j["precision_digits"] = digits;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    j["entries"] = arr;
    j["survivors"] = survivors;
    return j;
}

std::string citation_label(const std::string& key)
{
    static std::once_flag once;
    static nlohmann::json table;
    std::call_once(once, [] {
        try {
            table = nlohmann::json::parse(bundled_citations());
        } catch (const std::exception&) {
            table = nlohmann::json::object();
        }
    });
    auto it = table.find(key);
    if (it == table.end() || !it->is_string()) return key;
    return it->get<std::string>();
}

Rational parse_decimal(const std::string& s)
{
    auto pos = s.find_first_of("eE");
    if (pos == std::string::npos) return parse_rational(s);
    Rational mant = parse_rational(s.substr(0, pos));
    long e = std::stol(s.substr(pos + 1));
    return mant * rational_pow(Rational(10), e);
}

std::string check_witness(const Witness& w, const FieldDatabase& db, const std::vector<LedgerEntry>& ledger)
{
    switch (w.kind) {
    case WitnessKind::Certified: {
        Rational lo = parse_decimal(w.lo), hi = parse_decimal(w.hi);
        if (lo > hi) return "empty interval";
        if (w.relation == "<") return hi < w.bound ? "" : "upper endpoint not below the bound";
        if (w.relation == ">") return lo > w.bound ? "" : "lower endpoint not above the bound";
        return "unknown relation " + w.relation;
    }
    case WitnessKind::NonPowerPrime: {
        Integer num = w.R.get_num();
        if (w.prime < 2 || !mpz_probab_prime_p(w.prime.get_mpz_t(), 30)) return "witness is not prime";
        if (!mpz_divisible_p(num.get_mpz_t(), w.prime.get_mpz_t())) return "prime does not divide the numerator";
        if (w.n % w.prime.get_si() == 0) return "prime divides n";
        return "";
    }
    case WitnessKind::EmptyQuery: {
        for (const auto& r : db.records()) {
            if (r.degree != w.degree || r.r1 != w.r1 || r.r2 != w.r2) continue;
            if (!w.subfield.empty() && !r.has_subfield(w.subfield)) continue;
            bool listed = std::find(w.extra_discs.begin(), w.extra_discs.end(), r.abs_disc()) != w.extra_discs.end();
            if (r.abs_disc() <= w.max_abs_disc || listed) return "database contains " + r.label;
        }
        return "";
    }
    case WitnessKind::SubCases:
        for (const auto& id : w.cases) {
            auto it = std::find_if(ledger.begin(), ledger.end(), [&](const LedgerEntry& e) { return e.id == id; });
            if (it == ledger.end()) return "missing sub-case " + id;
            if (it->verdict != CaseVerdict::Eliminated) return "sub-case " + id + " not eliminated";
        }
        return "";
    }
    return "unknown witness kind";
}

} // namespace fakeclass
