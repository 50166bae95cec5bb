#pragma once

#include "fakeclass/fieldsdb.hpp"
#include "fakeclass/interval.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fakeclass {

enum class CaseVerdict { Eliminated, Survives, ExistenceVerified };

std::string to_string(CaseVerdict v);

enum class WitnessKind {
    Certified,      // quantity in [lo, hi], and hi < bound (or lo > bound)
    NonPowerPrime,  // prime divides numerator(R) but not n
    EmptyQuery,     // no field of the given shape in the database
    SubCases,       // every listed case id is itself Eliminated
};

std::string to_string(WitnessKind k);

struct Witness {
    WitnessKind kind = WitnessKind::Certified;
    std::string claim;

    // Certified
    std::string quantity;
    std::string relation;       // "<" or ">"
    Rational bound;
    std::string lo, hi;         // outward-rounded decimal endpoints

    // NonPowerPrime
    Rational R;
    long n = 0;
    Integer prime;

    // EmptyQuery
    int degree = 0, r1 = 0, r2 = 0;
    std::string subfield;       // label the field must contain, may be empty
    Integer max_abs_disc;       // inclusive
    std::vector<Integer> extra_discs;   // individually looked-up discriminants

    // SubCases
    std::vector<std::string> cases;
};

Witness certified_witness(const std::string& quantity, const Interval& value, const std::string& relation,
                          const Rational& bound);
Witness prime_witness(const Rational& R, long n, const Integer& prime);
Witness query_witness(int degree, int r1, int r2, const std::string& subfield, const Integer& max_abs_disc,
                      std::vector<Integer> extra = {});
Witness subcases_witness(std::vector<std::string> ids);

struct LedgerEntry {
    std::string id;
    std::string stage;
    CaseVerdict verdict = CaseVerdict::Eliminated;
    std::string reason;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, std::string>> values;
    std::string citation;       // key into the bundled citation table
};

inline constexpr int kLedgerSchemaVersion = 1;

nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const LedgerEntry& e);
nlohmann::ordered_json ledger_to_json(const std::vector<LedgerEntry>& entries, int digits,
                                      const std::vector<std::string>& survivors);

// label for a citation key, the key itself when unknown
std::string citation_label(const std::string& key);

// parse a decimal string with optional exponent, e.g. "2.15e+00"
Rational parse_decimal(const std::string& s);

/* Re-check a witness from its recorded data alone (plus the database for
 * queries and the ledger for sub-cases). Returns an empty string when it holds,
 * otherwise the reason it does not. */
std::string check_witness(const Witness& w, const FieldDatabase& db, const std::vector<LedgerEntry>& ledger);

// interval endpoints as exact rationals
Rational lower_rational(const Interval& x);
Rational upper_rational(const Interval& x);

} // namespace fakeclass
