#pragma once

#include "fakeclass/exactnum.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fakeclass {

// chi(g) = zeta_m^e for generator g
struct GeneratorValue {
    long g, e, m;
};

struct CharacterData {
    long modulus = 1;
    std::vector<GeneratorValue> generator_values;
};

/* A relative quadratic character chi(N(x)) on a real quadratic base, where
 * chi is the Legendre symbol mod `prime` and the base generator maps to `root`. */
struct HeckeData {
    std::string base;
    long prime = 0;
    long root = 0;
};

struct NumberFieldRecord {
    std::string label;
    int degree = 1;
    int r1 = 1, r2 = 0;
    Integer disc = 1;
    std::vector<Integer> class_group;
    std::vector<Integer> poly;          // constant first
    bool abelian = false;
    std::optional<long> conductor;
    std::optional<std::vector<CharacterData>> characters;
    std::vector<std::string> subfields;
    std::vector<std::string> aliases;
    std::optional<HeckeData> hecke;

    Integer abs_disc() const { return abs(disc); }
    Integer class_number() const;
    bool totally_real() const { return r2 == 0; }
    bool totally_complex() const { return r1 == 0; }
    bool has_subfield(const std::string& label) const;
    // first alias if any, else the label
    std::string display_name() const;
};

class FieldDatabase {
public:
    FieldDatabase() = default;

    // one JSON object per non-empty line; throws DatabaseError naming line and field
    static FieldDatabase load(std::istream& in, const std::string& source = "<stream>");
    static FieldDatabase load_file(const std::string& path);
    static const FieldDatabase& bundled();

    std::size_t size() const { return records_.size(); }
    const std::vector<NumberFieldRecord>& records() const { return records_; }

    std::vector<const NumberFieldRecord*> fields_with(int degree, int r1, int r2, const Integer& abs_disc) const;
    // label or alias; nullptr when absent
    const NumberFieldRecord* find(const std::string& name) const;
    // as find, but throws DatabaseError
    const NumberFieldRecord& get(const std::string& name) const;

    std::vector<const NumberFieldRecord*> quadratic_extensions_of(const NumberFieldRecord& k, bool totally_complex,
                                                                  const Integer& max_abs_disc) const;

    // every field of the signature with |disc| <= max_abs_disc, by |disc| then label
    std::vector<const NumberFieldRecord*> fields_below(int degree, int r1, int r2, const Integer& max_abs_disc) const;

    // smallest |disc| present for a signature
    std::optional<Integer> min_abs_disc(int degree, int r1, int r2) const;

private:
    void add(NumberFieldRecord rec, const std::string& where);

    std::vector<NumberFieldRecord> records_;
    std::map<std::string, std::size_t> by_name_;
    std::multimap<std::tuple<int, int, int, Integer>, std::size_t> by_key_;
};

// order of the n-torsion of the class group
long h_torsion(const NumberFieldRecord& record, long n);

// M_r(d)^d and M_c(d)^d for d <= 8; nullopt where no value is tabulated
std::optional<Integer> minimum_real_disc(int d);
std::optional<Integer> minimum_complex_disc(int d);

// Odlyzko-type cutoffs: D_k^(1/d) exceeds this for every totally real k of degree >= d, d >= 2
Rational degree_threshold(int d);

struct RegulatorConstants {
    Rational generic;             // R/w > 1/8 away from the exceptions
    Rational quartic;             // R/w >= 0.09058 for totally complex quartics
    Rational octic;               // R/w >= 0.1482 for totally complex octics
    Rational zimmert_factor;      // R >= 0.02 w e^(0.1 d)
    Rational zimmert_exponent;
    std::vector<Integer> sextic_exceptions;   // |disc| of totally complex sextics
    std::vector<Integer> quartic_exceptions;
};

const RegulatorConstants& regulator_constants();

// true when the generic 1/8 bound is not available for this field
bool regulator_exception(int degree, const Integer& abs_disc);

// bundled resources compiled into the library
const char* bundled_snapshot();
const char* bundled_citations();

} // namespace fakeclass
