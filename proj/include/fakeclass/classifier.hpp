#pragma once

#include "fakeclass/bounds.hpp"
#include "fakeclass/fieldsdb.hpp"
#include "fakeclass/ledger.hpp"
#include "fakeclass/localfactors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fakeclass {

// 2^(-(n-1)d) zeta_k(-1) L(-2) zeta_k(-3) ... L(1-n)
Rational compute_R(long n, const NumberFieldRecord& k, const NumberFieldRecord& ell);

struct Proposition1Result {
    bool pass = true;
    Integer witness;    // offending prime when !pass
};

// every prime dividing the numerator of R must divide n
Proposition1Result proposition1_check(const Rational& R, long n);

Rational covolume(long n, const NumberFieldRecord& k, const NumberFieldRecord& ell,
                  const std::vector<LocalDatum>& local_data);

// binomial(n, m)^r * mu
Rational euler_characteristic(const Rational& mu, long n, long m, long r);

// n^(r + #T) * h
Integer index_bound(long n, long r, long sizeT, long h);

/* The same R through positive arguments:
 * D_k^((n^2-1)/2) (D_ell/D_k^2)^((n-1)(n+2)/4) (prod j!/(2pi)^(j+1))^d prod zeta_k(2j) L(2j+1) */
Interval R_left_form(long n, const NumberFieldRecord& k, const NumberFieldRecord& ell, int digits);

// n, a, the field Q(sqrt(-a)) and h_{ell,n}
struct FieldCandidate {
    long n = 0;
    long a = 0;
    const NumberFieldRecord* ell = nullptr;
    long h = 1;
};

struct Survivor {
    long n = 0;
    long a = 0;
    const NumberFieldRecord* ell = nullptr;
    std::vector<long> T0;
};

struct ExistenceRecord {
    std::string name;
    long n = 0, m = 1, r = 1;
    const NumberFieldRecord* k = nullptr;
    const NumberFieldRecord* ell = nullptr;
    long place = 0;
    Integer q;
    Rational R;
    Integer e_prime;
    Rational mu;
    Rational chi;
    long constructions = 0;
};

struct ClassificationReport {
    std::vector<LedgerEntry> entries;
    std::vector<std::string> summary;
    std::vector<Survivor> survivors;
    std::vector<ExistenceRecord> existence;

    std::string survivor_line() const;
    std::vector<std::string> survivor_labels() const;
};

// the P^4 / Gr(2,5) datum and the three pairs used for P^2 x P^2
std::vector<ExistenceRecord> existence_data(const FieldDatabase& db);

class Classifier {
public:
    Classifier(const FieldDatabase& db, int digits);

    int digits() const { return digits_; }

    // per-degree eliminations down to k = Q
    std::vector<LedgerEntry> run_degree_stage(long n) const;
    // discriminant and lambda bounds on ell = Q(sqrt(-a))
    std::vector<LedgerEntry> run_field_stage(long n, std::vector<FieldCandidate>& out) const;
    // division-algebra bound, for every candidate left by the field stage
    std::vector<LedgerEntry> run_cocompact_stage(const std::vector<FieldCandidate>& candidates,
                                                 std::vector<Survivor>& out) const;
    std::vector<LedgerEntry> verify_existence(std::vector<ExistenceRecord>* out = nullptr) const;

    // every stage for each n, merged in the order of ns; `existence` appends verify_existence
    ClassificationReport classify(const std::vector<long>& ns, bool existence = false) const;

private:
    Witness certify(const std::string& quantity, const std::function<Interval(int)>& f, const std::string& rel,
                    const Rational& bound, bool& holds) const;

    const FieldDatabase& db_;
    int digits_;
};

// Q(sqrt(-a)) from the database, nullptr when absent
const NumberFieldRecord* imaginary_quadratic(const FieldDatabase& db, long a);

// smallest decimal with `places` digits after the point strictly above hi(x)
Rational round_up(const Interval& x, int places = 4);

} // namespace fakeclass
