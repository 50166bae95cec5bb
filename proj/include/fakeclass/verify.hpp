#pragma once

#include "fakeclass/classifier.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fakeclass {

struct TableResult {
    std::string name;
    bool pass = true;
    bool undecided = false;
    int checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

/* Shared state for the reproduction tables: the database, the working
 * precision, and one classification run reused by the tables that need it. */
class PaperCheck {
public:
    PaperCheck(const FieldDatabase& db, int digits);

    TableResult case_values() const;        // exact values used in the case analysis
    TableResult c_table_values() const;         // the eight C pairs, four values each plus R
    TableResult r_and_proposition1() const;
    TableResult covolume_p4() const;
    TableResult euler_characteristics() const;
    TableResult f_table() const;
    TableResult d_table() const;
    TableResult lambda_table() const;
    TableResult inline_claims() const;
    TableResult classification() const;
    TableResult functional_equation() const;

    // the eleven tables in order
    std::vector<TableResult> all() const;

    const ClassificationReport& report() const;

private:
    const FieldDatabase& db_;
    int digits_;
    mutable std::shared_ptr<ClassificationReport> report_;
};

// property suites: Euler factors, monotonicity, characters, Bernoulli oracle, interval soundness
std::vector<TableResult> property_suites(const FieldDatabase& db, int digits);

// Bernoulli numbers from the classical recurrence sum_{k<=m} C(m+1,k) B_k = 0
std::vector<Rational> bernoulli_oracle(unsigned nmax);

} // namespace fakeclass
