#include "fakeclass/classifier.hpp"
#include "fakeclass/errors.hpp"
#include "fakeclass/lvalues.hpp"
#include "fakeclass/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

using namespace fakeclass;

namespace {

enum Exit { Ok = 0, Usage = 1, Db = 2, Undec = 3, Unsupported = 4, Failed = 5 };

constexpr int kPrecisionFloor = 20;

struct Common {
    std::string db_path;
    int precision = kDefaultDigits;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--db", c.db_path, "field database (JSON lines); falls back to $FAKECLASS_DB, then the bundled snapshot");
    sub->add_option("--precision", c.precision, "working precision in decimal digits")->capture_default_str();
}

int clamp_precision(int digits)
{
    if (digits < kPrecisionFloor) {
        std::cerr << "warning: precision " << digits << " below the floor, using " << kPrecisionFloor << "\n";
        return kPrecisionFloor;
    }
    return digits;
}

// keeps a loaded database alive for the duration of a command
struct DbHandle {
    std::unique_ptr<FieldDatabase> owned;
    const FieldDatabase* db = nullptr;
};

DbHandle open_db(const std::string& flag)
{
    DbHandle h;
    std::string path = flag;
    if (path.empty())
        if (const char* env = std::getenv("FAKECLASS_DB")) path = env;
    if (path.empty()) {
        h.db = &FieldDatabase::bundled();
    } else {
        h.owned = std::make_unique<FieldDatabase>(FieldDatabase::load_file(path));
        h.db = h.owned.get();
    }
    return h;
}

const NumberFieldRecord& resolve_field(const FieldDatabase& db, const std::string& name, long disc, int degree)
{
    if (!name.empty()) return db.get(name);
    std::vector<const NumberFieldRecord*> hits;
    for (const auto& r : db.records())
        if (r.degree == degree && r.disc == disc) hits.push_back(&r);
    if (hits.empty()) throw DatabaseError("no field of degree " + std::to_string(degree) + " and discriminant " + std::to_string(disc));
    if (hits.size() > 1) {
        std::string all;
        for (auto* r : hits) all += " " + r->label;
        throw DatabaseError("discriminant " + std::to_string(disc) + " is ambiguous:" + all);
    }
    return *hits.front();
}

void print_table(const TableResult& t)
{
    std::cout << (t.pass ? "PASS " : "FAIL ") << t.name << " (" << t.checks << " checks)\n";
    for (const auto& f : t.failures) std::cout << "    failed: " << f << "\n";
    for (const auto& n : t.notes) std::cout << "    note: " << n << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified classification of arithmetic fake P^(n-1) and fake Grassmannians"};
    app.require_subcommand(1);

    // classify
    Common cc;
    long n_opt = 0;
    bool all = false;
    std::string out = "ledger.json";
    auto* classify = app.add_subcommand("classify", "run every elimination stage and write the ledger");
    auto* n_flag = classify->add_option("--n", n_opt, "odd n >= 5");
    auto* all_flag = classify->add_flag("--all", all, "n = 5, 7, ..., 19");
    n_flag->excludes(all_flag);
    add_common(classify, cc);
    classify->add_option("--out", out, "ledger JSON path")->capture_default_str();

    // lvalue
    Common lc;
    std::string field, over;
    long disc = 0, at = 0;
    int degree = 0;
    auto* lvalue = app.add_subcommand("lvalue", "exact zeta_K(s) or L_{K|k}(s) at s <= 0");
    auto* field_flag = lvalue->add_option("--field", field, "label or alias");
    auto* disc_flag = lvalue->add_option("--disc", disc, "signed discriminant");
    lvalue->add_option("--degree", degree, "degree, with --disc");
    lvalue->add_option("--over", over, "base field k for the relative L-function");
    lvalue->add_option("--at", at, "argument s")->required();
    field_flag->excludes(disc_flag);
    add_common(lvalue, lc);

    // covolume
    Common vc;
    long cn = 0, cm = 0, cr = 1;
    std::string ck = "Q", cell;
    std::vector<long> places;
    auto* covol = app.add_subcommand("covolume", "R, Euler factors, mu and chi for a principal datum");
    covol->add_option("--n", cn, "n")->required();
    covol->add_option("--k", ck, "totally real field k")->capture_default_str();
    covol->add_option("--ell", cell, "CM extension ell")->required();
    covol->add_option("--place", places, "rational prime below a place with a maximal inner parahoric (repeatable)");
    covol->add_option("--m", cm, "Grassmannian Gr(m,n) for chi; default m = 1");
    covol->add_option("--r", cr, "number of factors for chi")->capture_default_str();
    add_common(covol, vc);

    // bound
    Common bc;
    std::string bname;
    long bn = 0, bd = 1, bh = 1, bq = 2;
    std::string bdelta = "1", breg = "1/8", bdk = "1", below, above;
    auto* bound = app.add_subcommand("bound", "evaluate one bound function, optionally certify a claim");
    bound->add_option("--name", bname, "f, p1, p2, p3, phi, d, lambda or L")
        ->required()
        ->check(CLI::IsMember({"f", "p1", "p2", "p3", "phi", "d", "lambda", "L"}));
    bound->add_option("--n", bn, "n")->required();
    bound->add_option("--d", bd, "degree of k, or the division algebra degree for L");
    bound->add_option("--delta", bdelta, "delta (rational or decimal)");
    bound->add_option("--Dk", bdk, "discriminant of k");
    bound->add_option("--reg", breg, "regulator ratio R/w");
    bound->add_option("--h-torsion", bh, "h_{ell,n}");
    bound->add_option("--q", bq, "prime q for L");
    auto* below_flag = bound->add_option("--below", below, "certify value < c");
    auto* above_flag = bound->add_option("--above", above, "certify value > c");
    below_flag->excludes(above_flag);
    add_common(bound, bc);

    // verify-paper
    Common pc;
    auto* verify = app.add_subcommand("verify-paper", "run every reproduction table and property suite");
    add_common(verify, pc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*classify) {
            if (!all && n_flag->count() == 0) {
                std::cerr << "classify: give --n N or --all\n" << classify->help();
                return Usage;
            }
            if (!all && (n_opt < 5 || n_opt % 2 == 0)) {
                std::cerr << "classify: n must be odd and at least 5\n" << classify->help();
                return Usage;
            }
            int digits = clamp_precision(cc.precision);
            auto h = open_db(cc.db_path);
            std::vector<long> ns;
            if (all)
                for (long n = 5; n <= 19; n += 2) ns.push_back(n);
            else
                ns.push_back(n_opt);
            Classifier c(*h.db, digits);
            auto rep = c.classify(ns, all);
            for (const auto& line : rep.summary) std::cout << line << "\n";
            std::ofstream f(out);
            if (!f) {
                std::cerr << "cannot write " << out << "\n";
                return Failed;
            }
            f << ledger_to_json(rep.entries, digits, rep.survivor_labels()).dump(2) << "\n";
            std::cout << "ledger: " << rep.entries.size() << " entries written to " << out << "\n";
            std::cout << rep.survivor_line() << "\n";
            return Ok;
        }

        if (*lvalue) {
            if (field.empty() && (disc_flag->count() == 0 || degree <= 0)) {
                std::cerr << "lvalue: give --field or --disc with --degree\n";
                return Usage;
            }
            int digits = clamp_precision(lc.precision);
            auto h = open_db(lc.db_path);
            const auto& K = resolve_field(*h.db, field, disc, degree);
            const NumberFieldRecord* k = over.empty() ? nullptr : &h.db->get(over);
            if (at <= 0) {
                Rational v = k ? hecke_L_relative(*k, K, at) : dedekind_zeta_negative(K, at);
                std::cout << to_string(v) << "\n";
            } else if (at >= 2) {
                Interval v = k ? hecke_L_positive(*k, K, at, digits) : dedekind_zeta_positive(K, at, digits);
                std::cout << v.str(digits) << "\n";
            } else {
                std::cerr << "lvalue: s = 1 is a pole\n";
                return Usage;
            }
            return Ok;
        }

        if (*covol) {
            if (cn < 2) {
                std::cerr << "covolume: n must be at least 2\n";
                return Usage;
            }
            auto h = open_db(vc.db_path);
            const auto& k = h.db->get(ck);
            const auto& ell = h.db->get(cell);
            std::vector<LocalDatum> data;
            Rational R = compute_R(cn, k, ell);
            std::cout << "R = " << to_string(R) << "\n";
            for (long p : places) {
                LocalDatum v;
                v.q = residue_size(k, p);
                v.inner_degree = cn;
                v.parahoric = ParahoricType::MaximalInner;
                data.push_back(v);
                std::cout << "e'(place " << p << ", q=" << v.q.get_str() << ") = " << local_factor(cn, v).get_str() << "\n";
            }
            Rational mu = covolume(cn, k, ell, data);
            std::cout << "mu = " << to_string(mu) << "\n";
            std::cout << "chi = " << to_string(euler_characteristic(mu, cn, cm > 0 ? cm : 1, cr)) << "\n";
            return Ok;
        }

        if (*bound) {
            int digits = clamp_precision(bc.precision);
            Rational delta = parse_rational(bdelta), reg = parse_rational(breg);
            Integer Dk(bdk);
            std::function<Interval(int)> f;
            if (bname == "f") f = [&](int dg) { return f_bound(bn, bd, delta, dg); };
            else if (bname == "p1") f = [&](int dg) { return p1(bn, bd, Dk, delta, dg); };
            else if (bname == "p2") f = [&](int dg) { return p2(bn, bd, Dk, reg, delta, dg); };
            else if (bname == "p3") f = [&](int dg) { return p3(bn, bd, Dk, bh, dg); };
            else if (bname == "phi") f = [&](int dg) { return phi_bound(bn, bd, reg, delta, dg); };
            else if (bname == "d") f = [&](int dg) { return d_bound(bn, delta, dg); };
            else if (bname == "lambda") f = [&](int dg) { return lambda_bound(bn, bh, dg); };
            else f = [&](int dg) { return L_elimination(bn, bd, bq, bh, dg); };
            std::cout << bname << " = " << f(digits).str(25) << "\n";
            if (below.empty() && above.empty()) return Ok;
            bool less = !below.empty();
            Rational c = parse_rational(less ? below : above);
            Certification r = less ? certify_less(f, c, digits) : certify_greater(f, c, digits);
            std::cout << bname << (less ? " < " : " > ") << to_string(c) << ": " << to_string(r.verdict) << "\n";
            if (r.verdict == Verdict::Undecided) return Undec;
            return r.verdict == Verdict::Certified ? Ok : Failed;
        }

        if (*verify) {
            int digits = clamp_precision(pc.precision);
            auto h = open_db(pc.db_path);
            PaperCheck check(*h.db, digits);
            auto tables = check.all();
            auto props = property_suites(*h.db, digits);
            const TableResult* first = nullptr;
            bool undecided = false;
            int passed = 0;
            for (const auto& t : tables) {
                print_table(t);
                if (t.pass) ++passed;
                else if (!first) first = &t;
                undecided = undecided || t.undecided;
            }
            std::cout << "property suites:\n";
            for (const auto& t : props) {
                print_table(t);
                if (!t.pass && !first) first = &t;
                undecided = undecided || t.undecided;
            }
            if (!first) {
                std::cout << "ALL " << tables.size() << " TABLES PASS\n";
                return Ok;
            }
            std::cout << passed << " of " << tables.size() << " tables pass; first failure: " << first->name << "\n";
            return undecided ? Undec : Failed;
        }
    } catch (const DatabaseError& e) {
        std::cerr << "database error: " << e.what() << "\n";
        return Db;
    } catch (const Undecided& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return Undec;
    } catch (const UnsupportedField& e) {
        std::cerr << "unsupported field: " << e.what() << "\n";
        return Unsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
