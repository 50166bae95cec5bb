#include "fakeclass/classifier.hpp"
#include "fakeclass/errors.hpp"
#include "fakeclass/lvalues.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

namespace fakeclass {

namespace {

// exact decimal when the denominator is 2^a 5^b, else p/q
std::string dec(const Rational& r)
{
    Integer den = r.get_den();
    Integer t = den;
    unsigned places = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), 2)) t /= 2, ++places;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), 5)) t /= 5, ++fives;
    if (t != 1) return to_string(r);
    places = std::max(places, fives);
    if (places == 0) return r.get_num().get_str();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    Integer v = r.get_num() * scale / den;
    bool neg = v < 0;
    std::string s = Integer(abs(v)).get_str();
    if (s.size() <= places) s = std::string(places - s.size() + 1, '0') + s;
    s.insert(s.size() - places, ".");
    return (neg ? "-" : "") + s;
}

Integer floor_q(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer ceil_q(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

std::string join(const std::vector<long>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::vector<long> prime_divisors(long n)
{
    std::vector<long> out;
    for (long p = 2; p <= n; ++p)
        if (n % p == 0 && is_prime(p)) out.push_back(p);
    return out;
}

long next_prime(long p)
{
    for (long q = p + 1;; ++q)
        if (is_prime(q)) return q;
}

// a with ell = Q(sqrt(-a)) for an imaginary quadratic of discriminant -D
long a_of_disc(const Integer& D)
{
    long d = D.get_si();
    return d % 4 == 3 ? d : d / 4;
}

std::string k_name(const NumberFieldRecord& k) { return k.label; }

enum class Kind { F, Phi };

struct DegreeCase {
    long d;
    Kind kind;
    Rational rw;        // regulator constant, Phi only
    Rational delta;
    std::optional<std::pair<Rational, Rational>> prelim;   // (delta, c) with f(n,d,delta) < c
};

struct KRule {
    Rational rw, delta;
};

struct DegreePlan {
    long cap_d;
    Rational cap_delta;
    std::vector<DegreeCase> cases;
    std::map<std::pair<long, long>, KRule> rules;   // (d, D_k)
};

DegreePlan degree_plan(long n)
{
    const auto& rc = regulator_constants();
    DegreePlan p;
    if (n >= 13) {
        p.cap_d = 2;
        p.cap_delta = 3;
        return p;
    }
    switch (n) {
    case 11:
        p.cap_d = 3;
        p.cap_delta = 2;
        p.cases.push_back({2, Kind::F, 0, frac(9, 5), std::nullopt});
        break;
    case 9:
        p.cap_d = 3;
        p.cap_delta = frac(17, 10);
        p.cases.push_back({2, Kind::Phi, rc.quartic, frac(3, 2), std::nullopt});
        break;
    case 7:
        p.cap_d = 4;
        p.cap_delta = frac(3, 2);
        p.cases.push_back({3, Kind::F, 0, frac(7, 5), std::nullopt});
        p.cases.push_back({2, Kind::F, 0, frac(6, 5), std::nullopt});
        p.rules[{2, 17}] = {rc.quartic, frac(63, 50)};
        p.rules[{2, 5}] = {rc.generic, frac(13, 10)};
        break;
    case 5:
        p.cap_d = 5;
        p.cap_delta = frac(6, 5);
        p.cases.push_back({4, Kind::Phi, rc.octic, frac(6, 5), std::make_pair(Rational(1), frac(32, 5))});
        p.cases.push_back({3, Kind::Phi, rc.generic, 1, std::nullopt});
        p.cases.push_back({2, Kind::Phi, rc.quartic, 1, std::nullopt});
        for (long D : {169, 148, 81}) p.rules[{3, D}] = {rc.generic, frac(11, 10)};
        p.rules[{3, 49}] = {rc.generic, frac(6, 5)};
        for (long D : {33, 28, 24, 21, 17, 13, 12, 8, 5}) p.rules[{2, D}] = {rc.generic, 1};
        break;
    default:
        throw std::invalid_argument("no degree plan for n = " + std::to_string(n));
    }
    return p;
}

const std::vector<Integer>& exception_discs(long degree)
{
    static const std::vector<Integer> none;
    const auto& rc = regulator_constants();
    if (degree == 4) return rc.quartic_exceptions;
    if (degree == 6) return rc.sextic_exceptions;
    return none;
}

Rational field_delta(long n)
{
    if (n == 5) return frac(1, 2);
    if (n == 7) return 1;
    return 2;
}

void sort_fields(std::vector<const NumberFieldRecord*>& v)
{
    std::sort(v.begin(), v.end(), [](auto a, auto b) {
        if (a->abs_disc() != b->abs_disc()) return a->abs_disc() < b->abs_disc();
        return a->label < b->label;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Rational round_up(const Interval& x, int places)
{
    Integer s;
    mpz_ui_pow_ui(s.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Rational r(floor_q(upper_rational(x) * s) + 1, s);
    r.canonicalize();
    return r;
}

Rational compute_R(long n, const NumberFieldRecord& k, const NumberFieldRecord& ell)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("compute_R: n must be odd and at least 3");
    Rational acc = 1;
    for (long i = 1; i <= n - 1; ++i)
        acc *= (i % 2 == 1) ? dedekind_zeta_negative(k, -i) : hecke_L_relative(k, ell, -i);
    return acc / rational_pow(Rational(2), (n - 1) * k.degree);
}

Proposition1Result proposition1_check(const Rational& R, long n)
{
    Proposition1Result res;
    Integer num = abs(R.get_num());
    if (num == 0) throw std::invalid_argument("proposition1_check: R is zero");
    if (num == 1) return res;
    for (const auto& [p, e] : factor(num)) {
        if (n % p.get_si() != 0) {
            res.pass = false;
            res.witness = p;
            return res;
        }
    }
    return res;
}

Rational covolume(long n, const NumberFieldRecord& k, const NumberFieldRecord& ell,
                  const std::vector<LocalDatum>& local_data)
{
    Rational mu = compute_R(n, k, ell);
    for (const auto& v : local_data) mu *= Rational(local_factor(n, v));
    return mu;
}

Rational euler_characteristic(const Rational& mu, long n, long m, long r)
{
    if (m <= 0 || m >= n) throw std::invalid_argument("euler_characteristic: need 0 < m < n");
    if (r < 1) throw std::invalid_argument("euler_characteristic: r must be positive");
    Integer b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    Integer bp;
    mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(r));
    return Rational(bp) * mu;
}

Integer index_bound(long n, long r, long sizeT, long h)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r + sizeT));
    return p * h;
}

Interval R_left_form(long n, const NumberFieldRecord& k, const NumberFieldRecord& ell, int digits)
{
    int wd = digits + 20;
    mpfr_prec_t bits = bits_for_digits(wd);
    Rational Dk(k.abs_disc()), Dl(ell.abs_disc());
    long d = k.degree;
    Interval acc(rational_pow(Dk, (n * n - 1) / 2), bits);
    acc *= pow(Interval(Dl / (Dk * Dk), bits), frac((n - 1) * (n + 2), 4));
    Integer facts = 1;
    for (long j = 1; j <= n - 1; ++j) facts *= factorial(static_cast<unsigned long>(j));
    Integer fd;
    mpz_pow_ui(fd.get_mpz_t(), facts.get_mpz_t(), static_cast<unsigned long>(d));
    acc *= Rational(fd);
    acc /= pow(two_pi_interval(bits), d * (n - 1) * (n + 2) / 2);
    for (long j = 1; j <= (n - 1) / 2; ++j) {
        acc *= dedekind_zeta_positive(k, 2 * j, wd);
        acc *= hecke_L_positive(k, ell, 2 * j + 1, wd);
    }
    return acc;
}

const NumberFieldRecord* imaginary_quadratic(const FieldDatabase& db, long a)
{
    Integer D = (a % 4 == 3) ? Integer(a) : Integer(4 * a);
    auto v = db.fields_with(2, 0, 1, D);
    return v.empty() ? nullptr : v.front();
}

std::string ClassificationReport::survivor_line() const
{
    if (survivors.empty()) return "Survivors: none";
    std::string s = "Survivors: ";
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        const auto& sv = survivors[i];
        if (i) s += "; ";
        s += "n=" + std::to_string(sv.n) + ", ℓ=ℚ(√−" + std::to_string(sv.a) + "), 𝒯₀=" + join(sv.T0);
    }
    return s;
}

std::vector<std::string> ClassificationReport::survivor_labels() const
{
    std::vector<std::string> out;
    for (const auto& sv : survivors)
        out.push_back("n=" + std::to_string(sv.n) + " a=" + std::to_string(sv.a) + " T0=" + join(sv.T0));
    return out;
}

std::vector<ExistenceRecord> existence_data(const FieldDatabase& db)
{
    const auto& Q = db.get("Q");
    auto make = [&](std::string name, long n, long m, long r, const std::string& k, const std::string& ell,
                    long place, long count) {
        ExistenceRecord e;
        e.name = std::move(name);
        e.n = n;
        e.m = m;
        e.r = r;
        e.k = k == "Q" ? &Q : &db.get(k);
        e.ell = &db.get(ell);
        e.place = place;
        e.constructions = count;
        return e;
    };
    return {
        make("fake P4", 5, 1, 1, "Q", "Q-sqrt-7", 2, 4),
        make("fake Gr(2,5)", 5, 2, 1, "Q", "Q-sqrt-7", 2, 4),
        make("C2", 3, 1, 2, "Q-sqrt5", "Q-sqrt-3-sqrt5", 2, 2),
        make("C18", 3, 1, 2, "Q-sqrt6", "Q-sqrt-3-sqrt6", 3, 1),
        make("C10", 3, 1, 2, "Q-sqrt2", "Q-sqrt(-7+4sqrt2)", 2, 2),
    };
}

Classifier::Classifier(const FieldDatabase& db, int digits) : db_(db), digits_(digits)
{
    if (digits < 10) throw std::invalid_argument("precision below 10 digits");
}

Witness Classifier::certify(const std::string& quantity, const std::function<Interval(int)>& f,
                            const std::string& rel, const Rational& bound, bool& holds) const
{
    Certification c = rel == "<" ? certify_less(f, bound, digits_) : certify_greater(f, bound, digits_);
    if (c.verdict == Verdict::Undecided)
        throw Undecided(quantity + " " + rel + " " + dec(bound) + " undecided at " + std::to_string(c.digits) +
                        " digits");
    holds = c.verdict == Verdict::Certified;
    return certified_witness(quantity, c.value, rel, bound);
}

std::vector<LedgerEntry> Classifier::run_degree_stage(long n) const
{
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 5");
    std::vector<LedgerEntry> out;
    DegreePlan plan = degree_plan(n);
    const std::string base = "degree:n=" + std::to_string(n);
    bool ok = false;

    {
        LedgerEntry e;
        e.id = base + ":d>=" + std::to_string(plan.cap_d);
        e.stage = "degree";
        e.reason = "f bound below the degree threshold";
        e.citation = "degree-cap";
        long d0 = plan.cap_d;
        Rational delta = plan.cap_delta;
        std::string q = "f(" + std::to_string(n) + "," + std::to_string(d0) + "," + dec(delta) + ")";
        e.witnesses.push_back(certify(
            q, [&](int dg) { return f_bound(n, d0, delta, dg); }, "<", degree_threshold(static_cast<int>(d0)), ok));
        if (!ok) throw std::logic_error(q + " does not rule out d >= " + std::to_string(d0));
        e.verdict = CaseVerdict::Eliminated;
        out.push_back(std::move(e));
    }

    for (const auto& dc : plan.cases) {
        long d = dc.d;
        const std::string did = base + ":d=" + std::to_string(d);
        std::function<Interval(int)> B;
        std::string bname;
        if (dc.kind == Kind::F) {
            B = [=](int dg) { return f_bound(n, d, dc.delta, dg); };
            bname = "f(" + std::to_string(n) + "," + std::to_string(d) + "," + dec(dc.delta) + ")";
        } else {
            B = [=](int dg) { return phi_bound(n, d, dc.rw, dc.delta, dg); };
            bname = "phi(" + std::to_string(n) + "," + std::to_string(d) + "," + dec(dc.rw) + "," + dec(dc.delta) + ")";
        }
        LedgerEntry de;
        de.id = did;
        de.stage = "degree";
        de.citation = dc.kind == Kind::F ? "f-bound" : "phi-bound";
        if (dc.prelim) {
            auto [pd, pc] = *dc.prelim;
            std::string pq = "f(" + std::to_string(n) + "," + std::to_string(d) + "," + dec(pd) + ")";
            de.witnesses.push_back(certify(pq, [=](int dg) { return f_bound(n, d, pd, dg); }, "<", pc, ok));
            if (!ok) throw std::logic_error(pq + " not below " + dec(pc));
        }

        Integer cmin = *minimum_complex_disc(static_cast<int>(2 * d));
        std::string xname = bname + "^" + std::to_string(2 * d);
        Witness wx = certify(xname, [&](int dg) { return pow(B(dg), 2 * d); }, "<", Rational(cmin), ok);
        if (ok) {
            de.verdict = CaseVerdict::Eliminated;
            de.reason = "D_ell bound below the smallest totally complex discriminant of degree " + std::to_string(2 * d);
            de.witnesses.push_back(wx);
            de.witnesses.push_back(query_witness(static_cast<int>(2 * d), 0, static_cast<int>(d), "", cmin - 1));
            out.push_back(std::move(de));
            continue;
        }

        // D_ell^(1/2d) < c, D_k^(1/d) <= D_ell^(1/2d)
        Interval Bv = B(digits_);
        Rational c = round_up(Bv);
        de.witnesses.push_back(certify(bname, B, "<", c, ok));
        Integer lmax = ceil_q(rational_pow(c, 2 * d)) - 1;
        Integer kmax = ceil_q(rational_pow(c, d)) - 1;
        bool generic_rw = dc.kind == Kind::Phi && dc.rw == regulator_constants().generic;
        std::vector<const NumberFieldRecord*> ks = db_.fields_below(static_cast<int>(d), static_cast<int>(d), 0, kmax);
        const auto& exc = exception_discs(2 * d);
        if (generic_rw && !exc.empty()) {
            // an exceptional ell still has D_k^2 <= D_ell
            Integer emax = *std::max_element(exc.begin(), exc.end());
            Integer r;
            mpz_sqrt(r.get_mpz_t(), emax.get_mpz_t());
            auto more = db_.fields_below(static_cast<int>(d), static_cast<int>(d), 0, r);
            ks.insert(ks.end(), more.begin(), more.end());
            de.values.emplace_back("exceptional_k_max", r.get_str());
        }
        sort_fields(ks);
        de.values.emplace_back("D_k_max", kmax.get_str());
        de.values.emplace_back("D_ell_max", lmax.get_str());

        std::vector<std::string> sub;
        std::vector<LedgerEntry> kentries;
        for (const NumberFieldRecord* k : ks) {
            long Dk = k->abs_disc().get_si();
            const std::string kid = did + ":k=" + k_name(*k);
            LedgerEntry ke;
            ke.id = kid;
            ke.stage = "degree";
            ke.values.emplace_back("D_k", std::to_string(Dk));
            Integer max_l = lmax;
            bool use_exc = generic_rw;
            auto rule = plan.rules.find({d, Dk});
            if (rule != plan.rules.end()) {
                KRule kr = rule->second;
                std::string pq = "p2(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(Dk) + "," +
                                 dec(kr.rw) + "," + dec(kr.delta) + ")";
                auto P2 = [=](int dg) { return p2(n, d, Integer(Dk), kr.rw, kr.delta, dg); };
                Rational ck = round_up(P2(digits_));
                ke.witnesses.push_back(certify(pq, P2, "<", ck, ok));
                max_l = ceil_q(ck * Dk * Dk) - 1;
                use_exc = kr.rw == regulator_constants().generic;
                ke.citation = "p2-bound";
            } else {
                ke.citation = de.citation;
            }
            std::vector<const NumberFieldRecord*> ells = db_.quadratic_extensions_of(*k, true, max_l);
            std::vector<Integer> extra;
            if (use_exc) {
                for (const auto& D : exc) {
                    extra.push_back(D);
                    for (const auto* r : db_.fields_with(static_cast<int>(2 * d), 0, static_cast<int>(d), D))
                        if (r->has_subfield(k->label)) ells.push_back(r);
                }
            }
            sort_fields(ells);
            ke.values.emplace_back("D_ell_max", max_l.get_str());
            if (ells.empty()) {
                ke.verdict = CaseVerdict::Eliminated;
                ke.reason = "database lookup";
                ke.witnesses.push_back(
                    query_witness(static_cast<int>(2 * d), 0, static_cast<int>(d), k->label, max_l, extra));
                ke.citation = "db-lookup";
                sub.push_back(kid);
                kentries.push_back(std::move(ke));
                continue;
            }

            std::vector<std::string> lsub;
            std::vector<LedgerEntry> lentries;
            for (const NumberFieldRecord* ell : ells) {
                LedgerEntry le;
                le.id = kid + ":l=" + ell->label;
                le.stage = "degree";
                long h = h_torsion(*ell, n);
                Rational ratio(ell->abs_disc(), Integer(Dk) * Dk);
                ratio.canonicalize();
                le.values.emplace_back("n", std::to_string(n));
                le.values.emplace_back("k", k->label);
                le.values.emplace_back("ell", ell->label);
                le.values.emplace_back("D_ell", ell->abs_disc().get_str());
                le.values.emplace_back("h_ell_n", std::to_string(h));
                std::string pq = "p3(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(Dk) + "," +
                                 std::to_string(h) + ")";
                Witness w3 = certify(
                    pq, [=](int dg) { return p3(n, d, Integer(Dk), h, dg); }, "<", ratio, ok);
                if (ok) {
                    le.verdict = CaseVerdict::Eliminated;
                    le.reason = "p3 bound below D_ell/D_k^2";
                    le.citation = "p3-bound";
                    le.witnesses.push_back(w3);
                } else {
                    Rational R = compute_R(n, *k, *ell);
                    auto pr = proposition1_check(R, n);
                    le.values.emplace_back("R", to_string(R));
                    Interval left = R_left_form(n, *k, *ell, digits_);
                    le.values.emplace_back("R_left", left.str(25));
                    le.values.emplace_back("cross_check", left.contains(R) ? "contains" : "MISMATCH");
                    le.citation = "prop1";
                    if (!pr.pass) {
                        le.verdict = CaseVerdict::Eliminated;
                        le.reason = "numerator prime";
                        le.witnesses.push_back(prime_witness(R, n, pr.witness));
                    } else {
                        le.verdict = CaseVerdict::Survives;
                        le.reason = "numerator primes divide n";
                    }
                }
                lsub.push_back(le.id);
                lentries.push_back(std::move(le));
            }
            bool all = std::all_of(lentries.begin(), lentries.end(),
                                   [](const LedgerEntry& x) { return x.verdict == CaseVerdict::Eliminated; });
            ke.verdict = all ? CaseVerdict::Eliminated : CaseVerdict::Survives;
            ke.reason = "every quadratic extension in range eliminated";
            ke.witnesses.push_back(subcases_witness(lsub));
            sub.push_back(kid);
            kentries.push_back(std::move(ke));
            for (auto& x : lentries) kentries.push_back(std::move(x));
        }
        bool all = std::all_of(kentries.begin(), kentries.end(),
                               [](const LedgerEntry& x) { return x.verdict == CaseVerdict::Eliminated; });
        de.verdict = all ? CaseVerdict::Eliminated : CaseVerdict::Survives;
        de.reason = "every totally real k in range eliminated";
        de.witnesses.push_back(subcases_witness(sub));
        out.push_back(std::move(de));
        for (auto& x : kentries) out.push_back(std::move(x));
    }
    return out;
}

std::vector<LedgerEntry> Classifier::run_field_stage(long n, std::vector<FieldCandidate>& cands) const
{
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 5");
    std::vector<LedgerEntry> out;
    const std::string base = "field:n=" + std::to_string(n);
    Rational delta = field_delta(n);
    auto Dfn = [=](int dg) { return d_bound(n, delta, dg); };
    Interval Dv = Dfn(digits_);
    Integer dmax = floor_q(upper_rational(Dv));
    bool ok = false;

    LedgerEntry de;
    de.id = base + ":d-bound";
    de.stage = "field";
    de.citation = "d-bound";
    de.verdict = CaseVerdict::Eliminated;
    std::string dq = "dbound(" + std::to_string(n) + "," + dec(delta) + ")";
    de.witnesses.push_back(certify(dq, Dfn, "<", Rational(dmax + 1), ok));
    auto ells = db_.fields_below(2, 0, 1, dmax);
    std::sort(ells.begin(), ells.end(), [](auto x, auto y) { return a_of_disc(x->abs_disc()) < a_of_disc(y->abs_disc()); });
    std::vector<long> admitted;
    for (const auto* e : ells) admitted.push_back(a_of_disc(e->abs_disc()));
    de.reason = ells.empty() ? "no imaginary quadratic field below the bound"
                             : "imaginary quadratic fields outside the admitted list";
    de.values.emplace_back("D_ell_max", dmax.get_str());
    de.values.emplace_back("admitted_a", join(admitted));
    out.push_back(std::move(de));

    for (const auto* ell : ells) {
        long a = a_of_disc(ell->abs_disc());
        long h = h_torsion(*ell, n);
        LedgerEntry e;
        e.id = base + ":a=" + std::to_string(a);
        e.stage = "field";
        e.values.emplace_back("D_ell", ell->abs_disc().get_str());
        e.values.emplace_back("h_ell_n", std::to_string(h));
        std::string lq = "lambda(" + std::to_string(n) + "," + std::to_string(h) + ")";
        Witness w = certify(lq, [=](int dg) { return lambda_bound(n, h, dg); }, "<", Rational(ell->abs_disc()), ok);
        if (ok) {
            e.verdict = CaseVerdict::Eliminated;
            e.reason = "lambda bound below D_ell";
            e.citation = "lambda-bound";
            e.witnesses.push_back(w);
            out.push_back(std::move(e));
        } else {
            cands.push_back({n, a, ell, h});
        }
    }
    return out;
}

std::vector<LedgerEntry> Classifier::run_cocompact_stage(const std::vector<FieldCandidate>& candidates,
                                                         std::vector<Survivor>& survivors) const
{
    std::vector<LedgerEntry> out;
    bool ok = false;
    for (const auto& c : candidates) {
        LedgerEntry e;
        e.id = "cocompact:n=" + std::to_string(c.n) + ":a=" + std::to_string(c.a);
        e.stage = "cocompact";
        e.citation = "L-bound";
        long p = smallest_split_prime(c.a);
        Rational D(c.ell->abs_disc());
        e.values.emplace_back("D_ell", c.ell->abs_disc().get_str());
        e.values.emplace_back("h_ell_n", std::to_string(c.h));
        e.values.emplace_back("p_a", std::to_string(p));
        std::vector<long> failing;
        std::vector<Witness> ws;
        for (long d : prime_divisors(c.n)) {
            std::string q = "L(" + std::to_string(c.n) + "," + std::to_string(d) + "," + std::to_string(p) + "," +
                            std::to_string(c.h) + ")";
            long n = c.n, h = c.h;
            Witness w = certify(q, [=](int dg) { return L_elimination(n, d, p, h, dg); }, "<", D, ok);
            if (ok)
                ws.push_back(w);
            else
                failing.push_back(d);
        }
        if (failing.empty()) {
            e.verdict = CaseVerdict::Eliminated;
            e.reason = "L bound below D_ell at the smallest split prime";
            e.witnesses = std::move(ws);
            out.push_back(std::move(e));
            continue;
        }
        // L decreases in q, so one larger prime settles every q > p
        long q2 = next_prime(p);
        std::vector<Witness> larger;
        for (long d : failing) {
            std::string q = "L(" + std::to_string(c.n) + "," + std::to_string(d) + "," + std::to_string(q2) + "," +
                            std::to_string(c.h) + ")";
            long n = c.n, h = c.h;
            Witness w = certify(q, [=](int dg) { return L_elimination(n, d, q2, h, dg); }, "<", D, ok);
            if (!ok) throw Undecided("residue characteristic of T0 not pinned for " + e.id);
            larger.push_back(w);
            std::string qp = "L(" + std::to_string(c.n) + "," + std::to_string(d) + "," + std::to_string(p) + "," +
                             std::to_string(c.h) + ")";
            larger.push_back(certify(qp, [=](int dg) { return L_elimination(n, d, p, h, dg); }, ">", D, ok));
        }
        e.verdict = CaseVerdict::Survives;
        e.reason = "division algebra possible only above " + std::to_string(p);
        e.witnesses = std::move(larger);
        e.values.emplace_back("T0", join({p}));
        survivors.push_back({c.n, c.a, c.ell, {p}});
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<LedgerEntry> Classifier::verify_existence(std::vector<ExistenceRecord>* records) const
{
    std::vector<LedgerEntry> out;
    auto data = existence_data(db_);
    for (auto& x : data) {
        LocalDatum v;
        v.q = residue_size(*x.k, x.place);
        v.split = SplitType::Split;
        v.inner_degree = x.n;
        v.parahoric = ParahoricType::MaximalInner;
        x.q = v.q;
        x.R = compute_R(x.n, *x.k, *x.ell);
        x.e_prime = local_factor(x.n, v);
        x.mu = covolume(x.n, *x.k, *x.ell, {v});
        x.chi = euler_characteristic(x.mu, x.n, x.m, x.r);

        LedgerEntry e;
        e.id = "existence:" + x.name;
        e.stage = "existence";
        e.verdict = CaseVerdict::ExistenceVerified;
        e.reason = "covolume and Euler characteristic";
        e.citation = "existence";
        e.values = {{"n", std::to_string(x.n)},
                    {"k", x.k->label},
                    {"ell", x.ell->label},
                    {"place", std::to_string(x.place)},
                    {"q", x.q.get_str()},
                    {"R", to_string(x.R)},
                    {"e_prime", x.e_prime.get_str()},
                    {"mu", to_string(x.mu)},
                    {"chi", to_string(x.chi)},
                    {"constructions", std::to_string(x.constructions)}};
        if (x.ell->abelian) {
            Interval left = R_left_form(x.n, *x.k, *x.ell, digits_);
            e.values.emplace_back("R_left", left.str(25));
            e.values.emplace_back("cross_check", left.contains(x.R) ? "contains" : "MISMATCH");
        }
        out.push_back(std::move(e));
    }
    if (records) *records = std::move(data);
    return out;
}

namespace {

struct PerN {
    std::vector<LedgerEntry> entries;
    std::vector<FieldCandidate> cands;
    std::vector<std::string> summary;
};

} // namespace

ClassificationReport Classifier::classify(const std::vector<long>& ns, bool existence) const
{
    for (long n : ns)
        if (n < 5 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 5");

    auto run = [this](long n) {
        PerN r;
        r.entries = run_degree_stage(n);
        for (const auto& e : r.entries)
            if (e.verdict != CaseVerdict::Eliminated) throw std::logic_error("degree stage left " + e.id);
        auto fe = run_field_stage(n, r.cands);
        std::string adm;
        for (const auto& e : fe)
            if (e.id.ends_with(":d-bound"))
                for (const auto& [key, val] : e.values)
                    if (key == "admitted_a") adm = val;
        r.entries.insert(r.entries.end(), fe.begin(), fe.end());
        std::string head = "n=" + std::to_string(n) + ": ";
        r.summary.push_back(head + "degree stage eliminated every d >= 2");
        r.summary.push_back(head + "𝔡 admits a∈" + adm);
        return r;
    };

    std::vector<PerN> per(ns.size());
    if (mpfr_buildopt_tls_p() && ns.size() > 1) {
        std::vector<std::future<PerN>> fs;
        for (long n : ns) fs.push_back(std::async(std::launch::async, run, n));
        for (std::size_t i = 0; i < fs.size(); ++i) per[i] = fs[i].get();
    } else {
        for (std::size_t i = 0; i < ns.size(); ++i) per[i] = run(ns[i]);
    }

    ClassificationReport rep;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        auto& r = per[i];
        std::vector<Survivor> sv;
        auto ce = run_cocompact_stage(r.cands, sv);
        rep.entries.insert(rep.entries.end(), r.entries.begin(), r.entries.end());
        rep.entries.insert(rep.entries.end(), ce.begin(), ce.end());
        rep.summary.insert(rep.summary.end(), r.summary.begin(), r.summary.end());
        std::vector<long> after, left;
        for (const auto& c : r.cands) after.push_back(c.a);
        for (const auto& x : sv) left.push_back(x.a);
        std::string line = "n=" + std::to_string(ns[i]) + ": k=ℚ forced; ";
        line += after.empty() ? "no a after λ" : "a∈" + join(after) + " after λ";
        line += left.empty() ? "; all eliminated" : "; survivors a∈" + join(left);
        rep.summary.push_back(line);
        rep.survivors.insert(rep.survivors.end(), sv.begin(), sv.end());
    }
    if (existence) {
        auto ee = verify_existence(&rep.existence);
        rep.entries.insert(rep.entries.end(), ee.begin(), ee.end());
    }
    return rep;
}

} // namespace fakeclass
