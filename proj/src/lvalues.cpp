#include "fakeclass/lvalues.hpp"
#include "fakeclass/errors.hpp"
#include "fakeclass/hecke.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fakeclass {

namespace {

std::mutex bern_chi_mutex;
std::map<std::pair<DirichletCharacter, unsigned>, CyclotomicRational> bern_chi_cache;

long lcm_of_orders(const std::vector<DirichletCharacter>& chars)
{
    long M = 1;
    for (const auto& c : chars) M = lcm_long(M, c.order());
    return M;
}

Rational rational_product_negative(const std::vector<DirichletCharacter>& chars, long s)
{
    long M = lcm_of_orders(chars);
    CyclotomicRational acc(M, Rational(1));
    for (const auto& c : chars) acc *= dirichlet_L_negative(c, s).embed(M);
    return acc.to_rational();
}

Interval real_part_of_product(const std::vector<DirichletCharacter>& chars, long s, int digits)
{
    mpfr_prec_t bits = bits_for_digits(digits + 10);
    ComplexInterval acc(Interval(Rational(1), bits), Interval(Rational(0), bits));
    for (const auto& c : chars) acc *= dirichlet_L_positive(c, s, digits + 10);
    if (!acc.im.contains(Rational(0)))
        throw std::logic_error("character product is not real");
    return acc.re;
}

} // namespace

CyclotomicRational generalized_bernoulli(const DirichletCharacter& chi, unsigned n)
{
    auto key = std::make_pair(chi, n);
    {
        std::lock_guard<std::mutex> lock(bern_chi_mutex);
        auto it = bern_chi_cache.find(key);
        if (it != bern_chi_cache.end()) return it->second;
    }
    long f = chi.modulus(), M = chi.order();
    CyclotomicRational sum(M, Rational(0));
    for (long a = 1; a <= f; ++a) {
        auto e = chi.exponent(a);
        if (!e) continue;
        Rational b = bernoulli_polynomial(n, frac(a, f));
        if (b == 0) continue;
        sum += CyclotomicRational::zeta_power(M, *e) * b;
    }
    sum *= rational_pow(Rational(f), static_cast<long>(n) - 1);
    std::lock_guard<std::mutex> lock(bern_chi_mutex);
    bern_chi_cache.emplace(key, sum);
    return sum;
}

CyclotomicRational dirichlet_L_negative(const DirichletCharacter& chi, long s)
{
    if (s > 0) throw std::invalid_argument("dirichlet_L_negative: s must be <= 0");
    unsigned n = static_cast<unsigned>(1 - s);
    return generalized_bernoulli(chi, n) * Rational(-1, static_cast<long>(n));
}

Rational dedekind_zeta_negative(const NumberFieldRecord& K, long s)
{
    return rational_product_negative(field_characters(K), s);
}

std::vector<DirichletCharacter> relative_characters(const NumberFieldRecord& k, const NumberFieldRecord& ell)
{
    auto base = field_characters(k);
    std::vector<DirichletCharacter> out;
    for (const auto& c : field_characters(ell))
        if (std::find(base.begin(), base.end(), c) == base.end()) out.push_back(c);
    if (out.size() + base.size() != static_cast<std::size_t>(ell.degree))
        throw DatabaseError(ell.display_name() + " does not contain the characters of " + k.display_name());
    return out;
}

Rational hecke_L_relative(const NumberFieldRecord& k, const NumberFieldRecord& ell, long s)
{
    if (s > 0) throw std::invalid_argument("hecke_L_relative: s must be <= 0");
    if (ell.degree != 2 * k.degree) throw std::invalid_argument("hecke_L_relative: not a quadratic extension");
    if (k.abelian && ell.abelian) return rational_product_negative(relative_characters(k, ell), s);
    if (ell.hecke && ell.hecke->base == k.label) {
        long p = ell.hecke->prime, r = ell.hecke->root;
        auto psi = [p, r](long a, long b) {
            long x = ((a % p) + (b % p) * r) % p;
            return kronecker_symbol(x < 0 ? x + p : x, p);
        };
        return shintani_L_negative(k, p, psi, -s);
    }
    throw UnsupportedField(ell.display_name() + " over " + k.display_name() + ": no character data for the relative L-function");
}

ComplexInterval dirichlet_L_positive(const DirichletCharacter& chi, long s, int digits)
{
    if (s < 2) throw std::invalid_argument("dirichlet_L_positive: s must be >= 2");
    mpfr_prec_t bits = bits_for_digits(digits);
    long f = chi.modulus();
    ComplexInterval sum(Interval(Rational(0), bits), Interval(Rational(0), bits));
    for (long a = 1; a <= f; ++a) {
        if (!chi.exponent(a)) continue;
        Interval h = hurwitz_zeta_interval(Rational(s), frac(a, f), digits);
        ComplexInterval v = chi.numeric_value(a, bits);
        v *= h;
        sum += v;
    }
    Interval fs = pow(Interval(Rational(f), bits), s);
    sum.re /= fs;
    sum.im /= fs;
    return sum;
}

Interval dedekind_zeta_positive(const NumberFieldRecord& K, long s, int digits)
{
    return real_part_of_product(field_characters(K), s, digits);
}

Interval hecke_L_positive(const NumberFieldRecord& k, const NumberFieldRecord& ell, long s, int digits)
{
    if (!(k.abelian && ell.abelian))
        throw UnsupportedField(ell.display_name() + " over " + k.display_name() + ": positive side needs abelian fields");
    return real_part_of_product(relative_characters(k, ell), s, digits);
}

Interval euler_product_zeta(const NumberFieldRecord& K, long s, int digits, long prime_bound)
{
    if (s < 2) throw std::invalid_argument("euler_product_zeta: s must be >= 2");
    auto chars = field_characters(K);
    mpfr_prec_t bits = bits_for_digits(digits + 10);
    Interval acc(Rational(1), bits);

    std::vector<bool> composite(static_cast<std::size_t>(prime_bound), false);
    for (long p = 2; p < prime_bound; ++p) {
        if (composite[p]) continue;
        for (long q = p * p; q < prime_bound; q += p) composite[q] = true;
        long count = 0, fprime = 1;
        for (const auto& c : chars) {
            if (c.modulus() % p == 0) continue;
            ++count;
            long e = *c.exponent(p);
            fprime = lcm_long(fprime, c.order() / gcd_long(e, c.order()));
        }
        // (1 - p^(-s f'))^(-count/f')
        Interval x = Interval(Rational(1), bits) / pow(Interval(Rational(p), bits), s * fprime);
        Interval local = Interval(Rational(1), bits) - x;
        acc /= pow(local, count / fprime);
    }

    Interval P(Rational(prime_bound), bits);
    Interval Ps = Interval(Rational(1), bits) / pow(P, s);
    Interval T = (Ps + P * Ps / Rational(s - 1)) / (Interval(Rational(1), bits) - Ps) * Rational(K.degree);
    Interval factor = exp(T);
    mpfr_set_ui(factor.lo(), 1, MPFR_RNDD);
    return acc * factor;
}

FunctionalEquationResult functional_equation_check(const NumberFieldRecord& k, const NumberFieldRecord* ell, int j,
                                                   int digits, const Rational& scale)
{
    if (j < 1) throw std::invalid_argument("functional_equation_check: j must be >= 1");
    if (!k.totally_real()) throw UnsupportedField(k.display_name() + " is not totally real");
    mpfr_prec_t bits = bits_for_digits(digits + 10);
    const long d = k.degree;
    Interval two_pi = two_pi_interval(bits);
    Interval pi = pi_interval(bits);
    Interval Dk(Rational(k.abs_disc()), bits);

    // zeta_k(2j) = zeta_k(1-2j) (-1)^(jd) (2pi)^(2jd) / (2^d (2j-1)!^d Dk^(2j-1/2))
    Rational zneg = dedekind_zeta_negative(k, 1 - 2 * j) * scale;
    Rational zc = zneg / rational_pow(Rational(2) * Rational(factorial(2 * j - 1)), d);
    if ((j * d) % 2 == 1) zc = -zc;
    Interval rhs_zeta = pow(two_pi, 2 * j * d) * zc / pow(Dk, Rational(4 * j - 1, 2));
    Interval lhs_zeta = dedekind_zeta_positive(k, 2 * j, digits);

    FunctionalEquationResult res{Verdict::Undecided, lhs_zeta, rhs_zeta, std::nullopt, std::nullopt};
    bool disjoint = !lhs_zeta.overlaps(rhs_zeta);
    Rational eps = Rational(1) / rational_pow(Rational(10), std::min(digits / 2, 30));
    bool narrow = lhs_zeta.width_below(eps) && rhs_zeta.width_below(eps);

    if (ell) {
        // L(2j+1) = L(-2j) (-4)^(jd) pi^((2j+1)d) / (2j)!^d * N^(-(4j+1)/2), N = D_ell / D_k
        Rational Lneg = hecke_L_relative(k, *ell, -2 * j) * scale;
        Rational c = Lneg * rational_pow(Rational(-4), j * d) / rational_pow(Rational(factorial(2 * j)), d);
        Rational N = Rational(ell->abs_disc()) / Rational(k.abs_disc());
        Interval rhs_L = pow(pi, (2 * j + 1) * d) * c / pow(Interval(N, bits), Rational(4 * j + 1, 2));
        Interval lhs_L = hecke_L_positive(k, *ell, 2 * j + 1, digits);
        disjoint = disjoint || !lhs_L.overlaps(rhs_L);
        narrow = narrow && lhs_L.width_below(eps) && rhs_L.width_below(eps);
        res.lhs_L = lhs_L;
        res.rhs_L = rhs_L;
    }
    res.verdict = disjoint ? Verdict::Refuted : (narrow ? Verdict::Certified : Verdict::Undecided);
    return res;
}

} // namespace fakeclass
