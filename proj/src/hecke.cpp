#include "fakeclass/hecke.hpp"
#include "fakeclass/errors.hpp"

#include <cmath>

namespace fakeclass {

using Elem = RealQuadratic::Elem;

RealQuadratic::RealQuadratic(const NumberFieldRecord& k)
{
    if (k.degree != 2 || !k.totally_real() || k.poly.size() != 3 || k.poly[2] != 1)
        throw UnsupportedField(k.display_name() + " is not a real quadratic field");
    c0 = k.poly[0];
    c1 = k.poly[1];
    if (disc() != k.disc)
        throw UnsupportedField(k.display_name() + ": defining polynomial does not generate the maximal order");
}

Elem RealQuadratic::mul(const Elem& a, const Elem& b) const
{
    // theta^2 = -c1 theta - c0
    Rational t = a.x1 * b.x1;
    return {a.x0 * b.x0 - Rational(c0) * t, a.x0 * b.x1 + a.x1 * b.x0 - Rational(c1) * t};
}

Rational RealQuadratic::norm(const Elem& a) const
{
    return a.x0 * a.x0 - Rational(c1) * a.x0 * a.x1 + Rational(c0) * a.x1 * a.x1;
}

Elem RealQuadratic::inverse(const Elem& a) const
{
    Rational n = norm(a);
    if (n == 0) throw std::domain_error("inverse of zero");
    return scale(conj(a), 1 / n);
}

double RealQuadratic::approx(const Elem& a) const
{
    double theta = (-c1.get_d() + std::sqrt(disc().get_d())) / 2;
    return a.x0.get_d() + a.x1.get_d() * theta;
}

Elem RealQuadratic::fundamental_unit() const
{
    Integer D = disc();
    for (long b = 1; b < 1000000; ++b) {
        for (int t : {-1, 1}) {
            Integer d = D * b * b + 4 * t;
            if (d < 0 || !mpz_perfect_square_p(d.get_mpz_t())) continue;
            Integer s = sqrt(d);
            for (Integer num : {Integer(c1 * b + s), Integer(c1 * b - s)}) {
                if (mpz_odd_p(num.get_mpz_t())) continue;
                Elem e{Rational(num / 2), Rational(b)};
                if (approx(e) > 1) return e;
            }
        }
    }
    throw UnsupportedField("no fundamental unit found");
}

namespace {

using Series = std::vector<Elem>;   // coefficients of u^0..u^m

// (alpha + beta u)^e truncated after u^m, e >= -1
Series linear_power(const RealQuadratic& F, const Elem& alpha, const Elem& beta, long e, long m)
{
    Series out(static_cast<std::size_t>(m + 1), Elem{0, 0});
    if (e == -1) {
        Elem ainv = F.inverse(alpha);
        Elem ratio = F.scale(F.mul(beta, ainv), -1);
        Elem term = ainv;
        for (long i = 0; i <= m; ++i) {
            out[i] = term;
            term = F.mul(term, ratio);
        }
        return out;
    }
    // binomial expansion
    std::vector<Elem> apow{Elem{1, 0}}, bpow{Elem{1, 0}};
    for (long i = 1; i <= e; ++i) {
        apow.push_back(F.mul(apow.back(), alpha));
        bpow.push_back(F.mul(bpow.back(), beta));
    }
    for (long i = 0; i <= std::min(e, m); ++i)
        out[i] = F.scale(F.mul(apow[e - i], bpow[i]), Rational(binomial(e, i)));
    return out;
}

Elem coefficient_product(const RealQuadratic& F, const Series& A, const Series& B, long m)
{
    Elem acc{0, 0};
    for (long i = 0; i <= m; ++i) acc = F.add(acc, F.mul(A[i], B[m - i]));
    return acc;
}

} // namespace

Rational shintani_L_negative(const NumberFieldRecord& k, long M, const std::function<int(long, long)>& psi, long m)
{
    if (m < 0) throw std::invalid_argument("shintani_L_negative: m must be nonnegative");
    if (M < 1) throw std::invalid_argument("shintani_L_negative: modulus must be positive");
    RealQuadratic F(k);
    if (k.class_number() != 1) throw UnsupportedField(k.display_name() + ": class number is not 1");
    Elem eps = F.fundamental_unit();
    if (F.norm(eps) != -1)
        throw UnsupportedField(k.display_name() + ": fundamental unit has norm +1, narrow class number exceeds 1");
    Elem ep = F.mul(eps, eps);       // totally positive generator, ep > 1 so its theta coordinate is positive
    Elem epc = F.conj(ep);
    if (ep.x1.get_den() != 1 || ep.x0.get_den() != 1 || ep.x1 <= 0)
        throw std::logic_error("unexpected totally positive unit");
    long e0 = ep.x0.get_num().get_si();
    long e1 = ep.x1.get_num().get_si();

    const long N = 2 * m + 2;
    // S[l1] = sum_rho psi(rho) B_l1(y1) B_l2(y2), l2 = N - l1
    std::vector<Rational> S(static_cast<std::size_t>(N + 1), Rational(0));
    for (long b = 0; b < M * e1; ++b) {
        Integer q = Integer(b * e0);
        mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e1));
        long base = q.get_si();
        Rational y2 = frac(b, M * e1);
        std::vector<Rational> B2(static_cast<std::size_t>(N + 1));
        for (long l = 0; l <= N; ++l) B2[l] = bernoulli_polynomial(static_cast<unsigned>(l), y2);
        for (long a = base + 1; a <= base + M; ++a) {
            int w = psi(a, b);
            if (w == 0) continue;
            Rational y1 = (Rational(a) - frac(b * e0, e1)) / M;
            for (long l1 = 0; l1 <= N; ++l1) {
                Rational t = bernoulli_polynomial(static_cast<unsigned>(l1), y1) * B2[N - l1];
                if (w > 0) S[l1] += t; else S[l1] -= t;
            }
        }
    }

    Elem one{1, 0};
    Elem total{0, 0};
    for (long l1 = 0; l1 <= N; ++l1) {
        if (S[l1] == 0) continue;
        long l2 = N - l1;
        Series A = linear_power(F, one, one, l1 - 1, m);
        Series B = linear_power(F, ep, epc, l2 - 1, m);
        Elem c = coefficient_product(F, A, B, m);
        Rational w = S[l1] / Rational(factorial(l1) * factorial(l2));
        total = F.add(total, F.scale(c, w));
    }
    Rational rational_part = F.trace(total) / 2;
    Integer mf = factorial(static_cast<unsigned long>(m));
    Rational scale = Rational(mf * mf);
    Integer Mpow;
    mpz_ui_pow_ui(Mpow.get_mpz_t(), static_cast<unsigned long>(M), static_cast<unsigned long>(2 * m));
    return rational_part * scale * Rational(Mpow);
}

} // namespace fakeclass
