#include "fakeclass/exactnum.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fakeclass {

namespace {

std::mutex phi_mutex;
std::map<long, std::vector<Integer>> phi_cache;

// exact division of integer polynomials (constant first), divisor monic
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den)
{
    size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn);
    for (size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        for (size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (size_t i = 0; i < dn; ++i)
        if (num[i] != 0)
            throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

std::vector<Integer> compute_phi(long m)
{
    std::vector<Integer> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0)
            p = divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long m)
{
    if (m <= 0)
        throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache.find(m);
        if (it != phi_cache.end())
            return it->second;
    }
    std::vector<Integer> p = compute_phi(m);
    std::lock_guard<std::mutex> lock(phi_mutex);
    // std::map nodes are stable, so the reference survives later inserts
    return phi_cache.emplace(m, std::move(p)).first->second;
}

CyclotomicRational::CyclotomicRational(long m)
    : m_(m), c_(static_cast<size_t>(euler_phi(m)))
{
}

CyclotomicRational::CyclotomicRational(long m, const Rational& r)
    : CyclotomicRational(m)
{
    c_[0] = r;
}

void CyclotomicRational::reduce(std::vector<Rational>& poly) const
{
    const auto& phi = cyclotomic_polynomial(m_);
    size_t deg = phi.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        for (size_t j = 0; j <= deg; ++j)
            poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg);
}

CyclotomicRational CyclotomicRational::zeta_power(long m, long k)
{
    CyclotomicRational z(m);
    long e = ((k % m) + m) % m;
    std::vector<Rational> poly(static_cast<size_t>(e) + 1);
    poly[static_cast<size_t>(e)] = 1;
    if (poly.size() < z.c_.size()) poly.resize(z.c_.size());
    z.reduce(poly);
    z.c_ = std::move(poly);
    return z;
}

bool CyclotomicRational::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicRational::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CyclotomicRational::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

CyclotomicRational CyclotomicRational::conjugate(long a) const
{
    if (gcd_long(a, m_) != 1)
        throw std::invalid_argument("conjugate: exponent not a unit mod m");
    CyclotomicRational out(m_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out += zeta_power(m_, static_cast<long>(i) * a) * c_[i];
    }
    return out;
}

CyclotomicRational CyclotomicRational::embed(long M) const
{
    if (M % m_ != 0)
        throw std::invalid_argument("embed: target conductor not a multiple");
    long step = M / m_;
    CyclotomicRational out(M);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out += zeta_power(M, static_cast<long>(i) * step) * c_[i];
    }
    return out;
}

void CyclotomicRational::check_same(const CyclotomicRational& o) const
{
    if (o.m_ != m_)
        throw std::invalid_argument("cyclotomic conductors differ; embed explicitly");
}

CyclotomicRational& CyclotomicRational::operator+=(const CyclotomicRational& o)
{
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicRational& CyclotomicRational::operator-=(const CyclotomicRational& o)
{
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicRational& CyclotomicRational::operator*=(const CyclotomicRational& o)
{
    check_same(o);
    std::vector<Rational> prod(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0)
                prod[i + j] += c_[i] * o.c_[j];
    }
    if (prod.size() < c_.size()) prod.resize(c_.size());
    reduce(prod);
    c_ = std::move(prod);
    return *this;
}

CyclotomicRational& CyclotomicRational::operator*=(const Rational& r)
{
    for (auto& x : c_) x *= r;
    return *this;
}

CyclotomicRational CyclotomicRational::operator-() const
{
    CyclotomicRational r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

bool CyclotomicRational::operator==(const CyclotomicRational& o) const
{
    return m_ == o.m_ && c_ == o.c_;
}

std::string CyclotomicRational::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c_[i]) << ")";
        if (i) os << "*z" << m_ << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace fakeclass
