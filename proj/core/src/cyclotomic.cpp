#include "gop/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace gop {

const Poly& cyclotomic_polynomial(unsigned n)
{
    static std::recursive_mutex mu;
    static std::map<unsigned, Poly> cache;
    if (n == 0)
        throw DomainError("cyclotomic polynomial of level 0");
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    Poly p = Poly::monomial(Rat(1), n) - Poly(Rat(1));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            p = p / cyclotomic_polynomial(d);
    return cache.emplace(n, p).first->second;
}

unsigned common_level(unsigned a, unsigned b)
{
    return std::lcm(a, b);
}

CycConst::CycConst(unsigned level) : level_(level)
{
    if (level == 0)
        throw DomainError("cyclotomic level 0");
}

CycConst::CycConst(unsigned level, const Rat& c) : CycConst(level)
{
    t_.push_back(Poly(c));
    normalize();
}

CycConst CycConst::zeta(unsigned level, long k)
{
    long e = k % static_cast<long>(level);
    if (e < 0)
        e += level;
    CycConst c(level);
    c.t_.push_back(Poly::monomial(Rat(1), static_cast<std::size_t>(e)) % cyclotomic_polynomial(level));
    c.normalize();
    return c;
}

CycConst CycConst::tau(unsigned level)
{
    CycConst c(level);
    c.t_ = {Poly(), Poly(Rat(1))};
    return c;
}

void CycConst::normalize()
{
    const Poly& phi = cyclotomic_polynomial(level_);
    for (auto& p : t_)
        if (p.degree() >= phi.degree())
            p = p % phi;
    while (!t_.empty() && t_.back().is_zero())
        t_.pop_back();
}

CycConst CycConst::lifted(unsigned m) const
{
    if (m % level_ != 0)
        throw DomainError("cyclotomic lift to a non-multiple level");
    if (m == level_)
        return *this;
    CycConst c(m);
    const Poly sub = Poly::monomial(Rat(1), m / level_);
    for (const auto& p : t_)
        c.t_.push_back(p.compose(sub));
    c.normalize();
    return c;
}

CycConst CycConst::inverse() const
{
    if (t_.size() != 1)
        throw DomainError("inverse of a zero or tau-dependent constant");
    CycConst c(level_);
    c.t_.push_back(inverse_mod(t_[0], cyclotomic_polynomial(level_)));
    return c;
}

CycConst CycConst::divided_by_tau() const
{
    if (t_.empty())
        return *this;
    if (!t_[0].is_zero())
        throw DomainError("constant is not divisible by tau");
    CycConst c(level_);
    c.t_.assign(t_.begin() + 1, t_.end());
    return c;
}

CycConst CycConst::conjugated() const
{
    CycConst c(level_);
    // zeta^-1 = zeta^(N-1)
    const Poly inv = Poly::monomial(Rat(1), level_ - 1);
    for (std::size_t m = 0; m < t_.size(); ++m) {
        Poly p = t_[m].compose(inv) % cyclotomic_polynomial(level_);
        c.t_.push_back(m % 2 ? -p : p);
    }
    c.normalize();
    return c;
}

std::string CycConst::to_string() const
{
    if (t_.empty())
        return "0";
    std::string out;
    const std::string zeta = "zeta" + std::to_string(level_);
    for (std::size_t m = 0; m < t_.size(); ++m) {
        const auto& cs = t_[m].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i] == 0)
                continue;
            Rat mag = abs(cs[i]);
            std::string term;
            if (mag != 1 || (i == 0 && m == 0))
                term = gop::to_string(mag);
            auto add = [&](const std::string& f) { term += (term.empty() ? "" : "*") + f; };
            if (i > 0)
                add(zeta + "^" + std::to_string(i));
            if (m > 0)
                add("tau^" + std::to_string(m));
            if (out.empty())
                out = (cs[i] < 0 ? "-" : "") + term;
            else
                out += (cs[i] < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

CycConst operator+(const CycConst& a0, const CycConst& b0)
{
    const unsigned l = common_level(a0.level_, b0.level_);
    CycConst a = a0.lifted(l), b = b0.lifted(l);
    if (b.t_.size() > a.t_.size())
        a.t_.resize(b.t_.size());
    for (std::size_t m = 0; m < b.t_.size(); ++m)
        a.t_[m] += b.t_[m];
    a.normalize();
    return a;
}

CycConst operator-(const CycConst& a, const CycConst& b)
{
    return a + Rat(-1) * b;
}

CycConst operator*(const CycConst& a0, const CycConst& b0)
{
    const unsigned l = common_level(a0.level_, b0.level_);
    CycConst a = a0.lifted(l), b = b0.lifted(l);
    CycConst c(l);
    if (a.t_.empty() || b.t_.empty())
        return c;
    c.t_.resize(a.t_.size() + b.t_.size() - 1);
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        for (std::size_t j = 0; j < b.t_.size(); ++j)
            c.t_[i + j] += a.t_[i] * b.t_[j];
    c.normalize();
    return c;
}

CycConst operator*(const Rat& s, const CycConst& a)
{
    CycConst c = a;
    for (auto& p : c.t_)
        p *= s;
    c.normalize();
    return c;
}

bool operator==(const CycConst& a0, const CycConst& b0)
{
    const unsigned l = common_level(a0.level_, b0.level_);
    return a0.lifted(l).t_ == b0.lifted(l).t_;
}

} // namespace gop
