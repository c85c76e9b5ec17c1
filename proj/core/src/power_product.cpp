#include "gop/power_product.hpp"

#include "gop/factor.hpp"

#include <algorithm>

namespace gop {

void PowerProduct::normalize()
{
    std::vector<std::pair<Poly, Rat>> merged;
    for (auto& [p, s] : factors) {
        Poly m = p.monic();
        auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first == m; });
        if (it == merged.end())
            merged.emplace_back(m, s);
        else
            it->second += s;
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
                 merged.end());
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    factors = std::move(merged);
}

std::string PowerProduct::to_string() const
{
    std::string out;
    if (coefficient != 1 || factors.empty())
        out = gop::to_string(coefficient);
    for (const auto& [p, s] : factors) {
        if (!out.empty())
            out += "*";
        std::string base = p.term_count() == 1 ? p.to_string() : "(" + p.to_string() + ")";
        out += base;
        if (s != 1)
            out += "^" + (is_integer(s) && s > 0 ? gop::to_string(s) : "(" + gop::to_string(s) + ")");
    }
    return out;
}

RatFunc pp_log_derivative(const PowerProduct& p)
{
    RatFunc out;
    for (const auto& [q, s] : p.factors)
        out += RatFunc(q.derivative() * s, q);
    return out;
}

PowerProduct pp_mul(const PowerProduct& p, const PowerProduct& q)
{
    PowerProduct out;
    out.constant_tag = !p.constant_tag.empty() ? p.constant_tag : q.constant_tag;
    out.coefficient = p.coefficient * q.coefficient;
    out.factors = p.factors;
    out.factors.insert(out.factors.end(), q.factors.begin(), q.factors.end());
    out.normalize();
    return out;
}

PowerProduct pp_pow(const PowerProduct& p, const Rat& e)
{
    if (!is_integer(e) && p.coefficient != 1)
        throw DomainError("pp_pow: fractional power of a rational coefficient");
    PowerProduct out;
    out.constant_tag = p.constant_tag;
    if (is_integer(e)) {
        long n = e.get_num().get_si();
        Rat c = 1;
        for (long i = 0; i < std::abs(n); ++i)
            c *= p.coefficient;
        out.coefficient = n >= 0 ? c : 1 / c;
    }
    for (const auto& [q, s] : p.factors)
        out.factors.emplace_back(q, s * e);
    out.normalize();
    return out;
}

PowerProduct pp_inverse(const PowerProduct& p)
{
    return pp_pow(p, Rat(-1));
}

bool pp_is_rational(const PowerProduct& p)
{
    return std::all_of(p.factors.begin(), p.factors.end(), [](const auto& e) { return is_integer(e.second); });
}

RatFunc pp_to_ratfunc(const PowerProduct& p)
{
    if (!pp_is_rational(p))
        throw DomainError("power product with non-integer exponents is not rational");
    RatFunc out(p.coefficient);
    for (const auto& [q, s] : p.factors)
        out *= RatFunc(q).pow(static_cast<int>(s.get_num().get_si()));
    return out;
}

PowerProduct pp_from_ratfunc(const RatFunc& f)
{
    if (f.is_zero())
        throw DomainError("pp_from_ratfunc: zero");
    PowerProduct out;
    auto num = poly_factor(f.num());
    out.coefficient = num.lead;
    for (const auto& [q, k] : num.factors)
        out.factors.emplace_back(q, Rat(k));
    if (f.den().degree() > 0)
        for (const auto& [q, k] : poly_factor(f.den()).factors)
            out.factors.emplace_back(q, Rat(-k));
    out.normalize();
    return out;
}

} // namespace gop
