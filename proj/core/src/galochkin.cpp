#include "gop/galochkin.hpp"

#include "gop/pochhammer.hpp"

#include <algorithm>

namespace gop {

std::vector<RatMatrix> iterate_A(const CompanionSystem& a1, unsigned n)
{
    if (n < 1)
        throw DomainError("iterate_A needs N >= 1");
    std::vector<RatMatrix> out{a1.A};
    out.reserve(n);
    while (out.size() < n)
        out.push_back(out.back() * a1.A + out.back().derivative());
    return out;
}

GalochkinReport denominator_sequence(const CompanionSystem& a1, unsigned k_max)
{
    if (k_max < 1)
        throw DomainError("denominator_sequence needs k_max >= 1");
    GalochkinReport rep;
    rep.k_max = k_max;
    Poly t(Rat(1));
    for (const auto& e : a1.A.entries())
        t = lcm(t, e.den());
    rep.T = t;

    // B_n = T^n A_n is polynomial: B_{n+1} = B_n B_1 + T B_n' - n T' B_n.
    const std::size_t m = a1.A.size();
    auto idx = [m](std::size_t i, std::size_t j) { return i * m + j; };
    std::vector<Poly> b1(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const RatFunc& e = a1.A(i, j);
            if (!e.is_zero())
                b1[idx(i, j)] = exact_div(t * e.num(), e.den());
        }
    const Poly dt = t.derivative();
    std::vector<Poly> b = b1;
    Int nfact = 1;
    Int d = 1;
    for (unsigned n = 1; n <= k_max; ++n) {
        if (n > 1) {
            const unsigned k = n - 1;
            std::vector<Poly> next(m * m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    Poly acc = t * b[idx(i, j)].derivative() - (Rat(k) * dt) * b[idx(i, j)];
                    for (std::size_t l = 0; l < m; ++l)
                        if (!b[idx(i, l)].is_zero() && !b1[idx(l, j)].is_zero())
                            acc += b[idx(i, l)] * b1[idx(l, j)];
                    next[idx(i, j)] = std::move(acc);
                }
            b = std::move(next);
            nfact *= n;
        }
        for (const auto& e : b)
            for (const auto& c : e.coeffs()) {
                Rat v = c / Rat(nfact);
                v.canonicalize();
                d = lcm(d, v.get_den());
            }
        rep.D.push_back(d);
    }

    const std::size_t start = k_max / 2;
    std::vector<Rat> xs, ys;
    for (std::size_t i = start; i < rep.D.size(); ++i) {
        xs.emplace_back(static_cast<long>(i + 1));
        ys.push_back(log2_fixed(rep.D[i]));
    }
    rep.slope_tail = xs.size() >= 2 ? least_squares_slope(xs, ys) : Rat(0);
    return rep;
}

RatFunc closed_form_A(const std::vector<std::pair<Rat, Rat>>& lambda_s, unsigned n)
{
    for (std::size_t i = 0; i < lambda_s.size(); ++i)
        for (std::size_t j = i + 1; j < lambda_s.size(); ++j)
            if (lambda_s[i].first == lambda_s[j].first)
                throw DomainError("closed_form_A: repeated lambda");
    if (n == 0)
        return RatFunc(1);
    if (lambda_s.empty())
        return RatFunc(0);
    // Multinomial sum as a convolution over j of the series
    // sum_m (-s_j)_m / m! (lambda_j - z)^{-m}.
    std::vector<RatFunc> acc(n + 1);
    acc[0] = RatFunc(1);
    for (const auto& [lambda, s] : lambda_s) {
        const RatFunc inv = RatFunc(1) / (RatFunc(lambda) - RatFunc::z());
        std::vector<RatFunc> terms(n + 1);
        RatFunc power(1);
        for (unsigned m = 0; m <= n; ++m) {
            terms[m] = RatFunc(pochhammer(-s, m) / Rat(factorial(m))) * power;
            power *= inv;
        }
        std::vector<RatFunc> next(n + 1);
        for (unsigned a = 0; a <= n; ++a) {
            if (acc[a].is_zero())
                continue;
            for (unsigned b = 0; a + b <= n; ++b)
                if (!terms[b].is_zero())
                    next[a + b] += acc[a] * terms[b];
        }
        acc = std::move(next);
    }
    return RatFunc(Rat(factorial(n))) * acc[n];
}

} // namespace gop
