#include "gop/partial_fractions.hpp"

#include "gop/factor.hpp"

#include <algorithm>

namespace gop {

RatFunc PartialFractions::recombine() const
{
    RatFunc out(polynomial);
    for (const auto& t : terms)
        out += RatFunc(t.numerator, t.place.poly().pow(static_cast<unsigned>(t.order)));
    return out;
}

PartialFractions partial_fractions(const RatFunc& f)
{
    PartialFractions out;
    auto [q, r] = divmod(f.num(), f.den());
    out.polynomial = q;
    if (r.is_zero())
        return out;
    const Poly& d = f.den();
    for (const auto& [p, e] : poly_factor(d).factors) {
        Poly pe = p.pow(static_cast<unsigned>(e));
        Poly cofactor = d / pe;
        Poly a = (r * inverse_mod(cofactor, pe)) % pe;
        // p-adic digits: a = sum c_k p^k, so a/p^e = sum c_k / p^(e-k).
        for (int k = 0; k < e && !a.is_zero(); ++k) {
            auto [quo, digit] = divmod(a, p);
            if (!digit.is_zero())
                out.terms.push_back({Place::finite(p), e - k, digit});
            a = quo;
        }
    }
    std::stable_sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) {
        if (!(x.place == y.place))
            return x.place < y.place;
        return x.order < y.order;
    });
    return out;
}

} // namespace gop
