#include "gop/series.hpp"

#include <algorithm>

namespace gop {

bool TruncSeries::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

TruncSeries TruncSeries::from_coeffs(std::vector<Rat> c, Rat offset)
{
    if (c.empty())
        throw DomainError("series needs a positive truncation");
    return TruncSeries{std::move(offset), std::move(c)};
}

std::vector<Rat> series_quotient(const Poly& num, const Poly& den, std::size_t n)
{
    Rat d0 = den.coeff(0);
    if (d0 == 0)
        throw DomainError("series_quotient: denominator vanishes at 0");
    Rat inv = 1 / d0;
    std::vector<Rat> c(n);
    const int dd = den.degree();
    for (std::size_t k = 0; k < n; ++k) {
        Rat acc = num.coeff(k);
        for (int j = 1; j <= dd && static_cast<std::size_t>(j) <= k; ++j)
            acc -= den.coeffs()[static_cast<std::size_t>(j)] * c[k - static_cast<std::size_t>(j)];
        c[k] = acc * inv;
    }
    return c;
}

TruncSeries laurent_at_zero(const RatFunc& f, std::size_t n)
{
    if (f.is_zero())
        return TruncSeries{0, std::vector<Rat>(n)};
    std::size_t a = f.num().low_order(), b = f.den().low_order();
    auto c = series_quotient(f.num().shifted_down(a), f.den().shifted_down(b), n);
    return TruncSeries{Rat(static_cast<long>(a) - static_cast<long>(b)), std::move(c)};
}

} // namespace gop
