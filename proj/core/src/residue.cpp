#include "gop/residue.hpp"

#include <climits>

namespace gop {

ResidueField::ResidueField(Poly modulus) : mod_(modulus.monic())
{
    if (mod_.degree() < 1)
        throw DomainError("residue field needs a non-constant modulus");
}

Poly ResidueField::image(const RatFunc& f) const
{
    Poly d = reduce(f.den());
    if (d.is_zero())
        throw DomainError("image of a function with a pole at the place");
    return mul(reduce(f.num()), inv(d));
}

std::vector<Poly> ResidueField::taylor(const Poly& q, std::size_t n) const
{
    std::vector<Poly> out;
    out.reserve(n);
    Poly cur = q;
    Int fact = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0)
            fact *= static_cast<unsigned long>(k);
        out.push_back(reduce(cur) * Rat(1 / Rat(fact)));
        cur = cur.derivative();
    }
    return out;
}

namespace {

int leading_zeros(const std::vector<Poly>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

} // namespace

ResidueField::Laurent ResidueField::laurent(const RatFunc& f, std::size_t n) const
{
    if (f.is_zero())
        throw DomainError("Laurent expansion of zero");
    // Multiplicities of t in numerator and denominator are bounded by the
    // polynomial degrees, so that many Taylor terms locate the leading ones.
    std::size_t extra_num = static_cast<std::size_t>(f.num().degree()) + 1;
    std::size_t extra_den = static_cast<std::size_t>(f.den().degree()) + 1;
    auto num = taylor(f.num(), n + extra_num + extra_den);
    auto den = taylor(f.den(), n + extra_num + extra_den);
    int vn = leading_zeros(num), vd = leading_zeros(den);
    std::vector<Poly> a(num.begin() + vn, num.end());
    std::vector<Poly> b(den.begin() + vd, den.end());
    Poly b0inv = inv(b[0]);
    std::vector<Poly> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        Poly acc = k < a.size() ? a[k] : Poly();
        for (std::size_t j = 1; j <= k && j < b.size(); ++j)
            acc -= mul(b[j], c[k - j]);
        c[k] = mul(acc, b0inv);
    }
    return {vn - vd, std::move(c)};
}

Poly ResidueField::laurent_coeff(const RatFunc& f, int k) const
{
    if (f.is_zero())
        return Poly();
    int v = order_at(f, Place::finite(mod_));
    if (k < v)
        return Poly();
    auto l = laurent(f, static_cast<std::size_t>(k - v + 1));
    return l.coeffs[static_cast<std::size_t>(k - l.valuation)];
}

std::optional<Rat> as_rational(const Poly& element)
{
    if (!element.is_constant())
        return std::nullopt;
    return element.coeff(0);
}

} // namespace gop
