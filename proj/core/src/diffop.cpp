#include "gop/diffop.hpp"

#include <climits>
#include <sstream>

namespace gop {

DiffOp::DiffOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs))
{
    trim();
}

DiffOp::DiffOp(const RatFunc& c)
{
    if (!c.is_zero())
        c_.push_back(c);
}

void DiffOp::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

const RatFunc& DiffOp::leading() const
{
    if (c_.empty())
        throw DomainError("leading coefficient of the zero operator");
    return c_.back();
}

DiffOp DiffOp::monic() const
{
    if (c_.empty())
        return *this;
    RatFunc inv = RatFunc(1) / c_.back();
    return scaled(inv);
}

DiffOp DiffOp::scaled(const RatFunc& f) const
{
    std::vector<RatFunc> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] = f * c_[i];
    return DiffOp(std::move(v));
}

std::string DiffOp::to_string(std::string_view var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const RatFunc& c = c_[i];
        if (c.is_zero())
            continue;
        std::string dpart = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
        std::string cs;
        bool negative = false;
        if (c.num().term_count() == 1) {
            negative = c.num().lead() < 0;
            cs = (negative ? -c : c).to_string(var);
            if (i > 0 && !c.is_polynomial())
                cs = "(" + cs + ")";
        } else {
            cs = c.to_string(var);
            if (i > 0)
                cs = "(" + cs + ")";
        }
        std::string term;
        if (i == 0)
            term = cs;
        else if (cs == "1")
            term = dpart;
        else
            term = cs + "*" + dpart;
        if (first)
            out << (negative ? "-" : "") << term;
        else
            out << (negative ? " - " : " + ") << term;
        first = false;
    }
    return out.str();
}

DiffOp operator+(const DiffOp& a, const DiffOp& b)
{
    std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) + b.coeff(i);
    return DiffOp(std::move(v));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b)
{
    std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) - b.coeff(i);
    return DiffOp(std::move(v));
}

DiffOp op_mul(const DiffOp& m, const DiffOp& n)
{
    if (m.is_zero() || n.is_zero())
        return DiffOp();
    const std::size_t om = static_cast<std::size_t>(m.order());
    const std::size_t on = static_cast<std::size_t>(n.order());
    // derivs[j][k] = k-th derivative of n_j
    std::vector<std::vector<RatFunc>> derivs(on + 1);
    for (std::size_t j = 0; j <= on; ++j) {
        derivs[j].push_back(n.coeffs()[j]);
        for (std::size_t k = 1; k <= om; ++k)
            derivs[j].push_back(derivs[j].back().derivative());
    }
    std::vector<RatFunc> out(om + on + 1);
    for (std::size_t i = 0; i <= om; ++i) {
        const RatFunc& mi = m.coeffs()[i];
        if (mi.is_zero())
            continue;
        for (std::size_t k = 0; k <= i; ++k) {
            Rat binom(binomial(i, k));
            for (std::size_t j = 0; j <= on; ++j) {
                const RatFunc& d = derivs[j][k];
                if (d.is_zero())
                    continue;
                out[i - k + j] += mi * d * RatFunc(binom);
            }
        }
    }
    return DiffOp(std::move(out));
}

RightDivision op_rdiv(const DiffOp& l, const DiffOp& r)
{
    if (r.is_zero())
        throw DomainError("right division by the zero operator");
    DiffOp rem = l;
    std::vector<RatFunc> q(l.order() >= r.order() ? static_cast<std::size_t>(l.order() - r.order() + 1) : 0);
    const RatFunc inv = RatFunc(1) / r.leading();
    while (!rem.is_zero() && rem.order() >= r.order()) {
        const std::size_t shift = static_cast<std::size_t>(rem.order() - r.order());
        RatFunc t = rem.leading() * inv;
        q[shift] += t;
        std::vector<RatFunc> mono(shift + 1);
        mono[shift] = t;
        DiffOp next = rem - op_mul(DiffOp(std::move(mono)), r);
        if (!next.is_zero() && next.order() >= rem.order())
            throw DomainError("right division failed to reduce the order");
        rem = std::move(next);
    }
    return {DiffOp(std::move(q)), rem};
}

DiffOp gcrd(const DiffOp& l, const DiffOp& m)
{
    if (l.is_zero() && m.is_zero())
        throw DomainError("gcrd of two zero operators");
    DiffOp a = l, b = m;
    if (!a.is_zero() && !b.is_zero() && a.order() < b.order())
        std::swap(a, b);
    while (!b.is_zero()) {
        DiffOp r = op_rdiv(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

TruncSeries op_apply(const DiffOp& l, const TruncSeries& f)
{
    const std::size_t t = f.truncation();
    if (t == 0)
        throw DomainError("op_apply: empty truncation");
    if (l.is_zero())
        return TruncSeries{f.offset, std::vector<Rat>(t)};
    // Valuations of the coefficients at 0 fix the output offset.
    int shift = INT_MAX;
    std::vector<TruncSeries> a(l.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const RatFunc& c = l.coeffs()[i];
        if (c.is_zero())
            continue;
        a[i] = laurent_at_zero(c, t);
        shift = std::min(shift, static_cast<int>(a[i].offset.get_num().get_si()) - static_cast<int>(i));
    }
    std::vector<Rat> out(t);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].coeffs.empty())
            continue;
        const long v = a[i].offset.get_num().get_si();
        // D^i f: coefficient of z^(offset + k - i) is c_k * falling(offset + k, i).
        for (std::size_t k = 0; k < t; ++k) {
            if (f.coeffs[k] == 0)
                continue;
            Rat e = f.offset + k;
            Rat dk = f.coeffs[k];
            for (std::size_t s = 0; s < i; ++s)
                dk *= e - s;
            if (dk == 0)
                continue;
            const long base = v - static_cast<long>(i) + static_cast<long>(k) - shift;
            for (std::size_t j = 0; j < t; ++j) {
                const long idx = base + static_cast<long>(j);
                if (idx >= static_cast<long>(t))
                    break;
                out[static_cast<std::size_t>(idx)] += a[i].coeffs[j] * dk;
            }
        }
    }
    return TruncSeries{f.offset + shift, std::move(out)};
}

CompanionSystem companion(const DiffOp& l)
{
    if (l.is_zero() || l.order() < 1)
        throw DomainError("companion system needs an operator of order >= 1");
    const std::size_t n = static_cast<std::size_t>(l.order());
    DiffOp m = l.monic();
    RatMatrix a(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        a(i, i + 1) = RatFunc(1);
    for (std::size_t j = 0; j < n; ++j)
        a(n - 1, j) = -m.coeffs()[j];
    return {a};
}

DiffOp transport_to_infinity(const DiffOp& l)
{
    const DiffOp theta(std::vector<RatFunc>{RatFunc(0), -RatFunc(Poly::monomial(Rat(1), 2))});
    DiffOp power(RatFunc(1));
    DiffOp out;
    for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
        if (i > 0)
            power = op_mul(theta, power);
        const RatFunc& c = l.coeffs()[i];
        if (!c.is_zero())
            out = out + power.scaled(c.at_reciprocal());
    }
    return out;
}

} // namespace gop
