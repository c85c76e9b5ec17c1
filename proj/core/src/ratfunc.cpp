#include "gop/ratfunc.hpp"

#include <climits>

namespace gop {

RatFunc::RatFunc(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = gcd(num, den);
    Poly n = g.is_one() ? num : num / g;
    Poly d = g.is_one() ? den : den / g;
    Rat lc = d.lead();
    num_ = n * (1 / lc);
    den_ = d * (1 / lc);
}

Rat RatFunc::constant_value() const
{
    if (!is_constant())
        throw DomainError("rational function is not constant");
    return num_.coeff(0);
}

RatFunc RatFunc::derivative() const
{
    if (den_.is_one())
        return RatFunc(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFunc::eval(const Rat& at) const
{
    Rat d = den_.eval(at);
    if (d == 0)
        throw DomainError("evaluation at a pole");
    return num_.eval(at) / d;
}

int RatFunc::degree() const
{
    return num_.degree() - den_.degree();
}

int RatFunc::order_at_infinity() const
{
    if (is_zero())
        return INT_MAX;
    return den_.degree() - num_.degree();
}

RatFunc RatFunc::at_reciprocal() const
{
    if (is_zero())
        return *this;
    int dn = num_.degree(), dd = den_.degree();
    int m = std::max(dn, dd);
    return RatFunc(num_.reversed(static_cast<std::size_t>(m)),
                   den_.reversed(static_cast<std::size_t>(m)));
}

RatFunc RatFunc::pow(int n) const
{
    if (n >= 0)
        return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
    if (is_zero())
        throw DomainError("negative power of zero");
    return RatFunc(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
}

std::string RatFunc::to_string(std::string_view var) const
{
    if (den_.is_one())
        return num_.to_string(var);
    std::string d = den_.to_string(var);
    if (num_.is_constant()) {
        // p/q over den prints as p/(q*den).
        const Rat c = num_.coeff(0);
        std::string out = gop::to_string(Int(c.get_num())) + "/";
        if (c.get_den() == 1)
            return out + (den_.term_count() > 1 ? "(" + d + ")" : d);
        if (den_.term_count() > 1)
            d = "(" + d + ")";
        return out + "(" + gop::to_string(Int(c.get_den())) + "*" + d + ")";
    }
    std::string n = num_.to_string(var);
    if (num_.term_count() > 1)
        n = "(" + n + ")";
    if (den_.term_count() > 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly a = den_ / g, b = o.den_ / g;
    *this = RatFunc(num_ * b + o.num_ * a, a * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly n = (num_ / g1) * (o.num_ / g2);
    Poly d = (den_ / g2) * (o.den_ / g1);
    Rat lc = d.lead();
    num_ = n * (1 / lc);
    den_ = d * (1 / lc);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero())
        throw DomainError("division by the zero rational function");
    return *this *= RatFunc(o.den_, o.num_);
}

Place Place::finite(Poly p)
{
    if (p.degree() < 1)
        throw DomainError("a finite place needs a non-constant polynomial");
    Place pl;
    pl.infinite_ = false;
    pl.poly_ = p.monic();
    return pl;
}

Rat Place::root() const
{
    if (infinite_ || poly_.degree() != 1)
        throw DomainError("place is not a rational point");
    return -poly_.coeff(0);
}

std::string Place::to_string() const
{
    return infinite_ ? std::string("infinity") : poly_.to_string();
}

bool operator<(const Place& a, const Place& b)
{
    if (a.infinite_ != b.infinite_)
        return b.infinite_;
    if (a.infinite_)
        return false;
    return canonical_less(a.poly_, b.poly_);
}

int valuation(const Poly& q, const Poly& p)
{
    if (q.is_zero())
        throw DomainError("valuation of zero");
    int v = 0;
    Poly cur = q;
    for (;;) {
        auto [quo, rem] = divmod(cur, p);
        if (!rem.is_zero())
            return v;
        cur = std::move(quo);
        ++v;
    }
}

int order_at(const RatFunc& f, const Place& place)
{
    if (f.is_zero())
        return INT_MAX;
    if (place.is_infinity())
        return f.order_at_infinity();
    return valuation(f.num(), place.poly()) - valuation(f.den(), place.poly());
}

} // namespace gop
