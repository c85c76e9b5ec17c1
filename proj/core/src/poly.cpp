#include "gop/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gop {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

Poly::Poly(const Rat& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

Poly Poly::x()
{
    return monomial(Rat(1), 1);
}

Poly Poly::monomial(const Rat& c, std::size_t k)
{
    if (c == 0)
        return Poly();
    std::vector<Rat> v(k + 1);
    v[k] = c;
    Poly p;
    p.coeffs_ = std::move(v);
    return p;
}

Poly Poly::linear(const Rat& root)
{
    return Poly(std::vector<Rat>{Rat(-root), Rat(1)});
}

Poly Poly::from_ints(std::initializer_list<long> coeffs)
{
    std::vector<Rat> v;
    for (long c : coeffs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

Rat Poly::lead() const
{
    return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1)
        return Poly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& at) const
{
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const
{
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    Rat inv = 1 / lead();
    return *this * inv;
}

Poly Poly::pow(unsigned n) const
{
    Poly result(Rat(1));
    Poly base = *this;
    while (n) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

Poly Poly::reversed(std::size_t n) const
{
    if (degree() > static_cast<int>(n))
        throw DomainError("reversed: degree exceeds n");
    std::vector<Rat> v(n + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[n - i] = coeffs_[i];
    return Poly(std::move(v));
}

std::size_t Poly::low_order() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return i;
    return 0;
}

Poly Poly::shifted_down(std::size_t k) const
{
    if (k >= coeffs_.size())
        return Poly();
    return Poly(std::vector<Rat>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Poly Poly::shifted_up(std::size_t k) const
{
    if (is_zero())
        return Poly();
    std::vector<Rat> v(k, Rat(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

Int Poly::denominator_lcm() const
{
    Int l = 1;
    for (const auto& c : coeffs_)
        l = lcm(l, c.get_den());
    return l;
}

Poly Poly::primitive() const
{
    if (is_zero())
        return Poly();
    Int l = denominator_lcm();
    Int g = 0;
    for (const auto& c : coeffs_)
        g = gcd(g, Int(c * l));
    Rat scale = make_rat(l, g);
    if (lead() < 0)
        scale = -scale;
    return *this * scale;
}

std::size_t Poly::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c != 0; }));
}

std::string Poly::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rat& c = coeffs_[k];
        if (c == 0)
            continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << gop::to_string(mag);
            continue;
        }
        if (mag != 1)
            out << gop::to_string(mag) << "*";
        out << var;
        if (k > 1)
            out << "^" << k;
    }
    return out.str();
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Poly p;
    p.coeffs_ = std::move(v);
    p.trim();
    return p;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Poly operator-(const Poly& a)
{
    return a * Rat(-1);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    Rat inv = 1 / b.lead();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0)
            continue;
        Rat q = rem[k] * inv;
        quo[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b)
{
    return divmod(a, b).first;
}

Poly operator%(const Poly& a, const Poly& b)
{
    return divmod(a, b).second;
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DomainError("exact_div: non-zero remainder");
    return q;
}

namespace {

using IntPoly = std::vector<Int>;

/// Integer multiple of p with coprime coefficients (zero stays empty).
IntPoly primitive_int(const Poly& p)
{
    const Int den = p.denominator_lcm();
    IntPoly out;
    out.reserve(p.coeffs().size());
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        out.push_back(Int(c * Rat(den)));
        content = gcd(content, out.back());
    }
    if (content > 1)
        for (auto& c : out)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

void make_primitive(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    Int content = 0;
    for (const auto& c : p) {
        content = gcd(content, c);
        if (content == 1)
            return;
    }
    if (content > 1)
        for (auto& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

/// lc(b)^(da - db + 1) a mod b over Z.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b)
{
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (a.size() > db) {
        const Int la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a)
            c *= lb;
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] -= la * b[j];
        a.pop_back();
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(Rat(1));
    // Primitive remainder sequence over Z.
    IntPoly x = primitive_int(a), y = primitive_int(b);
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1)
            return Poly(Rat(1));
        IntPoly r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> c(x.begin(), x.end());
    return Poly(std::move(c)).monic();
}

Poly lcm(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    return (a * b / gcd(a, b)).monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b)
{
    Poly r0 = a, r1 = b;
    Poly s0(Rat(1)), s1;
    Poly t0, t1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {Poly(), Poly(), Poly()};
    Rat inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& a, const Poly& m)
{
    auto e = ext_gcd(a % m, m);
    if (!e.g.is_one())
        throw DomainError("inverse_mod: not invertible");
    return e.s % m;
}

bool canonical_less(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Rat x = -a.coeffs()[i], y = -b.coeffs()[i];
        if (x != y)
            return x < y;
    }
    return false;
}

} // namespace gop
