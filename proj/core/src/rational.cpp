#include "gop/rational.hpp"

#include <cctype>
#include <vector>

namespace gop {

Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den)
{
    return make_rat(Int(num), Int(den));
}

std::string to_string(const Rat& q)
{
    return q.get_str();
}

std::string to_string(const Int& n)
{
    return n.get_str();
}

Rat parse_rat(std::string_view text)
{
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    std::string s(text.substr(b, e - b));
    if (s.empty())
        throw DomainError("empty rational literal");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
        throw DomainError("malformed rational literal '" + s + "'");
    if (n[0] == '+')
        n.erase(0, 1);
    return make_rat(Int(n), Int(d));
}

bool is_integer(const Rat& q)
{
    return q.get_den() == 1;
}

Int floor_rat(const Rat& q)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::optional<Rat> exact_sqrt(const Rat& q)
{
    if (q < 0)
        return std::nullopt;
    const Int& n = q.get_num();
    const Int& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return make_rat(sn, sd);
}

Rat log2_fixed(const Int& x, unsigned bits)
{
    if (x < 1)
        throw DomainError("log2_fixed requires x >= 1");
    const unsigned long e = mpz_sizeinbase(x.get_mpz_t(), 2) - 1;
    const unsigned long prec = bits + 64;
    // Mantissa x / 2^e in [1, 2) as a fixed-point integer with prec fraction bits.
    Int m = x;
    if (prec >= e)
        m <<= (prec - e);
    else
        m >>= (e - prec);
    const Int two = Int(2) << prec;
    Int frac = 0;
    for (unsigned i = 0; i < bits; ++i) {
        m = (m * m) >> prec;
        frac <<= 1;
        if (m >= two) {
            m >>= 1;
            frac += 1;
        }
    }
    Int scale = Int(1) << bits;
    return make_rat(Int(e) * scale + frac, scale);
}

Rat least_squares_slope(std::span<const Rat> xs, std::span<const Rat> ys)
{
    if (xs.size() != ys.size() || xs.size() < 2)
        throw DomainError("least squares needs at least two points");
    Rat mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<long>(xs.size());
    my /= static_cast<long>(ys.size());
    Rat sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rat dx = xs[i] - mx;
        sxy += dx * (ys[i] - my);
        sxx += dx * dx;
    }
    if (sxx == 0)
        throw DomainError("least squares needs distinct abscissae");
    return Rat(sxy / sxx);
}

} // namespace gop
