#include "gop/guess.hpp"

#include "gop/linalg.hpp"

#include <algorithm>

namespace gop {

namespace {

/// Rows of the annihilation system for the shape (r, d): unknown (i, k) sits
/// in column i (d + 1) + k; row m + r is the coefficient of z^(offset + m).
RatRows annihilation_system(const TruncSeries& s, unsigned r, unsigned d)
{
    const long t = static_cast<long>(s.truncation());
    const std::size_t cols = (r + 1) * (d + 1);
    RatRows rows;
    for (long m = -static_cast<long>(r); m < t - static_cast<long>(r); ++m) {
        RatVector row(cols, Rat(0));
        for (unsigned i = 0; i <= r; ++i)
            for (unsigned k = 0; k <= d; ++k) {
                const long n = m + i - k;
                if (n < 0 || n >= t)
                    continue;
                Rat v = s.coeffs[static_cast<std::size_t>(n)];
                if (v == 0)
                    continue;
                const Rat e = s.offset + n;
                for (unsigned q = 0; q < i; ++q)
                    v *= e - q;
                row[i * (d + 1) + k] = v;
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

DiffOp normalized_operator(const RatVector& v, unsigned r, unsigned d)
{
    Int den = 1;
    for (const auto& x : v)
        den = lcm(den, x.get_den());
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, Int(x * den));
    Rat scale = make_rat(den, g);
    // Sign: first non-zero entry of the leading D-coefficient, lowest degree.
    for (unsigned i = r + 1; i-- > 0;) {
        bool done = false;
        for (unsigned k = 0; k <= d; ++k) {
            const Rat& x = v[i * (d + 1) + k];
            if (x != 0) {
                if (x < 0)
                    scale = -scale;
                done = true;
                break;
            }
        }
        if (done)
            break;
    }
    std::vector<RatFunc> coeffs;
    for (unsigned i = 0; i <= r; ++i) {
        std::vector<Rat> c(d + 1);
        for (unsigned k = 0; k <= d; ++k)
            c[k] = v[i * (d + 1) + k] * scale;
        coeffs.emplace_back(Poly(std::move(c)));
    }
    return DiffOp(std::move(coeffs));
}

} // namespace

GuessResult guess_ode(const TruncSeries& s, unsigned max_order, unsigned max_degree, unsigned margin)
{
    const std::size_t need = static_cast<std::size_t>(max_order + 1) * (max_degree + 1) + margin;
    if (s.truncation() < need)
        throw DomainError("guess_ode: truncation " + std::to_string(s.truncation()) + " below " +
                          std::to_string(need));
    GuessResult res;
    for (unsigned r = 1; r <= max_order; ++r)
        for (unsigned d = 0; d <= max_degree; ++d) {
            RatRows rows = annihilation_system(s, r, d);
            const std::size_t cols = (r + 1) * (d + 1);
            const std::size_t eqs = rows.size();
            Echelon e = rref(rows, cols);
            res.overdetermination = eqs - e.rank();
            res.order = r;
            res.degree = d;
            if (e.rank() == cols || eqs - e.rank() < margin)
                continue;
            auto basis = nullspace(rows, cols);
            res.found = true;
            res.op = normalized_operator(basis.front(), r, d);
            return res;
        }
    return res;
}

GrowthReport g_growth_diagnostic(const TruncSeries& s)
{
    GrowthReport rep;
    Int d = 1;
    Rat best = 0;
    Int height = 1;
    std::vector<Rat> xs, ld, lh;
    for (std::size_t n = 0; n < s.truncation(); ++n) {
        const Rat& a = s.coeffs[n];
        d = lcm(d, a.get_den());
        best = std::max(best, Rat(abs(a)));
        rep.d.push_back(d);
        rep.max_abs.push_back(best);
        xs.emplace_back(static_cast<long>(n));
        ld.push_back(log2_fixed(d));
        height = std::max({height, Int(abs(a.get_num())), Int(a.get_den())});
        lh.push_back(log2_fixed(height));
    }
    const std::size_t n = xs.size();
    if (n >= 2) {
        rep.denominator_slope = least_squares_slope(xs, ld);
        rep.height_slope = least_squares_slope(xs, lh);
    }
    if (n >= 4) {
        const std::size_t h = n / 2;
        std::span<const Rat> x(xs), y(ld);
        rep.first_half_slope = least_squares_slope(x.subspan(0, h), y.subspan(0, h));
        rep.second_half_slope = least_squares_slope(x.subspan(h), y.subspan(h));
        rep.superlinear = rep.second_half_slope > 0 && 5 * rep.second_half_slope >= 6 * rep.first_half_slope;
    }
    return rep;
}

} // namespace gop
