#include "gop/order1.hpp"

#include "gop/linalg.hpp"
#include "gop/partial_fractions.hpp"
#include "gop/residue.hpp"

#include <algorithm>
#include <climits>

namespace gop {

Order1Verdict classify_order1(const RatFunc& a)
{
    Order1Verdict v;
    auto fail = [&](std::string why) {
        v.is_g_operator = false;
        v.reason = std::move(why);
        v.failure = is_fuchsian(DiffOp::first_order(a));
        return v;
    };
    PartialFractions pf = partial_fractions(a);
    if (!pf.polynomial.is_zero())
        return fail("irregular at infinity");
    PowerProduct sol;
    sol.constant_tag = kDeltaTag;
    for (const auto& t : pf.terms) {
        if (t.order > 1)
            return fail("pole of order " + std::to_string(t.order) + " at " + t.place.to_string());
        // Residue at every root of p is c/p'; rational iff c = s p'.
        Poly dp = t.place.poly().derivative();
        Rat s = t.numerator.lead() / dp.lead();
        if (t.numerator.degree() != dp.degree() || !(t.numerator == dp * s))
            return fail("irrational exponent at " + t.place.to_string());
        sol.factors.emplace_back(t.place.poly(), s);
    }
    sol.normalize();
    if (!(pp_log_derivative(sol) == a))
        throw DomainError("internal: order-1 solution fails its certificate");
    v.is_g_operator = true;
    v.solution = std::move(sol);
    return v;
}

namespace {

/// Pole order of f at the place (0 when regular).
int pole_order(const RatFunc& f, const Place& p)
{
    if (f.is_zero())
        return 0;
    return std::max(0, -order_at(f, p));
}

} // namespace

std::optional<RatFunc> rational_solution(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero())
        return RatFunc();
    // Denominator candidate.
    Poly den(Rat(1));
    Poly both = a.den() * b.den();
    if (both.degree() > 0) {
        for (const auto& [p, mult] : poly_factor(both).factors) {
            (void)mult;
            const Place place = Place::finite(p);
            const int k = pole_order(a, place);
            const int beta = pole_order(b, place);
            int m = 0;
            if (k >= 2) {
                m = std::max(0, beta - k);
            } else if (k == 1) {
                m = std::max(0, beta - 1);
                ResidueField field(p);
                if (auto s = as_rational(field.laurent_coeff(a, -1)))
                    if (is_integer(*s) && *s < 0)
                        m = std::max(m, static_cast<int>(Int(-*s).get_si()));
            } else {
                m = std::max(0, beta - 1);
            }
            den *= p.pow(static_cast<unsigned>(m));
        }
    }
    // Degree bound for R at infinity.
    const int deg_b = b.degree();
    const int nu = a.is_zero() ? INT_MAX : a.order_at_infinity();
    long e;
    if (nu >= 2) {
        e = std::max(0, deg_b + 1);
    } else if (nu == 1) {
        e = deg_b + 1;
        Rat c = a.num().lead() / a.den().lead();
        if (is_integer(c))
            e = std::max(e, c.get_num().get_si());
    } else {
        e = deg_b + nu;
    }
    const long ndeg = e + den.degree();
    if (ndeg < 0)
        return std::nullopt;
    // (N' den - N den') ad bd - an N den bd - bn den^2 ad = 0, linear in N.
    const Poly& an = a.num();
    const Poly& ad = a.den();
    const Poly& bn = b.num();
    const Poly& bd = b.den();
    const Poly dden = den.derivative();
    const std::size_t unknowns = static_cast<std::size_t>(ndeg) + 1;
    std::vector<Poly> columns;
    for (std::size_t j = 0; j < unknowns; ++j) {
        Poly zj = Poly::monomial(Rat(1), j);
        columns.push_back((zj.derivative() * den - zj * dden) * ad * bd - an * zj * den * bd);
    }
    Poly rhs = bn * den * den * ad;
    std::size_t rows = static_cast<std::size_t>(std::max(0, rhs.degree())) + 1;
    for (const auto& c : columns)
        rows = std::max(rows, static_cast<std::size_t>(std::max(0, c.degree())) + 1);
    RatRows m(rows, RatVector(unknowns, Rat(0)));
    RatVector rv(rows, Rat(0));
    for (std::size_t j = 0; j < unknowns; ++j)
        for (std::size_t r = 0; r < columns[j].coeffs().size(); ++r)
            m[r][j] = columns[j].coeffs()[r];
    for (std::size_t r = 0; r < rhs.coeffs().size(); ++r)
        rv[r] = rhs.coeffs()[r];
    auto x = solve(m, rv, unknowns);
    if (!x)
        return std::nullopt;
    RatFunc r(Poly(*x), den);
    if (!(r.derivative() == a * r + b))
        throw DomainError("internal: rational solution fails its check");
    return r;
}

InhomResult solve_inhomogeneous(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero())
        throw DomainError("inhomogeneous term b must be non-zero");
    Order1Verdict v = classify_order1(a);
    if (!v.is_g_operator)
        throw NotGOperatorError("D - a is not an order-1 G-operator: " + v.reason, *v.failure);
    InhomResult out;
    out.L2 = op_mul(DiffOp::first_order(b.derivative() / b), DiffOp::first_order(a));
    out.g = *v.solution;
    PowerProduct bp = pp_from_ratfunc(b);
    out.integrand = pp_mul(bp, pp_inverse(out.g));
    out.witness = rational_solution(a, b);
    out.rationality_flag = out.witness.has_value();
    return out;
}

} // namespace gop
