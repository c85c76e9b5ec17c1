#include "gop/local.hpp"

#include "gop/residue.hpp"

#include <algorithm>

namespace gop {

namespace {

void require_operator(const DiffOp& l)
{
    if (l.is_zero() || l.order() < 1)
        throw DomainError("local analysis needs an operator of order >= 1");
}

/// The finite point where the analysis happens: (monic operator, place
/// polynomial). Infinity becomes w = 0 of the transported operator.
std::pair<DiffOp, Poly> chart(const DiffOp& l, const Place& place)
{
    if (place.is_infinity())
        return {transport_to_infinity(l).monic(), Poly::x()};
    return {l.monic(), place.poly()};
}

std::optional<FuchsViolation> first_violation(const DiffOp& m, const Poly& p, const Place& place)
{
    const int n = m.order();
    const Place local = Place::finite(p);
    for (int i = n - 1; i >= 0; --i) {
        const RatFunc& b = m.coeffs()[static_cast<std::size_t>(i)];
        if (b.is_zero())
            continue;
        const int pole = -order_at(b, local);
        if (pole > n - i)
            return FuchsViolation{place, n - i, pole};
    }
    return std::nullopt;
}

IndicialData indicial_regular(const DiffOp& m, const Poly& p, const Place& place)
{
    const int n = m.order();
    ResidueField k(p);
    // e_i = coefficient of t^-(n-i) in b_i; indicial = sum e_i rho^(falling i).
    std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Poly e = i == n ? Poly(Rat(1))
                        : k.laurent_coeff(m.coeffs()[static_cast<std::size_t>(i)], -(n - i));
        if (e.is_zero())
            continue;
        // rho (rho - 1) ... (rho - i + 1)
        Poly falling(Rat(1));
        for (int s = 0; s < i; ++s)
            falling *= Poly::linear(Rat(s));
        for (std::size_t d = 0; d < falling.coeffs().size(); ++d)
            coeffs[d] += k.reduce(e * falling.coeffs()[d]);
    }
    IndicialData out{place, coeffs, true, Poly(), RationalRoots{}};
    std::vector<Rat> rational;
    for (const auto& c : coeffs) {
        auto r = as_rational(c);
        if (!r) {
            out.rational_coefficients = false;
            break;
        }
        rational.push_back(*r);
    }
    if (out.rational_coefficients) {
        out.indicial = Poly(std::move(rational));
        out.exponents = rational_roots(out.indicial);
    }
    return out;
}

} // namespace

std::vector<Place> singular_places(const DiffOp& l)
{
    require_operator(l);
    DiffOp m = l.monic();
    std::vector<Place> out;
    for (const auto& c : m.coeffs()) {
        if (c.den().degree() < 1)
            continue;
        for (const auto& [q, mult] : poly_factor(c.den()).factors) {
            (void)mult;
            Place pl = Place::finite(q);
            if (std::find(out.begin(), out.end(), pl) == out.end())
                out.push_back(pl);
        }
    }
    std::sort(out.begin(), out.end());
    out.push_back(Place::infinity());
    return out;
}

FuchsReport is_fuchsian(const DiffOp& l)
{
    require_operator(l);
    FuchsReport report;
    for (const auto& place : singular_places(l)) {
        auto [m, p] = chart(l, place);
        if (auto v = first_violation(m, p, place)) {
            report.offending.push_back(*v);
            continue;
        }
        report.places.push_back(indicial_regular(m, p, place));
    }
    report.is_fuchsian = report.offending.empty();
    return report;
}

IndicialData indicial_at(const DiffOp& l, const Place& place)
{
    require_operator(l);
    auto [m, p] = chart(l, place);
    if (auto v = first_violation(m, p, place))
        throw IrregularPlaceError("irregular singular place " + place.to_string(), *v);
    return indicial_regular(m, p, place);
}

bool residue_exponent_identity(const DiffOp& l)
{
    if (l.order() != 2)
        throw DomainError("residue_exponent_identity needs an operator of order 2");
    FuchsReport report = is_fuchsian(l);
    if (!report.is_fuchsian)
        throw DomainError("residue_exponent_identity needs a fuchsian operator");
    const RatFunc p = l.monic().coeffs()[1];
    for (const auto& data : report.places) {
        if (data.place.is_infinity())
            continue;
        ResidueField k(data.place.poly());
        Poly residue = k.laurent_coeff(p, -1);
        Poly exponent_sum;
        if (data.exponents.all_rational) {
            Rat s = 0;
            for (const auto& [r, mult] : data.exponents.roots)
                s += r * mult;
            exponent_sum = Poly(s);
        } else {
            // Vieta on rho^2 + c1 rho + c0 over K.
            exponent_sum = -data.indicial_residue[1];
        }
        if (!(residue == Poly(Rat(1)) - exponent_sum))
            return false;
    }
    return true;
}

bool fuchs_relation_check(const DiffOp& l)
{
    FuchsReport report = is_fuchsian(l);
    if (!report.is_fuchsian)
        throw DomainError("Fuchs relation needs a fuchsian operator");
    const long n = l.order();
    Rat total = 0;
    long m = 0;
    for (const auto& data : report.places) {
        if (!data.exponents.all_rational)
            throw DomainError("Fuchs relation needs rational exponents at " + data.place.to_string());
        Rat s = 0;
        for (const auto& [r, mult] : data.exponents.roots)
            s += r * mult;
        total += s * data.place.degree();
        m += data.place.degree();
    }
    return total == Rat((m - 2) * n * (n - 1) / 2);
}

} // namespace gop
