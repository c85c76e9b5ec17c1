#include "gop/kovacic.hpp"

#include "gop/linalg.hpp"
#include "gop/residue.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace gop {

bool CaseConditions::has(int c) const
{
    return std::find(feasible.begin(), feasible.end(), c) != feasible.end();
}

std::string to_string(OutcomeKind k)
{
    switch (k) {
    case OutcomeKind::PrimitiveForm: return "PrimitiveForm";
    case OutcomeKind::AlgebraicBasis: return "AlgebraicBasis";
    case OutcomeKind::Case3Candidate: return "Case3Candidate";
    case OutcomeKind::IrreducibleFullGroup: return "IrreducibleFullGroup";
    case OutcomeKind::ReducibleNonG: return "ReducibleNonG";
    case OutcomeKind::LiouvillianNonG: return "LiouvillianNonG";
    }
    return "?";
}

namespace {

const Rat kHalf = make_rat(1, 2);

RatFunc shifted(const RatFunc& f, const Rat& c)
{
    Poly s = Poly::linear(-c); // z + c
    return RatFunc(f.num().compose(s), f.den().compose(s));
}

/// Coefficients of (z - c)^k in f for k = from, from + 1, ..., from + n - 1.
std::vector<Rat> laurent_window(const RatFunc& f, const Rat& c, int from, std::size_t n)
{
    TruncSeries s = laurent_at_zero(shifted(f, c), n + 64);
    const int v = static_cast<int>(s.offset.get_num().get_si());
    std::vector<Rat> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = from + static_cast<int>(i);
        if (k >= v)
            out[i] = s.coeffs.at(static_cast<std::size_t>(k - v));
    }
    return out;
}

/// Leading coefficient of f at infinity relative to z^(-order).
Rat lead_at_infinity(const RatFunc& f)
{
    return f.num().lead() / f.den().lead();
}

RatFunc log_derivative(const Poly& p)
{
    return RatFunc(p.derivative(), p);
}

/// Monic polynomial P of degree d with L(P) = 0, if any.
std::optional<Poly> monic_polynomial_solution(const std::vector<RatFunc>& coeffs, int d)
{
    if (d < 0)
        return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<RatFunc> cols(n);
    Poly common(Rat(1));
    for (std::size_t j = 0; j < n; ++j) {
        Poly mono = Poly::monomial(Rat(1), j);
        RatFunc acc;
        for (const auto& c : coeffs) {
            if (!c.is_zero() && !mono.is_zero())
                acc += c * RatFunc(mono);
            mono = mono.derivative();
        }
        cols[j] = acc;
        common = lcm(common, acc.den());
    }
    std::vector<Poly> polys(n);
    std::size_t rows = 1;
    for (std::size_t j = 0; j < n; ++j) {
        polys[j] = cols[j].num() * (common / cols[j].den());
        rows = std::max(rows, static_cast<std::size_t>(std::max(0, polys[j].degree())) + 1);
    }
    RatRows m(rows, RatVector(n - 1, Rat(0)));
    RatVector rhs(rows, Rat(0));
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t r = 0; r < polys[j].coeffs().size(); ++r)
            m[r][j] = polys[j].coeffs()[r];
    for (std::size_t r = 0; r < polys[n - 1].coeffs().size(); ++r)
        rhs[r] = -polys[n - 1].coeffs()[r];
    auto x = solve(m, rhs, n - 1);
    if (!x)
        return std::nullopt;
    x->push_back(Rat(1));
    return Poly(*x);
}

std::vector<PoleInfo> finite_poles(const RatFunc& r)
{
    std::vector<PoleInfo> out;
    if (r.den().degree() < 1)
        return out;
    for (const auto& [p, k] : poly_factor(r.den()).factors)
        out.push_back({Place::finite(p), k});
    return out;
}

/// Coefficient of t^-2 at an order-2 pole, when rational.
std::optional<Rat> second_order_coefficient(const RatFunc& r, const Place& place)
{
    ResidueField k(place.poly());
    return as_rational(k.laurent_coeff(r, -2));
}

struct Choice {
    Rat alpha;
    RatFunc part;
};

bool choice_order(const Choice& a, const Choice& b)
{
    const bool na = a.alpha < 0, nb = b.alpha < 0;
    if (na != nb)
        return nb;
    return a.alpha < b.alpha;
}

/// Case 1 data at a finite pole; empty when the pole admits no rational data.
std::vector<Choice> case1_choices(const RatFunc& r, const PoleInfo& pole)
{
    const Poly& p = pole.place.poly();
    std::vector<Choice> out;
    if (pole.order == 1) {
        out.push_back({Rat(1), log_derivative(p)});
    } else if (pole.order == 2) {
        auto b = second_order_coefficient(r, pole.place);
        if (!b)
            return {};
        auto s = exact_sqrt(1 + 4 * *b);
        if (!s)
            return {};
        out.push_back({kHalf + kHalf * *s, log_derivative(p) * RatFunc(kHalf + kHalf * *s)});
        if (*s != 0)
            out.push_back({kHalf - kHalf * *s, log_derivative(p) * RatFunc(kHalf - kHalf * *s)});
    } else if (pole.order % 2 == 0 && p.degree() == 1) {
        const Rat c = pole.place.root();
        const int nu = pole.order / 2;
        auto w = laurent_window(r, c, -2 * nu, static_cast<std::size_t>(nu));
        auto s0 = exact_sqrt(w[0]);
        if (!s0)
            return {};
        std::vector<Rat> sigma{*s0};
        for (int k = 1; k <= nu - 2; ++k) {
            Rat acc = w[static_cast<std::size_t>(k)];
            for (int j = 1; j < k; ++j)
                acc -= sigma[static_cast<std::size_t>(j)] * sigma[static_cast<std::size_t>(k - j)];
            sigma.push_back(acc / (2 * *s0));
        }
        Rat b = w[static_cast<std::size_t>(nu - 1)];
        for (int i = 0; i <= nu - 2; ++i) {
            const int j = nu - 1 - i;
            if (j >= 0 && j <= nu - 2)
                b -= sigma[static_cast<std::size_t>(i)] * sigma[static_cast<std::size_t>(j)];
        }
        RatFunc sq;
        const RatFunc t = RatFunc(Poly::linear(c));
        for (int j = 0; j <= nu - 2; ++j)
            sq += RatFunc(sigma[static_cast<std::size_t>(j)]) / t.pow(nu - j);
        for (int eps : {1, -1}) {
            Rat alpha = kHalf * (eps * b / *s0 + nu);
            out.push_back({alpha, RatFunc(eps) * sq + RatFunc(alpha) / t});
        }
    } else {
        return {};
    }
    std::stable_sort(out.begin(), out.end(), choice_order);
    return out;
}

std::vector<Choice> case1_infinity_choices(const RatFunc& r)
{
    const int m = r.order_at_infinity();
    if (m > 2)
        return {{Rat(0), RatFunc()}, {Rat(1), RatFunc()}};
    if (m == 2) {
        auto s = exact_sqrt(1 + 4 * lead_at_infinity(r));
        if (!s)
            return {};
        std::vector<Choice> out{{kHalf + kHalf * *s, RatFunc()}};
        if (*s != 0)
            out.push_back({kHalf - kHalf * *s, RatFunc()});
        return out;
    }
    if (m % 2 != 0)
        return {};
    const int nu = -m / 2;
    TruncSeries w = laurent_at_zero(r.at_reciprocal(), static_cast<std::size_t>(nu) + 2);
    // w.coeffs[i] is the coefficient of z^(2 nu - i).
    auto s0 = exact_sqrt(w.coeffs[0]);
    if (!s0)
        return {};
    std::vector<Rat> sigma{*s0};
    for (int k = 1; k <= nu; ++k) {
        Rat acc = w.coeffs[static_cast<std::size_t>(k)];
        for (int j = 1; j < k; ++j)
            acc -= sigma[static_cast<std::size_t>(j)] * sigma[static_cast<std::size_t>(k - j)];
        sigma.push_back(acc / (2 * *s0));
    }
    Rat b = w.coeffs[static_cast<std::size_t>(nu) + 1];
    for (int i = 0; i <= nu; ++i) {
        const int j = nu + 1 - i;
        if (j >= 0 && j <= nu)
            b -= sigma[static_cast<std::size_t>(i)] * sigma[static_cast<std::size_t>(j)];
    }
    RatFunc sq;
    for (int k = 0; k <= nu; ++k)
        sq += RatFunc(Poly::monomial(sigma[static_cast<std::size_t>(k)], static_cast<std::size_t>(nu - k)));
    std::vector<Choice> out;
    for (int eps : {1, -1})
        out.push_back({kHalf * (eps * b / *s0 - nu), RatFunc(eps) * sq});
    return out;
}

/// Odometer over the Cartesian product of index ranges.
bool next_index(std::vector<std::size_t>& idx, const std::vector<std::size_t>& sizes)
{
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < sizes[i])
            return true;
        idx[i] = 0;
    }
    return false;
}

std::vector<long> integer_set(std::initializer_list<Rat> values)
{
    std::set<long> s;
    for (const auto& v : values)
        if (is_integer(v))
            s.insert(v.get_num().get_si());
    return {s.begin(), s.end()};
}

/// Case 2 exponent set at an order-2 coefficient b.
std::vector<long> order2_set(const std::optional<Rat>& b)
{
    if (!b)
        return {2};
    auto s = exact_sqrt(1 + 4 * *b);
    if (!s)
        return {2};
    return integer_set({Rat(2), 2 + 2 * *s, 2 - 2 * *s});
}

} // namespace

NormalForm normal_form(const DiffOp& l)
{
    if (l.order() != 2)
        throw DomainError("normal_form needs an operator of order 2");
    DiffOp m = l.monic();
    const RatFunc p = m.coeff(1), q = m.coeff(0);
    NormalForm nf;
    nf.p = p;
    nf.half_p = p * RatFunc(kHalf);
    nf.r = p * p * RatFunc(make_rat(1, 4)) + p.derivative() * RatFunc(kHalf) - q;
    Order1Verdict v = classify_order1(-nf.half_p);
    if (v.is_g_operator) {
        nf.gauge = *v.solution;
        nf.gauge->constant_tag.clear();
    }
    return nf;
}

CaseConditions case_conditions(const RatFunc& r)
{
    CaseConditions c;
    c.poles = finite_poles(r);
    c.order_at_infinity = r.order_at_infinity();
    if (r.is_zero()) {
        c.feasible = {1};
        return c;
    }
    const int m = c.order_at_infinity;
    bool one = m % 2 == 0 || m > 2;
    bool two = false;
    bool three = m >= 2;
    for (const auto& pole : c.poles) {
        if (pole.order != 1 && pole.order % 2 != 0)
            one = false;
        if (pole.order == 2 || (pole.order > 2 && pole.order % 2 != 0))
            two = true;
        if (pole.order > 2)
            three = false;
    }
    if (one)
        c.feasible.push_back(1);
    if (two)
        c.feasible.push_back(2);
    if (three)
        c.feasible.push_back(3);
    return c;
}

bool case1_certificate(const RatFunc& r, const Case1Result& c)
{
    const RatFunc P(c.P);
    const RatFunc& w = c.omega;
    RatFunc e = RatFunc(c.P.derivative().derivative()) + RatFunc(2) * w * RatFunc(c.P.derivative()) +
                (w.derivative() + w * w - r) * P;
    return e.is_zero();
}

std::optional<Case1Result> case1_search(const RatFunc& r)
{
    const auto poles = finite_poles(r);
    std::vector<std::vector<Choice>> finite;
    for (const auto& pole : poles) {
        auto ch = case1_choices(r, pole);
        if (ch.empty())
            return std::nullopt;
        finite.push_back(std::move(ch));
    }
    const auto inf = case1_infinity_choices(r);
    if (inf.empty())
        return std::nullopt;
    std::vector<std::size_t> sizes, idx(finite.size(), 0);
    for (const auto& f : finite)
        sizes.push_back(f.size());
    do {
        Rat sum = 0;
        RatFunc omega;
        for (std::size_t i = 0; i < finite.size(); ++i) {
            const Choice& ch = finite[i][idx[i]];
            sum += ch.alpha * poles[i].place.degree();
            omega += ch.part;
        }
        std::vector<std::pair<long, std::size_t>> order;
        for (std::size_t j = 0; j < inf.size(); ++j) {
            Rat d = inf[j].alpha - sum;
            if (is_integer(d) && d >= 0)
                order.emplace_back(d.get_num().get_si(), j);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [d, j] : order) {
            RatFunc w = omega + inf[j].part;
            std::vector<RatFunc> op{w.derivative() + w * w - r, RatFunc(2) * w, RatFunc(1)};
            if (auto P = monic_polynomial_solution(op, static_cast<int>(d))) {
                Case1Result res{w, *P};
                if (!case1_certificate(r, res))
                    throw DomainError("internal: Case 1 certificate failed");
                return res;
            }
        }
    } while (!finite.empty() && next_index(idx, sizes));
    return std::nullopt;
}

bool case2_certificate(const RatFunc& r, const Case2Result& c)
{
    const RatFunc& phi = c.phi;
    const RatFunc& psi = c.psi;
    if (!(psi == phi.derivative() * RatFunc(kHalf) + phi * phi * RatFunc(kHalf) - r))
        return false;
    if ((phi * phi - RatFunc(4) * psi).is_zero())
        return false;
    return (psi.derivative() + phi * psi - r * phi).is_zero();
}

std::optional<Case2Result> case2_search(const RatFunc& r)
{
    const auto poles = finite_poles(r);
    std::vector<std::vector<long>> sets;
    for (const auto& pole : poles) {
        if (pole.order == 1)
            sets.push_back({4});
        else if (pole.order == 2)
            sets.push_back(order2_set(second_order_coefficient(r, pole.place)));
        else
            sets.push_back({pole.order});
    }
    const int m = r.order_at_infinity();
    std::vector<long> inf;
    if (m > 2)
        inf = {0, 2, 4};
    else if (m == 2)
        inf = order2_set(lead_at_infinity(r));
    else
        inf = {m};
    sets.push_back(inf);

    std::vector<std::size_t> sizes, idx(sets.size(), 0);
    for (const auto& s : sets)
        sizes.push_back(s.size());
    do {
        bool all_even = true;
        long weighted = 0;
        RatFunc theta;
        for (std::size_t i = 0; i < poles.size(); ++i) {
            const long e = sets[i][idx[i]];
            all_even = all_even && e % 2 == 0;
            weighted += e * poles[i].place.degree();
            theta += log_derivative(poles[i].place.poly()) * RatFunc(make_rat(e, 2));
        }
        const long einf = sets.back()[idx.back()];
        all_even = all_even && einf % 2 == 0;
        if (all_even)
            continue;
        const long twice_d = einf - weighted;
        if (twice_d < 0 || twice_d % 2 != 0)
            continue;
        const RatFunc t1 = theta.derivative();
        std::vector<RatFunc> op{
            t1.derivative() + RatFunc(3) * theta * t1 + theta * theta * theta - RatFunc(4) * r * theta -
                RatFunc(2) * r.derivative(),
            RatFunc(3) * theta * theta + RatFunc(3) * t1 - RatFunc(4) * r,
            RatFunc(3) * theta,
            RatFunc(1),
        };
        if (auto P = monic_polynomial_solution(op, static_cast<int>(twice_d / 2))) {
            RatFunc phi = theta + RatFunc(P->derivative(), *P);
            RatFunc psi = phi.derivative() * RatFunc(kHalf) + phi * phi * RatFunc(kHalf) - r;
            Case2Result res{theta, *P, phi, psi};
            if (case2_certificate(r, res))
                return res;
        }
    } while (next_index(idx, sizes));
    return std::nullopt;
}

Case3Report case3_detect(const RatFunc& r)
{
    Case3Report rep;
    const auto poles = finite_poles(r);
    const int m = r.order_at_infinity();
    rep.conditions_hold = m >= 2;
    if (!rep.conditions_hold)
        rep.notes.push_back("order at infinity below 2");
    // Per pole: weight and either the simple-pole marker or sqrt(1 + 4b).
    struct Local {
        long weight;
        std::optional<Rat> root; // nullopt for simple poles
    };
    std::vector<Local> locals;
    for (const auto& pole : poles) {
        if (pole.order > 2) {
            rep.conditions_hold = false;
            rep.notes.push_back("pole of order " + std::to_string(pole.order) + " at " + pole.place.to_string());
            continue;
        }
        if (pole.order == 1) {
            locals.push_back({pole.place.degree(), std::nullopt});
            continue;
        }
        auto b = second_order_coefficient(r, pole.place);
        auto s = b ? exact_sqrt(1 + 4 * *b) : std::nullopt;
        if (!s) {
            rep.conditions_hold = false;
            rep.notes.push_back("irrational exponent difference at " + pole.place.to_string());
            continue;
        }
        locals.push_back({pole.place.degree(), *s});
    }
    Rat gamma = m == 2 ? lead_at_infinity(r) : Rat(0);
    auto sinf = exact_sqrt(1 + 4 * gamma);
    if (!sinf) {
        rep.conditions_hold = false;
        rep.notes.push_back("irrational exponent difference at infinity");
    }
    if (rep.conditions_hold) {
        for (int n : {4, 6, 12}) {
            auto eset = [n](const std::optional<Rat>& s) {
                std::set<long> out;
                if (!s) {
                    out.insert(12);
                    return out;
                }
                for (int k = -n / 2; k <= n / 2; ++k) {
                    Rat e = 6 + Rat(12 * k) / n * *s;
                    if (is_integer(e))
                        out.insert(e.get_num().get_si());
                }
                return out;
            };
            std::set<long> sums{0};
            for (const auto& loc : locals) {
                std::set<long> next;
                for (long acc : sums)
                    for (long e : eset(loc.root))
                        next.insert(acc + loc.weight * e);
                sums = std::move(next);
            }
            bool ok = false;
            for (long einf : eset(*sinf))
                for (long acc : sums) {
                    const long num = n * (einf - acc);
                    if (num >= 0 && num % 12 == 0)
                        ok = true;
                }
            if (ok)
                rep.admissible_n.push_back(n);
        }
        if (rep.admissible_n.empty())
            rep.notes.push_back("no admissible exponent family for n in {4, 6, 12}");
    }
    rep.moot = case1_search(r).has_value() || case2_search(r).has_value();
    return rep;
}

bool annihilates(const DiffOp& l, const PowerProduct& y)
{
    const RatFunc ell = pp_log_derivative(y);
    RatFunc ratio(1); // y^(i) / y
    RatFunc acc;
    for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
        if (i > 0)
            ratio = ratio.derivative() + ell * ratio;
        acc += l.coeffs()[i] * ratio;
    }
    return acc.is_zero();
}

Theorem2Verdict classify_theorem2(const DiffOp& l)
{
    if (l.order() != 2)
        throw DomainError("classify_theorem2 needs an operator of order 2");
    Theorem2Verdict v;
    const DiffOp lm = l.monic();
    v.normal = normal_form(lm);
    v.conditions = case_conditions(v.normal.r);
    v.fuchs = is_fuchsian(lm);
    v.g_conditions = v.fuchs.is_fuchsian &&
                     std::all_of(v.fuchs.places.begin(), v.fuchs.places.end(),
                                 [](const IndicialData& d) { return d.exponents.all_rational; });

    if (v.conditions.has(1))
        v.case1 = case1_search(v.normal.r);
    if (v.case1) {
        v.kovacic_case = 1;
        const RatFunc a = v.case1->omega + RatFunc(v.case1->P.derivative(), v.case1->P) - v.normal.half_p;
        const DiffOp n = DiffOp::first_order(a);
        RightDivision div = op_rdiv(lm, n);
        if (!div.remainder.is_zero())
            throw DomainError("internal: Case 1 right factor does not divide");
        const DiffOp& m = div.quotient;
        const RatFunc eta = -m.coeff(0);
        Order1Verdict vg = classify_order1(a);
        Order1Verdict vk = classify_order1(eta);
        if (!vg.is_g_operator || !vk.is_g_operator) {
            v.kind = OutcomeKind::ReducibleNonG;
            v.right_factor = n;
            v.note = !vg.is_g_operator ? "right factor: " + vg.reason : "left factor: " + vk.reason;
            return v;
        }
        PrimitiveForm pf{*vg.solution, pp_mul(*vk.solution, pp_inverse(*vg.solution)), n, m};
        v.kind = OutcomeKind::PrimitiveForm;
        if (auto rr = rational_solution(-pp_log_derivative(pf.h), RatFunc(1))) {
            // int h = h R, so g int h = k R.
            PowerProduct first = pf.g, second = pp_mul(*vk.solution, pp_from_ratfunc(*rr));
            for (auto* b : {&first, &second}) {
                b->coefficient = 1;
                b->constant_tag.clear();
            }
            if (!annihilates(lm, first) || !annihilates(lm, second))
                throw DomainError("internal: algebraic basis certificate failed");
            v.algebraic = AlgebraicBasis{{first, second}, std::nullopt};
        }
        v.primitive = std::move(pf);
        return v;
    }
    if (v.conditions.has(2))
        v.case2 = case2_search(v.normal.r);
    if (v.case2) {
        v.kovacic_case = 2;
        if (v.g_conditions) {
            v.kind = OutcomeKind::AlgebraicBasis;
            v.algebraic = AlgebraicBasis{{}, v.case2};
        } else {
            v.kind = OutcomeKind::LiouvillianNonG;
            v.note = "Case 2 solution, but the operator fails the G-operator local conditions";
        }
        return v;
    }
    if (v.conditions.has(3)) {
        v.case3 = case3_detect(v.normal.r);
        if (v.case3->conditions_hold && !v.case3->admissible_n.empty()) {
            v.kovacic_case = 3;
            v.kind = OutcomeKind::Case3Candidate;
            return v;
        }
    }
    v.kind = OutcomeKind::IrreducibleFullGroup;
    return v;
}

} // namespace gop
