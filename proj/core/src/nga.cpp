#include "gop/nga.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>

namespace gop {

NGATerm NGATerm::make(const Rat& alpha, unsigned j, CycConst coeff, TruncSeries series)
{
    if (!is_integer(series.offset))
        throw DomainError("NGA series offsets must be integers");
    Int fl = floor_rat(alpha);
    NGATerm t{alpha - fl, j, std::move(coeff), std::move(series)};
    t.series.offset += fl;
    return t;
}

unsigned NGAExpr::level() const
{
    unsigned l = 1;
    for (const auto& t : terms) {
        l = std::lcm(l, static_cast<unsigned>(t.alpha.get_den().get_ui()));
        l = std::lcm(l, t.coeff.level());
    }
    return l;
}

namespace {

CycConst zeta_of(const Rat& alpha, unsigned level, int direction)
{
    Rat k = alpha * level;
    if (!is_integer(k))
        throw DomainError("alpha incompatible with the cyclotomic level");
    return CycConst::zeta(level, direction * k.get_num().get_si());
}

CycConst tau_power(unsigned level, unsigned m, int sign)
{
    CycConst c(level, Rat(1));
    for (unsigned i = 0; i < m; ++i)
        c = c * (Rat(sign) * CycConst::tau(level));
    return c;
}

using CycSeries = std::vector<CycConst>;
using Slots = std::map<Slot, CycSeries>;

bool series_zero(const CycSeries& s)
{
    return std::all_of(s.begin(), s.end(), [](const CycConst& c) { return c.is_zero(); });
}

void axpy(CycSeries& y, const CycConst& a, const CycSeries& x)
{
    for (std::size_t n = 0; n < y.size(); ++n)
        if (!x[n].is_zero())
            y[n] = y[n] + a * x[n];
}

CycSeries scaled(const CycConst& a, const CycSeries& x)
{
    CycSeries y(x.size(), CycConst(a.level()));
    axpy(y, a, x);
    return y;
}

void prune(Slots& s)
{
    for (auto it = s.begin(); it != s.end();)
        it = series_zero(it->second) ? s.erase(it) : std::next(it);
}

/// Delta = zeta_{alpha0}^{-1} T - id on slot content.
Slots twisted_difference(const Slots& f, const Rat& alpha0, unsigned level, std::size_t len)
{
    Slots out;
    const CycConst inv0 = zeta_of(alpha0, level, -1);
    for (const auto& [slot, content] : f) {
        const auto& [alpha, j] = slot;
        const CycConst mu = inv0 * zeta_of(alpha, level, 1);
        for (unsigned i = 0; i <= j; ++i) {
            CycConst c = Rat(binomial(j, i)) * mu * tau_power(level, j - i, 1);
            if (i == j)
                c = c - CycConst(level, Rat(1));
            if (c.is_zero())
                continue;
            auto& dst = out.try_emplace(Slot{alpha, i}, CycSeries(len, CycConst(level))).first->second;
            axpy(dst, c, content);
        }
    }
    prune(out);
    return out;
}

Slots split_slots(const Slots& f, unsigned level, std::size_t len)
{
    if (f.empty())
        return {};
    const Rat alpha0 = f.begin()->first.first;
    unsigned top = 0;
    bool single = true;
    for (const auto& [slot, content] : f) {
        if (slot.first == alpha0)
            top = std::max(top, slot.second);
        if (!(slot == Slot{alpha0, 0}))
            single = false;
    }
    if (single)
        return f;

    Slots g = split_slots(twisted_difference(f, alpha0, level, len), level, len);
    auto component = [&](const Slots& s, const Slot& key) {
        auto it = s.find(key);
        return it == s.end() ? CycSeries(len, CycConst(level)) : it->second;
    };

    // Highest log power of every alpha present.
    std::map<Rat, unsigned> tops;
    for (const auto& [slot, content] : f)
        tops[slot.first] = std::max(tops[slot.first], slot.second);

    Slots result;
    const CycConst inv0 = zeta_of(alpha0, level, -1);
    for (const auto& [alpha, jmax] : tops) {
        if (alpha == alpha0) {
            // G_{a0,j-1} = sum_{m >= j} C(m, j-1) tau^(m-j+1) F_{a0,m}
            for (unsigned j = jmax; j >= 1; --j) {
                CycSeries rhs = component(g, Slot{alpha, j - 1});
                for (unsigned m = j + 1; m <= jmax; ++m)
                    axpy(rhs, Rat(-1) * (Rat(binomial(m, j - 1)) * tau_power(level, m - j + 1, 1)),
                         component(result, Slot{alpha, m}));
                CycSeries fj(len, CycConst(level));
                const Rat inv_j = Rat(1) / Rat(j);
                for (std::size_t n = 0; n < len; ++n)
                    fj[n] = inv_j * rhs[n].divided_by_tau();
                result[Slot{alpha, j}] = std::move(fj);
            }
            continue;
        }
        const CycConst mu = inv0 * zeta_of(alpha, level, 1);
        const CycConst inv = (mu - CycConst(level, Rat(1))).inverse();
        for (unsigned j = jmax + 1; j-- > 0;) {
            CycSeries rhs = component(g, Slot{alpha, j});
            for (unsigned i = j + 1; i <= jmax; ++i)
                axpy(rhs, Rat(-1) * (Rat(binomial(i, j)) * mu * tau_power(level, i - j, 1)),
                     component(result, Slot{alpha, i}));
            result[Slot{alpha, j}] = scaled(inv, rhs);
        }
    }

    // The remaining component is what is left of f once the others are removed.
    Slots rest = f;
    for (const auto& [slot, content] : result) {
        auto& dst = rest.try_emplace(slot, CycSeries(len, CycConst(level))).first->second;
        axpy(dst, CycConst(level, Rat(-1)), content);
    }
    prune(rest);
    for (const auto& [slot, content] : rest)
        if (!(slot == Slot{alpha0, 0}))
            throw DomainError("internal: holonomy split left a residual slot");
    if (auto it = rest.find(Slot{alpha0, 0}); it != rest.end())
        result[it->first] = it->second;
    prune(result);
    return result;
}

} // namespace

NGAExpr monodromy_apply(const NGAExpr& e, int direction)
{
    if (direction != 1 && direction != -1)
        throw DomainError("monodromy direction must be +1 or -1");
    const unsigned level = e.level();
    NGAExpr out;
    for (const auto& t : e.terms) {
        const CycConst z = zeta_of(t.alpha, level, direction) * t.coeff;
        for (unsigned i = 0; i <= t.j; ++i) {
            CycConst c = Rat(binomial(t.j, i)) * z * tau_power(level, t.j - i, direction);
            out.terms.push_back(NGATerm{t.alpha, i, c, t.series});
        }
    }
    return out;
}

SlotForm to_slots(const NGAExpr& e)
{
    SlotForm f;
    f.level = e.level();
    if (e.terms.empty())
        return f;
    long lo = LONG_MAX, hi = LONG_MAX;
    for (const auto& t : e.terms) {
        const long o = t.series.offset.get_num().get_si();
        lo = std::min(lo, o);
        hi = std::min(hi, o + static_cast<long>(t.series.truncation()));
    }
    f.offset = lo;
    f.length = hi > lo ? static_cast<std::size_t>(hi - lo) : 0;
    for (const auto& t : e.terms) {
        const long o = t.series.offset.get_num().get_si();
        auto& dst = f.slots.try_emplace(Slot{t.alpha, t.j}, CycSeries(f.length, CycConst(f.level))).first->second;
        const CycConst c = t.coeff.lifted(f.level);
        for (std::size_t k = 0; k < t.series.truncation(); ++k) {
            const long idx = o - lo + static_cast<long>(k);
            if (idx >= static_cast<long>(f.length))
                break;
            if (t.series.coeffs[k] != 0)
                dst[static_cast<std::size_t>(idx)] = dst[static_cast<std::size_t>(idx)] + t.series.coeffs[k] * c;
        }
    }
    prune(f.slots);
    return f;
}

bool nga_equivalent(const NGAExpr& a, const NGAExpr& b)
{
    NGAExpr diff = a;
    for (const auto& t : b.terms) {
        NGATerm n = t;
        n.coeff = Rat(-1) * n.coeff;
        diff.terms.push_back(std::move(n));
    }
    return to_slots(diff).slots.empty();
}

SplitResult holonomy_split(const NGAExpr& e, std::size_t min_truncation)
{
    SlotForm f = to_slots(e);
    if (f.length < min_truncation)
        throw DomainError("holonomy_split: truncation " + std::to_string(f.length) + " below the minimum " +
                          std::to_string(min_truncation));
    Slots parts = split_slots(f.slots, f.level, f.length);
    SplitResult out;
    out.level = f.level;
    const std::size_t phi = static_cast<std::size_t>(cyclotomic_polynomial(f.level).degree());
    for (const auto& [slot, content] : parts) {
        unsigned max_tau = 0;
        for (const auto& c : content)
            max_tau = std::max(max_tau, static_cast<unsigned>(std::max(0, c.tau_degree())));
        for (unsigned m = 0; m <= max_tau; ++m)
            for (std::size_t i = 0; i < phi; ++i) {
                std::vector<Rat> coeffs(f.length);
                bool any = false;
                for (std::size_t n = 0; n < f.length; ++n) {
                    const CycConst lifted = content[n].lifted(f.level);
                    const auto& tc = lifted.tau_coeffs();
                    if (m < tc.size()) {
                        coeffs[n] = tc[m].coeff(i);
                        any = any || coeffs[n] != 0;
                    }
                }
                if (any)
                    out.components.push_back({slot.first, slot.second, static_cast<unsigned>(i), m,
                                              TruncSeries{Rat(f.offset), std::move(coeffs)}});
            }
    }
    return out;
}

NGAExpr reassemble(const SplitResult& s)
{
    NGAExpr e;
    for (const auto& c : s.components)
        e.terms.push_back(NGATerm{c.alpha, c.j,
                                  CycConst::zeta(s.level, c.zeta_power) * tau_power(s.level, c.tau_power, 1),
                                  c.series});
    return e;
}

CycConst parse_cyc_const(std::string_view text, unsigned level)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> DomainError {
        return DomainError("coefficient \"" + std::string(text) + "\" at " + std::to_string(pos) + ": " + why);
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto number = [&]() -> long {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw fail("expected a number");
        return std::stol(std::string(text.substr(start, pos - start)));
    };
    CycConst total(level);
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    for (;;) {
        CycConst term(level, Rat(sign));
        for (;;) {
            skip();
            if (pos >= text.size())
                throw fail("unexpected end");
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                long num = number();
                long den = 1;
                skip();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = number();
                    if (den == 0)
                        throw fail("zero denominator");
                }
                term = make_rat(num, den) * term;
            } else if (text.substr(pos, 4) == "zeta") {
                pos += 4;
                const long n = number();
                long k = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    int ks = 1;
                    if (pos < text.size() && text[pos] == '-') {
                        ks = -1;
                        ++pos;
                    }
                    k = ks * number();
                }
                if (n <= 0 || level % static_cast<unsigned>(n) != 0)
                    throw fail("zeta level must divide " + std::to_string(level));
                term = term * CycConst::zeta(static_cast<unsigned>(n), k);
            } else if (text.substr(pos, 3) == "tau") {
                pos += 3;
                long m = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    m = number();
                }
                term = term * tau_power(level, static_cast<unsigned>(m), 1);
            } else {
                throw fail("unexpected character");
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        total = total + term.lifted(level);
        skip();
        if (pos >= text.size())
            break;
        if (text[pos] != '+' && text[pos] != '-')
            throw fail("expected + or -");
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    return total;
}

} // namespace gop
