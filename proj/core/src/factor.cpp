#include "gop/factor.hpp"

#include <algorithm>
#include <functional>

namespace gop {

namespace {

// ---- arithmetic in F_p[x], coefficients in [0, p) ----

using ModPoly = std::vector<long>;

long mod(long a, long p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const ModPoly& a)
{
    return static_cast<int>(a.size()) - 1;
}

long inv_mod(long a, long p)
{
    long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr) {
        long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1)
        throw DomainError("inv_mod: not invertible");
    return mod(t, p);
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, long p)
{
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mod((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), p);
    trim(r);
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p)
{
    if (a.empty() || b.empty())
        return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, long p)
{
    if (deg(a) < deg(b))
        return {{}, a};
    long inv = inv_mod(b.back(), p);
    ModPoly q(a.size() - b.size() + 1, 0);
    for (int k = deg(a); k >= deg(b); --k) {
        long c = a[static_cast<std::size_t>(k)] * inv % p;
        q[static_cast<std::size_t>(k - deg(b))] = c;
        if (!c)
            continue;
        for (int j = 0; j <= deg(b); ++j) {
            auto idx = static_cast<std::size_t>(k - deg(b) + j);
            a[idx] = mod(a[idx] - c * b[static_cast<std::size_t>(j)], p);
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

ModPoly mp_monic(ModPoly a, long p)
{
    if (a.empty())
        return a;
    long inv = inv_mod(a.back(), p);
    for (auto& c : a)
        c = c * inv % p;
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p)
{
    while (!b.empty()) {
        ModPoly r = mp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// s*a + t*b = 1 (inputs coprime)
std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, long p)
{
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0)
        throw DomainError("mp_bezout: inputs not coprime");
    long inv = inv_mod(r0[0], p);
    for (auto& c : s0)
        c = c * inv % p;
    for (auto& c : t0)
        c = c * inv % p;
    return {s0, t0};
}

ModPoly mp_derivative(const ModPoly& a, long p)
{
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * static_cast<long>(i % static_cast<std::size_t>(p)) % p);
    trim(r);
    return r;
}

ModPoly mp_powmod(ModPoly base, unsigned long e, const ModPoly& f, long p)
{
    ModPoly result{1};
    base = mp_divmod(base, f, p).second;
    while (e) {
        if (e & 1)
            result = mp_divmod(mp_mul(result, base, p), f, p).second;
        e >>= 1;
        if (e)
            base = mp_divmod(mp_mul(base, base, p), f, p).second;
    }
    return result;
}

// Nullspace basis of an n x n matrix over F_p.
std::vector<std::vector<long>> nullspace_mod(std::vector<std::vector<long>> m, long p)
{
    const std::size_t n = m.size();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(m[piv], m[row]);
        long inv = inv_mod(m[row][col], p);
        for (auto& c : m[row])
            c = c * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            long f = m[r][col];
            for (std::size_t c = 0; c < n; ++c)
                m[r][c] = mod(m[r][c] - f * m[row][c], p);
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot[col] = true;
        ++row;
    }
    std::vector<std::vector<long>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<long> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = mod(-m[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Berlekamp: monic squarefree f over F_p into monic irreducibles.
std::vector<ModPoly> berlekamp(const ModPoly& f, long p)
{
    const int n = deg(f);
    if (n <= 1)
        return {f};
    ModPoly xp = mp_powmod(ModPoly{0, 1}, static_cast<unsigned long>(p), f, p);
    std::vector<std::vector<long>> q(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    ModPoly row{1};
    for (int i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < row.size(); ++j)
            q[j][static_cast<std::size_t>(i)] = row[j]; // transpose
        row = mp_divmod(mp_mul(row, xp, p), f, p).second;
    }
    for (int i = 0; i < n; ++i) {
        auto ii = static_cast<std::size_t>(i);
        q[ii][ii] = mod(q[ii][ii] - 1, p);
    }
    auto basis = nullspace_mod(q, p);
    const std::size_t r = basis.size();
    std::vector<ModPoly> factors{f};
    for (const auto& vec : basis) {
        if (factors.size() == r)
            break;
        ModPoly v(vec.begin(), vec.end());
        trim(v);
        if (deg(v) <= 0)
            continue;
        for (long s = 0; s < p && factors.size() < r; ++s) {
            ModPoly vs = v;
            vs[0] = mod(vs[0] - s, p);
            std::vector<ModPoly> next;
            std::size_t count = factors.size();
            for (const auto& u : factors) {
                if (deg(u) > 1 && count < r) {
                    ModPoly g = mp_gcd(u, vs, p);
                    if (deg(g) > 0 && deg(g) < deg(u)) {
                        next.push_back(g);
                        next.push_back(mp_monic(mp_divmod(u, g, p).first, p));
                        ++count;
                        continue;
                    }
                }
                next.push_back(u);
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ---- arithmetic in (Z/m)[x] with Int coefficients in [0, m) ----

using ZPoly = std::vector<Int>;

Int zmod(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& c : r)
        c = zmod(c, m);
    ztrim(r);
    return r;
}

ZPoly zp_add_scaled(const ZPoly& a, const ModPoly& b, const Int& scale, const Int& m)
{
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = i < a.size() ? a[i] : Int(0);
        if (i < b.size())
            v += scale * b[i];
        r[i] = zmod(v, m);
    }
    ztrim(r);
    return r;
}

ModPoly to_modp(const ZPoly& a, long p)
{
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = zmod(a[i], Int(p)).get_si();
    trim(r);
    return r;
}

ZPoly from_modp(const ModPoly& a)
{
    ZPoly r;
    for (long c : a)
        r.emplace_back(c);
    return r;
}

// Lifts F = g*h (mod p), g monic, to F = G*H (mod p^e); returns {G, H}.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const ModPoly& g, const ModPoly& h,
                                    long p, unsigned e, const Int& m)
{
    auto [s, t] = mp_bezout(g, h, p);
    (void)s;
    ZPoly G = from_modp(g), H = from_modp(h);
    Int pk = p;
    for (unsigned k = 1; k < e; ++k) {
        ZPoly GH = zp_mul(G, H, m);
        ZPoly E(std::max(F.size(), GH.size()), Int(0));
        for (std::size_t i = 0; i < E.size(); ++i)
            E[i] = zmod((i < F.size() ? F[i] : Int(0)) - (i < GH.size() ? GH[i] : Int(0)), m);
        ModPoly err(E.size());
        for (std::size_t i = 0; i < E.size(); ++i)
            err[i] = zmod(Int(E[i] / pk), Int(p)).get_si();
        trim(err);
        if (!err.empty()) {
            ModPoly dg = mp_divmod(mp_mul(t, err, p), g, p).second;
            ModPoly dh = mp_divmod(mp_sub(err, mp_mul(h, dg, p), p), g, p).first;
            G = zp_add_scaled(G, dg, pk, m);
            H = zp_add_scaled(H, dh, pk, m);
        }
        pk *= p;
    }
    return {G, H};
}

std::vector<long> small_primes()
{
    std::vector<long> out;
    for (long n = 3; n < 4000; n += 2) {
        bool prime = true;
        for (long d = 3; d * d <= n; d += 2)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            out.push_back(n);
    }
    return out;
}

ZPoly to_zpoly(const Poly& f)
{
    ZPoly r;
    for (const auto& c : f.coeffs())
        r.push_back(c.get_num());
    return r;
}

Poly symmetric_poly(const ZPoly& a, const Int& m)
{
    Int half = m / 2;
    std::vector<Rat> c;
    for (const auto& x : a) {
        Int v = zmod(x, m);
        if (v > half)
            v -= m;
        c.emplace_back(v);
    }
    return Poly(std::move(c));
}

// Quotient of integer polynomials when exact over Z.
std::optional<Poly> divide_over_z(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        return std::nullopt;
    for (const auto& c : q.coeffs())
        if (c.get_den() != 1)
            return std::nullopt;
    return q;
}

} // namespace

std::vector<Poly> factor_squarefree_integer(const Poly& f0)
{
    if (f0.degree() <= 1)
        return {f0};
    Poly f = f0;
    const int n = f.degree();
    const Int lc = f.lead().get_num();

    static const std::vector<long> primes = small_primes();
    long best_p = 0;
    std::vector<ModPoly> best;
    int tried = 0;
    for (long p : primes) {
        if (lc % p == 0)
            continue;
        ModPoly fp = to_modp(to_zpoly(f), p);
        if (deg(fp) != n)
            continue;
        if (deg(mp_gcd(fp, mp_derivative(fp, p), p)) > 0)
            continue;
        auto fac = berlekamp(mp_monic(fp, p), p);
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = p;
        }
        if (best.size() == 1 || ++tried >= 5)
            break;
    }
    if (best_p == 0)
        throw DomainError("factorization: no suitable prime found");
    if (best.size() == 1)
        return {f};

    // Coefficient bound for factors of lc*f.
    Int normsq = 0;
    for (const auto& c : f.coeffs())
        normsq += c.get_num() * c.get_num();
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), normsq.get_mpz_t());
    norm += 1;
    Int bound = 2 * abs(lc) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    const long p = best_p;
    unsigned e = 1;
    Int m = p;
    while (m <= 2 * bound) {
        m *= p;
        ++e;
    }

    // Lift one factor at a time.
    std::vector<ZPoly> lifted;
    ZPoly F = to_zpoly(f);
    for (auto& c : F)
        c = zmod(c, m);
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        ModPoly rest{zmod(lc, Int(p)).get_si()};
        for (std::size_t j = i + 1; j < best.size(); ++j)
            rest = mp_mul(rest, best[j], p);
        auto [G, H] = hensel_lift(F, best[i], rest, p, e, m);
        lifted.push_back(std::move(G));
        F = std::move(H);
    }
    {
        Int linv;
        Int lcm_ = zmod(F.back(), m);
        mpz_invert(linv.get_mpz_t(), lcm_.get_mpz_t(), m.get_mpz_t());
        for (auto& c : F)
            c = zmod(c * linv, m);
        lifted.push_back(std::move(F));
    }

    // Recombination.
    std::vector<Poly> result;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        const std::size_t r = lifted.size();
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        bool found = false;
        for (;;) {
            Int cur_lc = f.lead().get_num();
            ZPoly G{zmod(cur_lc, m)};
            for (std::size_t i : idx)
                G = zp_mul(G, lifted[i], m);
            Poly cand = symmetric_poly(G, m).primitive();
            if (cand.degree() > 0) {
                if (auto q = divide_over_z(f, cand)) {
                    result.push_back(cand);
                    f = *q;
                    std::vector<ZPoly> keep;
                    for (std::size_t i = 0; i < r; ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            keep.push_back(std::move(lifted[i]));
                    lifted = std::move(keep);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == r - s + (k - 1))
                --k;
            if (k == 0)
                break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found)
            ++s;
    }
    if (f.degree() > 0)
        result.push_back(f.primitive());
    return result;
}

Poly Factorization::expand() const
{
    Poly out(lead);
    for (const auto& [p, k] : factors)
        out *= p.pow(static_cast<unsigned>(k));
    return out;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p)
{
    if (p.is_zero())
        throw DomainError("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly a = p.monic();
    if (a.degree() == 0)
        return out;
    Poly b = a.derivative();
    Poly c = gcd(a, b);
    Poly w = a / c;
    Poly y = b / c;
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly g = gcd(w, z);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        w = w / g;
        y = z / g;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

Factorization poly_factor(const Poly& p)
{
    if (p.is_zero())
        throw DomainError("poly_factor: zero polynomial");
    Factorization out;
    out.lead = p.lead();
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& q : factor_squarefree_integer(part.primitive()))
            out.factors.emplace_back(q.monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

RationalRoots rational_roots(const Poly& p)
{
    if (p.is_zero())
        throw DomainError("rational_roots: zero polynomial");
    RationalRoots out;
    int total = 0;
    for (const auto& [q, k] : poly_factor(p).factors) {
        if (q.degree() == 1) {
            out.roots.emplace_back(-q.coeff(0), k);
            total += k;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.all_rational = total == p.degree();
    return out;
}

} // namespace gop
