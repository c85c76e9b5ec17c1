#include "generators.hpp"

#include "gop/cyclotomic.hpp"
#include "gop/factor.hpp"
#include "gop/linalg.hpp"
#include "gop/partial_fractions.hpp"
#include "gop/pochhammer.hpp"
#include "gop/residue.hpp"
#include "gop/series.hpp"

#include <doctest.h>

using namespace gop;
using gop::testing::Gen;

TEST_CASE("rationals parse and print canonically")
{
    CHECK(to_string(parse_rat("-6/4")) == "-3/2");
    CHECK_THROWS(parse_rat("6/-4"));
    CHECK(to_string(parse_rat(" 7 ")) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
    CHECK_THROWS(parse_rat("x"));
    CHECK(floor_rat(make_rat(-7, 2)) == -4);
    CHECK(exact_sqrt(make_rat(9, 16)) == make_rat(3, 4));
    CHECK_FALSE(exact_sqrt(Rat(2)).has_value());
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("log2_fixed brackets the true logarithm")
{
    for (unsigned long x : {1UL, 2UL, 3UL, 1000UL, 1UL << 40}) {
        const Int v(x);
        const Rat l = log2_fixed(v);
        CHECK(is_integer(l * Rat(Int(1) << 32)));
        CHECK(floor_rat(l) == static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1);
    }
    CHECK(log2_fixed(Int(1024)) == 10);
}

TEST_CASE("least-squares slope of an exact line")
{
    std::vector<Rat> xs{0, 1, 2, 3}, ys{1, make_rat(5, 2), 4, make_rat(11, 2)};
    CHECK(least_squares_slope(xs, ys) == make_rat(3, 2));
}

TEST_CASE("polynomial division and gcd identities on random input")
{
    Gen g;
    for (int i = 0; i < 200; ++i) {
        Poly a = g.poly(6), b = g.nonzero_poly(4);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        Poly c = g.nonzero_poly(3);
        Poly ac = a * c, bc = b * c;
        Poly d = gcd(ac, bc);
        CHECK((ac % d).is_zero());
        CHECK((bc % d).is_zero());
        CHECK((d % c.monic()).is_zero());
        ExtGcd e = ext_gcd(ac, bc);
        CHECK(e.s * ac + e.t * bc == e.g);
    }
}

TEST_CASE("polynomial printing")
{
    CHECK(Poly::from_ints({0, 0, -2, 2}).to_string() == "2*z^3 - 2*z^2");
    CHECK((Poly::x() * make_rat(1, 2)).to_string() == "1/2*z");
    CHECK(Poly().to_string() == "0");
}

TEST_CASE("factorization reproduces random products of known factors")
{
    Gen g(11);
    for (int i = 0; i < 60; ++i) {
        std::vector<Poly> parts;
        Poly p(Rat(g.nonzero_rational()));
        const int n = static_cast<int>(g.integer(1, 4));
        for (int k = 0; k < n; ++k) {
            Poly f = g.nonzero_poly(3, 4);
            if (f.degree() < 1)
                f = Poly::linear(g.rational());
            parts.push_back(f);
            p *= f;
        }
        Factorization fz = poly_factor(p);
        CHECK(fz.expand() == p);
        int deg = 0;
        for (const auto& [f, m] : fz.factors) {
            CHECK(f.lead() == 1);
            CHECK(m >= 1);
            deg += f.degree() * m;
        }
        CHECK(deg == p.degree());
        // Every known part is a product of the reported factors.
        for (const auto& part : parts) {
            Poly rest = part.monic();
            for (const auto& [f, m] : fz.factors)
                for (int k = 0; k < m && !rest.is_constant() && (rest % f).is_zero(); ++k)
                    rest = rest / f;
            CHECK(rest.is_constant());
        }
    }
}

TEST_CASE("factorization of classical polynomials")
{
    // z^4 + 1 is irreducible over Q though reducible mod every prime.
    CHECK(poly_factor(Poly::from_ints({1, 0, 0, 0, 1})).factors.size() == 1);
    // z^6 - 1 = (z-1)(z+1)(z^2+z+1)(z^2-z+1)
    Factorization f = poly_factor(Poly::from_ints({-1, 0, 0, 0, 0, 0, 1}));
    CHECK(f.factors.size() == 4);
    // Swinnerton-Dyer polynomial for sqrt2, sqrt3: irreducible.
    CHECK(poly_factor(Poly::from_ints({1, 0, -10, 0, 1})).factors.size() == 1);
    RationalRoots rr = rational_roots(Poly::from_ints({-6, 11, -6, 1}));
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0].first == 1);
    CHECK(rr.roots[2].first == 3);
    CHECK(rr.all_rational);
    CHECK_FALSE(rational_roots(Poly::from_ints({-2, 0, 1})).all_rational);
}

TEST_CASE("squarefree decomposition recombines")
{
    Poly p = Poly::linear(1).pow(3) * Poly::linear(-2) * Poly::from_ints({1, 0, 1}).pow(2);
    Poly prod(Rat(1));
    for (const auto& [f, m] : squarefree_decomposition(p))
        prod *= f.pow(static_cast<unsigned>(m));
    CHECK(prod == p.monic());
}

TEST_CASE("partial fractions recombine on random rational functions")
{
    Gen g(12);
    for (int i = 0; i < 100; ++i) {
        Poly den(Rat(1));
        for (int k = 0, n = static_cast<int>(g.integer(1, 3)); k < n; ++k)
            den *= (g.coin(70) ? Poly::linear(g.rational(3, 2)) : Poly::from_ints({g.integer(1, 3), 0, 1}))
                       .pow(static_cast<unsigned>(g.integer(1, 3)));
        RatFunc f(g.poly(7), den);
        PartialFractions pf = partial_fractions(f);
        CHECK(pf.recombine() == f);
        for (const auto& t : pf.terms)
            CHECK(t.numerator.degree() < t.place.degree());
    }
}

TEST_CASE("pochhammer oracle")
{
    // (1/2)_3 / 3! = (1/2)(3/2)(5/2)/6 = 15/48 = 5/16.
    CHECK(pochhammer(make_rat(1, 2), 3) == make_rat(15, 8));
    CHECK(pochhammer(Rat(5), 0) == 1);
    CHECK(pochhammer_denominator(make_rat(1, 2), 3) == 16);
    Gen g(13);
    for (int i = 0; i < 30; ++i) {
        Rat t = g.rational(5, 6);
        Int d = 1;
        Rat prod = 1;
        for (unsigned long n = 1; n <= 12; ++n) {
            prod *= (t + Rat(n - 1)) / Rat(n);
            d = lcm(d, prod.get_den());
            CHECK(pochhammer(t, n) / Rat(factorial(n)) == prod);
        }
        CHECK(pochhammer_denominator(t, 12) == d);
    }
}

TEST_CASE("nullspace vectors annihilate the matrix")
{
    Gen g(14);
    for (int i = 0; i < 50; ++i) {
        const std::size_t rows = static_cast<std::size_t>(g.integer(1, 5));
        const std::size_t cols = static_cast<std::size_t>(g.integer(1, 6));
        RatRows m(rows, RatVector(cols));
        for (auto& r : m)
            for (auto& x : r)
                x = g.coin(30) ? Rat(0) : g.rational();
        auto ns = nullspace(m, cols);
        CHECK(rref(m, cols).rank() + ns.size() == cols);
        for (const auto& v : ns)
            for (const auto& r : m) {
                Rat s = 0;
                for (std::size_t k = 0; k < cols; ++k)
                    s += r[k] * v[k];
                CHECK(s == 0);
            }
        RatVector b(rows);
        for (auto& x : b)
            x = g.rational();
        if (auto x = solve(m, b, cols))
            for (std::size_t r = 0; r < rows; ++r) {
                Rat s = 0;
                for (std::size_t k = 0; k < cols; ++k)
                    s += m[r][k] * (*x)[k];
                CHECK(s == b[r]);
            }
    }
}

TEST_CASE("Laurent expansions agree with series division")
{
    Gen g(15);
    ResidueField at_zero(Poly::x());
    for (int i = 0; i < 40; ++i) {
        Poly num = g.nonzero_poly(4);
        Poly den = g.nonzero_poly(3);
        if (den.coeff(0) == 0)
            den += Poly(Rat(1));
        auto s = series_quotient(num, den, 10);
        for (int k = 0; k < 10; ++k) {
            auto c = as_rational(at_zero.laurent_coeff(RatFunc(num, den), k));
            REQUIRE(c.has_value());
            CHECK(*c == s[static_cast<std::size_t>(k)]);
        }
    }
    // Over Q(i): 1/(z^2+1) has Laurent start (1/(2i)) t^-1 = (-x/2) t^-1.
    ResidueField qi(Poly::from_ints({1, 0, 1}));
    auto l = qi.laurent(RatFunc(Poly(Rat(1)), Poly::from_ints({1, 0, 1})), 2);
    CHECK(l.valuation == -1);
    CHECK(l.coeffs[0] == Poly({Rat(0), make_rat(-1, 2)}));
}

TEST_CASE("rational function field laws")
{
    Gen g(16);
    for (int i = 0; i < 100; ++i) {
        RatFunc a = g.ratfunc(3, 2), b = g.ratfunc(3, 2), c = g.ratfunc(2, 2);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        CHECK(a.den().lead() == 1);
    }
    CHECK(RatFunc(Poly(Rat(1)), Poly::from_ints({0, 2})).to_string() == "1/(2*z)");
    CHECK(RatFunc(Poly(make_rat(-1, 4)), Poly::from_ints({0, 0, 1})).to_string() == "-1/(4*z^2)");
}

TEST_CASE("cyclotomic polynomials and roots of unity")
{
    CHECK(cyclotomic_polynomial(1) == Poly::from_ints({-1, 1}));
    CHECK(cyclotomic_polynomial(4) == Poly::from_ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == Poly::from_ints({1, 0, -1, 0, 1}));
    for (unsigned n = 1; n <= 30; ++n) {
        Poly prod(Rat(1));
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0)
                prod *= cyclotomic_polynomial(d);
        CHECK(prod == Poly::monomial(Rat(1), n) - Poly(Rat(1)));
        CycConst z = CycConst::zeta(n, 1), p(n, Rat(1));
        for (unsigned k = 0; k < n; ++k)
            p = p * z;
        CHECK(p == CycConst(n, Rat(1)));
        CHECK(CycConst::zeta(n, 1) * CycConst::zeta(n, -1) == CycConst(n, Rat(1)));
    }
    CycConst a = Rat(3) * CycConst::zeta(4, 1) * CycConst::tau(4) * CycConst::tau(4);
    CHECK(a.to_string() == "3*zeta4^1*tau^2");
    CHECK(a.divided_by_tau().tau_degree() == 1);
    CHECK(CycConst::zeta(2, 1) == CycConst(2, Rat(-1)));
    CHECK(CycConst::zeta(3, 1).lifted(6) == CycConst::zeta(6, 2));
}
