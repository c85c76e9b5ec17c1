#pragma once

#include "generators.hpp"

#include <string>
#include <vector>

namespace gop::testing {

struct NamedOp {
    std::string name;
    DiffOp op;
};

/// z(1-z) D^2 + (c - (a+b+1) z) D - ab.
inline DiffOp gauss(const Rat& a, const Rat& b, const Rat& c)
{
    const RatFunc z = RatFunc::z();
    return DiffOp({RatFunc(-a * b), RatFunc(c) - RatFunc(a + b + 1) * z, z * (RatFunc(1) - z)});
}

/// z^2 D^2 + (1 - e1 - e2) z D + e1 e2, exponents e1, e2 at 0.
inline DiffOp euler(const Rat& e1, const Rat& e2)
{
    const RatFunc z = RatFunc::z();
    return DiffOp({RatFunc(e1 * e2), RatFunc(1 - e1 - e2) * z, z * z});
}

/// (1 - z^2) D^2 - 2 z D + nu (nu + 1).
inline DiffOp legendre(const Rat& nu)
{
    const RatFunc z = RatFunc::z();
    return DiffOp({RatFunc(nu * (nu + 1)), RatFunc(-2) * z, RatFunc(1) - z * z});
}

/// Fuchsian operators with rational exponents everywhere.
inline std::vector<NamedOp> fuchsian_corpus()
{
    std::vector<NamedOp> out;
    out.push_back({"D", DiffOp::D()});
    out.push_back({"D^2", op_mul(DiffOp::D(), DiffOp::D())});
    out.push_back({"gauss(1/2,1/2,1)", gauss(Rat(1, 2), Rat(1, 2), Rat(1))});
    out.push_back({"gauss(1/3,2/3,1/2)", gauss(Rat(1, 3), Rat(2, 3), Rat(1, 2))});
    out.push_back({"gauss(1,1,2)", gauss(Rat(1), Rat(1), Rat(2))});
    out.push_back({"gauss(-1/4,3/4,5/3)", gauss(Rat(-1, 4), Rat(3, 4), Rat(5, 3))});
    out.push_back({"euler(1/3,2/3)", euler(Rat(1, 3), Rat(2, 3))});
    out.push_back({"euler(1/4,3/4)", euler(Rat(1, 4), Rat(3, 4))});
    out.push_back({"euler(0,0)", euler(Rat(0), Rat(0))});
    out.push_back({"euler(-1,2)", euler(Rat(-1), Rat(2))});
    out.push_back({"legendre(1/2)", legendre(Rat(1, 2))});
    out.push_back({"legendre(2)", legendre(Rat(2))});
    Gen g(kSeed + 4);
    for (int i = 0; i < 12; ++i) {
        const int n = 1 + static_cast<int>(g.integer(1, 2));
        DiffOp l(RatFunc(1));
        for (int k = 0; k < n; ++k)
            l = op_mul(l, DiffOp::first_order(g_function(g.g_data())));
        out.push_back({"product" + std::to_string(i), l});
    }
    return out;
}

/// (D - b'/b)(D - a) with a = sum s/(z - lambda) and b a product of powers
/// of linear factors.
inline DiffOp synthesized_product(Gen& g)
{
    RatFunc a = g_function(g.g_data(2, 3));
    RatFunc b(Rat(g.nonzero_rational(3, 1)));
    for (const auto& p : g.points(2, 4))
        b *= RatFunc(Poly::linear(p)).pow(static_cast<int>(g.coin() ? g.integer(1, 2) : -g.integer(1, 2)));
    return op_mul(DiffOp::first_order(b.derivative() / b), DiffOp::first_order(a));
}

struct Order1Sample {
    RatFunc a;
    bool expected; ///< D - a is an order-1 G-operator
};

/// a = P + sum c/(z - l) + sum d/(z - m)^2 + (e z + f)/(z^2 + 2), with the
/// verdict read off the construction: no polynomial part, no double pole,
/// f = 0 (residues e/2 +- f/(2 sqrt(-2)) rational only then).
inline Order1Sample mixed_order1_sample(Gen& g)
{
    auto pts = g.points(4);
    RatFunc a;
    bool ok = true;
    if (g.coin(25)) {
        a += RatFunc(g.nonzero_poly(1));
        ok = false;
    }
    for (std::size_t i = 0; i < 2; ++i)
        if (g.coin(70))
            a += RatFunc(Poly(g.nonzero_rational()), Poly::linear(pts[i]));
    for (std::size_t i = 2; i < 4; ++i)
        if (g.coin(30)) {
            a += RatFunc(Poly(g.nonzero_rational()), Poly::linear(pts[i]).pow(2));
            ok = false;
        }
    if (g.coin(30)) {
        const Rat e = g.rational(), f = g.coin() ? Rat(0) : g.nonzero_rational();
        if (e != 0 || f != 0) {
            a += RatFunc(Poly({f, e}), Poly::from_ints({2, 0, 1}));
            ok = ok && f == 0;
        }
    }
    return {a, ok};
}

/// Operator texts exercising the parser.
inline std::vector<std::string> operator_texts()
{
    return {
        "D^2 + (1/z)*D",
        "z^2*D^2 + 2/9",
        "z*(1-z)*D^2 + (1-2*z)*D - 1/4",
        "D - 1/(2*(z-1))",
        "D^2 - D",
        "D^2 - z",
        "(z^2+1)*D^3 - 3/4*z*D + 7",
        "-D + z^-2",
        "D*z*D",
        "(D - 1/z)*(D + 1/z)",
        "(D + 1/(z+5))*(D - 1/(z+5))",
        "1/2*D^2 + 2/(3*z)*D - 5/(z^2-4)",
        "-(-z)^3*D^0",
        "((z))^2*D - 1",
        "D^3 - 2*D^2 + D",
    };
}

} // namespace gop::testing
