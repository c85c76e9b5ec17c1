// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include "corpus.hpp"

#include "gop/factor.hpp"
#include "gop/galochkin.hpp"
#include "gop/guess.hpp"
#include "gop/kovacic.hpp"
#include "gop/local.hpp"
#include "gop/nga.hpp"
#include "gop/order1.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gop;
using namespace gop::testing;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

const RatFunc z = RatFunc::z();

Verdict ore_round_trips()
{
    Verdict v;
    Gen g(101);
    for (int i = 0; i < 500 && v.pass; ++i) {
        DiffOp l = g.diffop(3, 3), r = g.diffop(3, 3);
        RightDivision qr = op_rdiv(l, r);
        v.require(op_mul(qr.quotient, r) + qr.remainder == l, "division identity, pair " + std::to_string(i));
        v.require(qr.remainder.order() < r.order(), "remainder order, pair " + std::to_string(i));
    }
    for (int i = 0; i < 200 && v.pass; ++i) {
        DiffOp a = g.diffop(3, 3), b = g.diffop(3, 3), c = g.diffop(3, 3);
        v.require(op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c)), "associativity, triple " + std::to_string(i));
    }
    if (v.pass)
        v.detail = "500 divisions, 200 associativity triples";
    return v;
}

Verdict factorization_identity()
{
    Verdict v;
    const DiffOp D = DiffOp::D();
    const DiffOp d2 = op_mul(D, D);
    for (long lambda : {0L, 1L, 5L}) {
        const RatFunc u = RatFunc(1) / (z + RatFunc(lambda));
        const DiffOp plus = DiffOp::first_order(-u), minus = DiffOp::first_order(u);
        v.require(op_mul(plus, minus) == d2, "(D + u)(D - u) != D^2 at lambda " + std::to_string(lambda));
        // The reversed order differs by -2/(z + lambda)^2.
        v.require(op_mul(minus, plus) - d2 == DiffOp(RatFunc(-2) * u * u),
                  "(D - u)(D + u) - D^2 != -2u^2 at lambda " + std::to_string(lambda));
    }
    if (v.pass)
        v.detail = "(D + u)(D - u) = D^2; (D - u)(D + u) = D^2 - 2/(z+l)^2 for l in {0,1,5}";
    return v;
}

Verdict galochkin_oracle()
{
    Verdict v;
    Gen g(103);
    for (int i = 0; i < 10 && v.pass; ++i) {
        auto data = g.g_data(3, 4);
        CompanionSystem cs = companion(DiffOp::first_order(g_function(data)));
        auto it = iterate_A(cs, 15);
        for (unsigned n = 1; n <= 15; ++n)
            v.require(it[n - 1](0, 0) == closed_form_A(data, n), "closed form, operator " + std::to_string(i));
        GalochkinReport r = denominator_sequence(cs, 31);
        for (std::size_t k = 0; k + 1 < r.D.size(); ++k)
            v.require(r.D[k + 1] % r.D[k] == 0, "D_k does not divide D_{k+1}, operator " + std::to_string(i));
    }
    GalochkinReport half = denominator_sequence(companion(DiffOp::first_order(g_function({{Rat(1), make_rat(1, 2)}}))), 3);
    v.require(half.D[2] == 16, "D_3 = " + to_string(half.D[2]) + " for s = 1/2");
    if (v.pass)
        v.detail = "10 operators, n <= 15, k <= 30; D_3 = 16";
    return v;
}

std::vector<Rat> exps(const IndicialData& d)
{
    std::vector<Rat> out;
    for (const auto& [r, m] : d.exponents.roots)
        out.insert(out.end(), static_cast<std::size_t>(m), r);
    return out;
}

Verdict local_analysis()
{
    Verdict v;
    FuchsReport gr = is_fuchsian(gauss(make_rat(1, 2), make_rat(1, 2), Rat(1)));
    v.require(gr.is_fuchsian && gr.places.size() == 3, "Gauss places");
    if (v.pass) {
        v.require(exps(gr.places[0]) == std::vector<Rat>{0, 0}, "Gauss exponents at 0");
        v.require(exps(gr.places[1]) == std::vector<Rat>{0, 0}, "Gauss exponents at 1");
        v.require(exps(gr.places[2]) == std::vector<Rat>{make_rat(1, 2), make_rat(1, 2)}, "Gauss exponents at infinity");
    }
    IndicialData e = indicial_at(euler(make_rat(1, 3), make_rat(2, 3)), Place::finite(Poly::x()));
    v.require(exps(e) == std::vector<Rat>{make_rat(1, 3), make_rat(2, 3)}, "Euler exponents");
    std::size_t monic2 = 0;
    const auto corpus = fuchsian_corpus();
    for (const auto& [name, l] : corpus) {
        v.require(is_fuchsian(l).is_fuchsian, name + " not fuchsian");
        v.require(fuchs_relation_check(l), "Fuchs relation fails on " + name);
        if (l.order() == 2) {
            ++monic2;
            v.require(residue_exponent_identity(l.monic()), "residue identity fails on " + name);
        }
    }
    if (v.pass)
        v.detail = std::to_string(corpus.size()) + " corpus operators, " + std::to_string(monic2) + " of order 2";
    return v;
}

/// Simple poles only, a = O(1/z), residue num/den' constant modulo every
/// irreducible factor of the denominator.
bool brute_force_g(const RatFunc& a)
{
    if (a.is_zero())
        return true;
    if (a.num().degree() >= a.den().degree())
        return false;
    const Poly dd = a.den().derivative();
    for (const auto& [p, m] : poly_factor(a.den()).factors) {
        if (m > 1)
            return false;
        const Poly res = (a.num() * inverse_mod(dd % p, p)) % p;
        if (res.degree() > 0)
            return false;
    }
    return true;
}

Verdict order1_oracle()
{
    Verdict v;
    Gen g(105);
    int accepted = 0;
    for (int i = 0; i < 100 && v.pass; ++i) {
        Order1Sample s = mixed_order1_sample(g);
        Order1Verdict c = classify_order1(s.a);
        v.require(brute_force_g(s.a) == s.expected, "oracle disagrees with construction on " + s.a.to_string());
        v.require(c.is_g_operator == brute_force_g(s.a), "verdict mismatch on " + s.a.to_string());
        if (c.is_g_operator) {
            ++accepted;
            v.require(c.solution && pp_log_derivative(*c.solution) == s.a, "log-derivative of " + s.a.to_string());
        }
    }
    if (v.pass)
        v.detail = "100 samples, " + std::to_string(accepted) + " accepted";
    return v;
}

Verdict inhomogeneous()
{
    Verdict v;
    const RatFunc a = RatFunc(make_rat(1, 2)) / z;
    InhomResult r = solve_inhomogeneous(a, RatFunc(1));
    v.require(r.rationality_flag, "flag false for a = 1/(2z), b = 1");
    v.require(r.witness && *r.witness == RatFunc(2) * z, "witness is not 2z");
    if (r.witness)
        v.require(r.witness->derivative() - a * *r.witness - RatFunc(1) == RatFunc(0), "witness fails f' - af - b = 0");
    InhomResult s = solve_inhomogeneous(RatFunc(0), RatFunc(1) / z);
    v.require(!s.rationality_flag && !s.witness, "flag true for a = 0, b = 1/z");
    if (v.pass)
        v.detail = "witness 2z; 1/z has no rational antiderivative";
    return v;
}

Verdict theorem2()
{
    Verdict v;
    const DiffOp D = DiffOp::D();
    Theorem2Verdict p = classify_theorem2(op_mul(D, D) + DiffOp({RatFunc(0), RatFunc(1) / z}));
    v.require(p.kind == OutcomeKind::PrimitiveForm && p.primitive, "D^2 + (1/z)D not PrimitiveForm");
    if (p.primitive) {
        v.require(p.primitive->g.factors.empty() && p.primitive->g.coefficient == 1, "g != 1");
        v.require(p.primitive->h.to_string() == "z^(-1)", "h = " + p.primitive->h.to_string());
    }
    const DiffOp eu = euler(make_rat(1, 3), make_rat(2, 3));
    Theorem2Verdict e = classify_theorem2(eu);
    v.require(e.kovacic_case == 1 && e.case1 && case1_certificate(e.normal.r, *e.case1), "Euler Case 1 certificate");
    v.require(e.algebraic && e.algebraic->basis.size() == 2, "Euler algebraic basis missing");
    if (e.algebraic && e.algebraic->basis.size() == 2) {
        v.require(e.algebraic->basis[0].to_string() == "z^(1/3)" && e.algebraic->basis[1].to_string() == "z^(2/3)",
                  "Euler basis");
        for (const auto& y : e.algebraic->basis)
            v.require(annihilates(eu, y), "basis element does not solve the Euler operator");
    }
    Gen g(107);
    for (int i = 0; i < 50 && v.pass; ++i) {
        DiffOp l = synthesized_product(g);
        Theorem2Verdict t = classify_theorem2(l);
        v.require(t.kind == OutcomeKind::PrimitiveForm && t.primitive, "not PrimitiveForm: " + l.to_string());
        if (t.primitive)
            v.require(op_rdiv(l, t.primitive->right_factor).remainder.is_zero(), "non-zero remainder: " + l.to_string());
    }
    if (v.pass)
        v.detail = "paper example, Euler basis, 50 synthesized products";
    return v;
}

TruncSeries geometric(const Rat& q, std::size_t n)
{
    std::vector<Rat> c(n);
    Rat p = 1;
    for (auto& x : c) {
        x = p;
        p *= q;
    }
    return TruncSeries::from_coeffs(std::move(c));
}

Verdict nga()
{
    Verdict v;
    const CycConst one(1, Rat(1));
    NGAExpr e{{NGATerm::make(make_rat(1, 2), 0, one, geometric(Rat(1), 50)),
               NGATerm::make(Rat(0), 1, one, geometric(Rat(2), 50))}};
    SplitResult s = holonomy_split(e);
    v.require(s.components.size() == 2, "expected two components");
    const DiffOp want_log({RatFunc(-2), RatFunc(Poly::from_ints({1, -2}))});
    const DiffOp want_half({RatFunc(-1), RatFunc(Poly::from_ints({1, -1}))});
    if (s.components.size() == 2) {
        const auto& lg = s.components[0];
        const auto& hf = s.components[1];
        v.require(lg.alpha == 0 && lg.j == 1 && lg.series.coeffs == geometric(Rat(2), 50).coeffs, "log component");
        v.require(hf.alpha == make_rat(1, 2) && hf.j == 0 && hf.series.coeffs == geometric(Rat(1), 50).coeffs,
                  "z^(1/2) component");
        GuessResult gl = guess_ode(lg.series, 1, 1, 10), gh = guess_ode(hf.series, 1, 1, 10);
        v.require(gl.found && *gl.op == want_log && gl.overdetermination >= 10, "guess for 1/(1-2z)");
        v.require(gh.found && *gh.op == want_half && gh.overdetermination >= 10, "guess for 1/(1-z)");
    }
    Gen g(108);
    const std::vector<long> dens{1, 2, 3, 4, 6};
    for (int i = 0; i < 100 && v.pass; ++i) {
        NGAExpr r;
        const int terms = static_cast<int>(g.integer(1, 4));
        for (int t = 0; t < terms; ++t) {
            const long den = dens[static_cast<std::size_t>(g.integer(0, 4))];
            const unsigned level = static_cast<unsigned>(dens[static_cast<std::size_t>(g.integer(0, 4))]);
            CycConst c = g.nonzero_rational() * CycConst::zeta(level, g.integer(0, static_cast<long>(level) - 1));
            if (g.coin(30))
                c = c + g.rational() * CycConst::tau(level);
            std::vector<Rat> coeffs(40);
            for (auto& x : coeffs)
                x = g.rational(9, 5);
            r.terms.push_back(NGATerm::make(make_rat(g.integer(0, 2 * den), den), static_cast<unsigned>(g.integer(0, 2)),
                                            c, TruncSeries::from_coeffs(std::move(coeffs))));
        }
        v.require(nga_equivalent(reassemble(holonomy_split(r)), r), "reassembly, expression " + std::to_string(i));
    }
    if (v.pass)
        v.detail = "split recovered, (1-z)D-1 and (1-2z)D-2 guessed, 100 reassemblies";
    return v;
}

std::string capture(const std::string& cmd)
{
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    ::pclose(pipe);
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict cli_determinism()
{
    Verdict v;
    const std::string exe = GOP_EXECUTABLE, golden = GOP_GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"analyze_gauss.json", "analyze 'z*(1-z)*D^2 + (1-2*z)*D - 1/4'"},
        {"kovacic_primitive.json", "kovacic 'D^2 + (1/z)*D'"},
        {"galochkin_half.json", "galochkin 'D - 1/(2*(z-1))' --k 10"},
    };
    for (const auto& [file, args] : cases) {
        const std::string cmd = "'" + exe + "' " + args + " --json";
        const std::string a = capture(cmd), b = capture(cmd), want = slurp(golden + "/" + file);
        v.require(!a.empty(), file + ": no output");
        v.require(a == b, file + ": runs differ");
        v.require(a == want, file + ": differs from golden");
    }
    if (v.pass)
        v.detail = "3 golden reports byte-identical across two runs";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"ore round-trips", ore_round_trips},
        {"factorization identity", factorization_identity},
        {"galochkin oracle", galochkin_oracle},
        {"local analysis", local_analysis},
        {"order-1 classification", order1_oracle},
        {"inhomogeneous equation", inhomogeneous},
        {"kovacic / theorem 2", theorem2},
        {"nga split and guess", nga},
        {"cli determinism", cli_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failures += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
