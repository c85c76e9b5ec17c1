#include "corpus.hpp"

#include "gop/local.hpp"

#include <doctest.h>

using namespace gop;
using namespace gop::testing;

namespace {

std::vector<Rat> exponents(const IndicialData& d)
{
    std::vector<Rat> out;
    for (const auto& [r, m] : d.exponents.roots)
        for (int i = 0; i < m; ++i)
            out.push_back(r);
    return out;
}

std::vector<Rat> sorted(std::vector<Rat> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

const IndicialData& at(const FuchsReport& r, const Place& p)
{
    for (const auto& d : r.places)
        if (d.place == p)
            return d;
    FAIL("place missing: " << p.to_string());
    return r.places.front();
}

} // namespace

TEST_CASE("Gauss operator exponents follow the classical table")
{
    Gen g(31);
    for (int i = 0; i < 25; ++i) {
        const Rat a = g.rational(3, 4), b = g.rational(3, 4);
        Rat c = g.rational(3, 4);
        if (c == 0)
            c = 1;
        if (c == a + b + 1 && a * b == 0)
            continue; // z = 1 would be an ordinary point
        FuchsReport r = is_fuchsian(gauss(a, b, c));
        CHECK(r.is_fuchsian);
        CHECK(exponents(at(r, Place::finite(Poly::x()))) == sorted({Rat(0), 1 - c}));
        CHECK(exponents(at(r, Place::finite(Poly::linear(1)))) == sorted({Rat(0), c - a - b}));
        CHECK(exponents(at(r, Place::infinity())) == sorted({a, b}));
        CHECK(fuchs_relation_check(gauss(a, b, c)));
    }
}

TEST_CASE("spec operators")
{
    FuchsReport r = is_fuchsian(gauss(make_rat(1, 2), make_rat(1, 2), Rat(1)));
    REQUIRE(r.places.size() == 3);
    CHECK(exponents(r.places[0]) == std::vector<Rat>{0, 0});
    CHECK(exponents(r.places[1]) == std::vector<Rat>{0, 0});
    CHECK(exponents(r.places[2]) == std::vector<Rat>{make_rat(1, 2), make_rat(1, 2)});
    CHECK(r.places[2].place.is_infinity());

    FuchsReport e = is_fuchsian(euler(make_rat(1, 3), make_rat(2, 3)));
    CHECK(exponents(at(e, Place::finite(Poly::x()))) == std::vector<Rat>{make_rat(1, 3), make_rat(2, 3)});
    CHECK(exponents(at(e, Place::infinity())) == std::vector<Rat>{make_rat(-2, 3), make_rat(-1, 3)});
}

TEST_CASE("Euler indicial polynomial oracle")
{
    Gen g(32);
    for (int i = 0; i < 30; ++i) {
        const Rat e1 = g.rational(4, 5), e2 = g.rational(4, 5);
        IndicialData d = indicial_at(euler(e1, e2), Place::finite(Poly::x()));
        REQUIRE(d.rational_coefficients);
        CHECK(d.indicial == Poly::linear(e1) * Poly::linear(e2));
        CHECK(residue_exponent_identity(euler(e1, e2)));
    }
}

TEST_CASE("irregular places are reported")
{
    DiffOp l = op_mul(DiffOp::D(), DiffOp::D()) - DiffOp::D();
    FuchsReport r = is_fuchsian(l);
    CHECK_FALSE(r.is_fuchsian);
    REQUIRE(r.offending.size() == 1);
    CHECK(r.offending[0].place.is_infinity());
    CHECK(r.offending[0].k == 1);
    CHECK(r.offending[0].actual == 2);
    CHECK_THROWS_AS(indicial_at(l, Place::infinity()), IrregularPlaceError);

    // Double pole of the D^0 coefficient is fine, a triple one is not.
    const RatFunc z = RatFunc::z();
    CHECK(is_fuchsian(DiffOp({RatFunc(1) / (z * z), RatFunc(0), RatFunc(1)})).is_fuchsian);
    FuchsReport bad = is_fuchsian(DiffOp({RatFunc(1) / (z * z * z), RatFunc(0), RatFunc(1)}));
    CHECK_FALSE(bad.is_fuchsian);
    CHECK(bad.offending[0].k == 2);
    CHECK(bad.offending[0].actual == 3);
    CHECK_THROWS_AS(fuchs_relation_check(l), DomainError);
}

TEST_CASE("places of higher degree")
{
    const Poly q = Poly::from_ints({2, 0, 1});
    // (z^2 + 2) D - z: residue 1/2 at both conjugate roots.
    DiffOp l({RatFunc(Poly::from_ints({0, -1})), RatFunc(q)});
    IndicialData d = indicial_at(l, Place::finite(q));
    CHECK(d.rational_coefficients);
    CHECK(exponents(d) == std::vector<Rat>{make_rat(1, 2)});
    CHECK(fuchs_relation_check(l));
    // (z^2 + 2) D - 1: residues +-1/(2 sqrt(-2)) are not rational.
    DiffOp m({RatFunc(-1), RatFunc(q)});
    IndicialData e = indicial_at(m, Place::finite(q));
    CHECK_FALSE(e.rational_coefficients);
    CHECK(e.indicial_residue.size() == 2);
}

TEST_CASE("Fuchs relation and residue identity on the corpus")
{
    for (const auto& [name, l] : fuchsian_corpus()) {
        CAPTURE(name);
        FuchsReport r = is_fuchsian(l);
        CHECK(r.is_fuchsian);
        CHECK(fuchs_relation_check(l));
        if (l.order() == 2)
            CHECK(residue_exponent_identity(l));
    }
}

TEST_CASE("exponents are invariant under left scaling")
{
    Gen g(33);
    for (const auto& [name, l] : fuchsian_corpus()) {
        CAPTURE(name);
        RatFunc f = g.ratfunc(2, 2);
        if (f.is_zero())
            f = RatFunc(3);
        FuchsReport a = is_fuchsian(l), b = is_fuchsian(l.scaled(f));
        REQUIRE(a.places.size() == b.places.size());
        for (std::size_t i = 0; i < a.places.size(); ++i)
            CHECK(exponents(a.places[i]) == exponents(b.places[i]));
    }
}

TEST_CASE("singular places include infinity")
{
    auto p = singular_places(DiffOp::D());
    REQUIRE(p.size() == 1);
    CHECK(p[0].is_infinity());
    auto q = singular_places(gauss(Rat(1), Rat(1), Rat(1)));
    CHECK(q.size() == 3);
}
