#pragma once

#include "gop/diffop.hpp"
#include "gop/factor.hpp"

#include <vector>

namespace gop {

struct IndicialData {
    Place place;
    /// Coefficients of the indicial polynomial in rho, each in Q[x]/(p)
    /// (plain rationals at linear places and at infinity).
    std::vector<Poly> indicial_residue;
    /// True when every coefficient is a rational constant.
    bool rational_coefficients = false;
    /// The indicial polynomial over Q; zero unless rational_coefficients.
    Poly indicial;
    /// Rational roots of `indicial` (empty, all_rational = false otherwise).
    RationalRoots exponents;
};

/// Fuchs' bound violated: the coefficient of D^(n-k) in the monic operator
/// has a pole of order `actual` > k.
struct FuchsViolation {
    Place place;
    int k;
    int actual;
};

struct FuchsReport {
    bool is_fuchsian = true;
    std::vector<IndicialData> places;
    std::vector<FuchsViolation> offending;
};

class IrregularPlaceError : public DomainError {
public:
    IrregularPlaceError(const std::string& what, FuchsViolation v)
        : DomainError(what), violation(std::move(v)) {}
    FuchsViolation violation;
};

/// Poles of the monic operator's coefficients, then infinity (always).
std::vector<Place> singular_places(const DiffOp& l);

FuchsReport is_fuchsian(const DiffOp& l);

/// Throws IrregularPlaceError at an irregular place.
IndicialData indicial_at(const DiffOp& l, const Place& place);

/// For monic fuchsian D^2 + pD + q: res_place(p) = 1 - rho1 - rho2 at every
/// finite singular place. Non-fuchsian or order != 2 input is rejected.
bool residue_exponent_identity(const DiffOp& l);

/// Sum of all exponents over the singular places (finite places weighted by
/// degree, infinity included) equals (m - 2) n (n - 1) / 2.
bool fuchs_relation_check(const DiffOp& l);

} // namespace gop
