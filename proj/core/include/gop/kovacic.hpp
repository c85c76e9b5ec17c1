#pragma once

#include "gop/order1.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gop {

/// u'' = r u, equivalent to monic D^2 + pD + q through y = u exp(-1/2 int p).
struct NormalForm {
    RatFunc r;
    RatFunc p;
    /// exp(-1/2 int p) as a power product when D + p/2 is an order-1
    /// G-operator; otherwise the raw half_p is all that is known.
    std::optional<PowerProduct> gauge;
    RatFunc half_p;
};

NormalForm normal_form(const DiffOp& l);

struct PoleInfo {
    Place place;
    int order;
};

struct CaseConditions {
    std::vector<int> feasible;      ///< subset of {1, 2, 3}, ascending
    std::vector<PoleInfo> poles;    ///< finite poles of r, canonical order
    int order_at_infinity;          ///< INT_MAX for r = 0
    bool has(int c) const;
};

CaseConditions case_conditions(const RatFunc& r);

/// u = P exp(int omega) solves u'' = r u.
struct Case1Result {
    RatFunc omega;
    Poly P;
};
std::optional<Case1Result> case1_search(const RatFunc& r);
/// P'' + 2 omega P' + (omega' + omega^2 - r) P = 0.
bool case1_certificate(const RatFunc& r, const Case1Result& c);

/// omega^2 - phi omega + psi = 0 with omega = u'/u for a solution u.
struct Case2Result {
    RatFunc theta;
    Poly P;
    RatFunc phi;
    RatFunc psi;
};
std::optional<Case2Result> case2_search(const RatFunc& r);
/// psi' + phi psi - r phi = 0 (so omega' + omega^2 = r in
/// Q(z)[omega]/(omega^2 - phi omega + psi)) and the quadratic is separable.
bool case2_certificate(const RatFunc& r, const Case2Result& c);

struct Case3Report {
    bool conditions_hold = false;
    std::vector<int> admissible_n;   ///< among 4, 6, 12
    bool moot = false;               ///< Case 1 or 2 already succeeds
    std::vector<std::string> notes;
};
Case3Report case3_detect(const RatFunc& r);

enum class OutcomeKind {
    PrimitiveForm,
    AlgebraicBasis,
    Case3Candidate,
    IrreducibleFullGroup,
    ReducibleNonG,
    LiouvillianNonG,
};
std::string to_string(OutcomeKind k);

struct PrimitiveForm {
    PowerProduct g;
    PowerProduct h;
    DiffOp right_factor;
    DiffOp left_factor;
};

struct AlgebraicBasis {
    /// Two solutions as power products (Case 1), or empty (Case 2).
    std::vector<PowerProduct> basis;
    std::optional<Case2Result> quadratic;
};

struct Theorem2Verdict {
    int kovacic_case = 0;           ///< 1, 2, 3, or 0 for none
    OutcomeKind kind = OutcomeKind::IrreducibleFullGroup;
    NormalForm normal;
    CaseConditions conditions;
    /// Fuchsian with rational exponents everywhere.
    bool g_conditions = false;
    FuchsReport fuchs;
    std::optional<Case1Result> case1;
    std::optional<Case2Result> case2;
    std::optional<PrimitiveForm> primitive;
    std::optional<AlgebraicBasis> algebraic;
    std::optional<Case3Report> case3;
    /// Set when a right factor exists but an order-1 factor is not a
    /// G-operator.
    std::optional<DiffOp> right_factor;
    std::string note;
};

/// Throws DomainError unless order(L) = 2.
Theorem2Verdict classify_theorem2(const DiffOp& l);

/// L y = 0 for y a power product (exact, through the log-derivative).
bool annihilates(const DiffOp& l, const PowerProduct& y);

} // namespace gop
