#pragma once

#include "gop/local.hpp"
#include "gop/power_product.hpp"

#include <optional>
#include <string>

namespace gop {

struct Order1Verdict {
    bool is_g_operator = false;
    std::optional<PowerProduct> solution;
    std::optional<FuchsReport> failure;
    std::string reason; ///< empty on success
};

/// Classifies D - a.
Order1Verdict classify_order1(const RatFunc& a);

class NotGOperatorError : public DomainError {
public:
    NotGOperatorError(const std::string& what, FuchsReport r)
        : DomainError(what), report(std::move(r)) {}
    FuchsReport report;
};

/// A rational R with R' = a R + b, when one exists (b != 0).
std::optional<RatFunc> rational_solution(const RatFunc& a, const RatFunc& b);

struct InhomResult {
    DiffOp L2;                  ///< (D - b'/b)(D - a)
    PowerProduct g;
    PowerProduct integrand;     ///< b / g
    bool rationality_flag = false;
    std::optional<RatFunc> witness;
};

/// f' = a f + b. Throws DomainError for b = 0 and NotGOperatorError when
/// D - a is not an order-1 G-operator.
InhomResult solve_inhomogeneous(const RatFunc& a, const RatFunc& b);

} // namespace gop
