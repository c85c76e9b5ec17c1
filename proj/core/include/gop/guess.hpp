#pragma once

#include "gop/diffop.hpp"

#include <vector>

namespace gop {

struct GuessResult {
    bool found = false;
    std::optional<DiffOp> op;
    /// Equations minus rank of the linear system for the returned shape (or
    /// for the largest shape tried when nothing was found).
    std::size_t overdetermination = 0;
    unsigned order = 0;
    unsigned degree = 0;
};

/// Searches an operator sum c_{i,k} z^k D^i (i <= max_order, k <= max_degree)
/// annihilating s through its truncation, shapes by increasing (order,
/// degree). Throws DomainError when the truncation is below
/// (max_order + 1)(max_degree + 1) + margin.
GuessResult guess_ode(const TruncSeries& s, unsigned max_order, unsigned max_degree, unsigned margin);

struct GrowthReport {
    std::vector<Int> d;          ///< d_n = lcm of denominators of a_0..a_n
    std::vector<Rat> max_abs;    ///< max |a_k| for k <= n
    Rat denominator_slope;       ///< least-squares slope of log2 d_n (whole range)
    Rat height_slope;            ///< same for the running max of heights max(|p_k|, q_k)
    Rat first_half_slope;        ///< slope of log2 d_n over the first half
    Rat second_half_slope;       ///< and over the second half
    bool superlinear = false;    ///< second-half slope >= 6/5 of the first
};

GrowthReport g_growth_diagnostic(const TruncSeries& s);

} // namespace gop
