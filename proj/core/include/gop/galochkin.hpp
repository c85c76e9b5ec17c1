#pragma once

#include "gop/diffop.hpp"

#include <utility>
#include <vector>

namespace gop {

struct GalochkinReport {
    unsigned k_max = 0;
    std::vector<Int> D;     ///< D_1 .. D_{k_max}
    Rat slope_tail;         ///< least-squares slope of log2 D_k over the last half
    Poly T;                 ///< monic lcm of the entry denominators of A_1
};

/// A_1 .. A_N with A_{n+1} = A_n A_1 + A_n'.
std::vector<RatMatrix> iterate_A(const CompanionSystem& a1, unsigned n);

GalochkinReport denominator_sequence(const CompanionSystem& a1, unsigned k_max);

/// n! sum over n_1 + ... + n_p = n of prod (-s_j)_{n_j} / n_j! (lambda_j - z)^{-n_j}.
/// Throws DomainError on repeated lambda.
RatFunc closed_form_A(const std::vector<std::pair<Rat, Rat>>& lambda_s, unsigned n);

} // namespace gop
