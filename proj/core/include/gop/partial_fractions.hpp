#pragma once

#include "gop/ratfunc.hpp"

#include <vector>

namespace gop {

struct PartialFractionTerm {
    Place place;
    int order;       ///< power of the place polynomial in the denominator
    Poly numerator;  ///< degree < degree of the place
};

struct PartialFractions {
    Poly polynomial;
    /// Sorted by place, then by ascending order.
    std::vector<PartialFractionTerm> terms;

    RatFunc recombine() const;
};

PartialFractions partial_fractions(const RatFunc& f);

} // namespace gop
