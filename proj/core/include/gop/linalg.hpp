#pragma once

#include "gop/rational.hpp"

#include <optional>
#include <vector>

namespace gop {

using RatVector = std::vector<Rat>;
using RatRows = std::vector<RatVector>;

struct Echelon {
    RatRows rows;              ///< reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form of an m x n matrix.
Echelon rref(RatRows m, std::size_t ncols);
/// Basis of {x : M x = 0}, one vector per free column, ascending.
std::vector<RatVector> nullspace(const RatRows& m, std::size_t ncols);
/// Some solution of M x = b, if consistent (free variables set to 0).
std::optional<RatVector> solve(const RatRows& m, const RatVector& b, std::size_t ncols);

} // namespace gop
