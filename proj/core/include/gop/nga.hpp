#pragma once

#include "gop/cyclotomic.hpp"
#include "gop/series.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace gop {

/// coeff * z^alpha * log(z)^j * series, 0 <= alpha < 1, integer series offset.
struct NGATerm {
    Rat alpha;
    unsigned j = 0;
    CycConst coeff;
    TruncSeries series;

    /// Folds floor(alpha) into the series offset.
    static NGATerm make(const Rat& alpha, unsigned j, CycConst coeff, TruncSeries series);
};

/// Finite sum of terms; (alpha, j) may repeat.
struct NGAExpr {
    std::vector<NGATerm> terms;

    /// lcm of the alpha denominators and the coefficient levels.
    unsigned level() const;
};

/// z^alpha -> zeta^(alpha N) z^alpha, log z -> log z + tau (direction +1);
/// direction -1 applies the inverse.
NGAExpr monodromy_apply(const NGAExpr& e, int direction = 1);

using Slot = std::pair<Rat, unsigned>;

/// Dense per-(alpha, j) content over a common window
/// z^offset .. z^(offset + length - 1).
struct SlotForm {
    unsigned level = 1;
    long offset = 0;
    std::size_t length = 0;
    std::map<Slot, std::vector<CycConst>> slots; ///< zero slots omitted
};

SlotForm to_slots(const NGAExpr& e);
/// Same function on the common window of both inputs.
bool nga_equivalent(const NGAExpr& a, const NGAExpr& b);

/// f_{alpha,j} = sum over (i, m) of zeta_N^i tau^m series.
struct SplitComponent {
    Rat alpha;
    unsigned j;
    unsigned zeta_power;
    unsigned tau_power;
    TruncSeries series;
};

struct SplitResult {
    unsigned level = 1;
    std::vector<SplitComponent> components; ///< sorted by (alpha, j, tau, zeta)
};

/// Recovers the components f_{alpha,j} through twisted monodromy
/// differences and a block-triangular solve. The common window must hold
/// at least min_truncation coefficients.
SplitResult holonomy_split(const NGAExpr& e, std::size_t min_truncation = 8);

NGAExpr reassemble(const SplitResult& s);

/// Parses "3*zeta4^1*tau^2 - 1/2*tau + 1" at the given level (levels named
/// in the text are lifted to it).
CycConst parse_cyc_const(std::string_view text, unsigned level);

} // namespace gop
