#pragma once

#include "gop/poly.hpp"

#include <vector>

namespace gop {

struct Factorization {
    Rat lead;
    /// Monic irreducible factors with multiplicities, canonical order.
    std::vector<std::pair<Poly, int>> factors;

    Poly expand() const;
};

/// Complete factorization over Q. Throws DomainError for p = 0.
Factorization poly_factor(const Poly& p);

/// Yun's squarefree decomposition of monic(p): pairs (squarefree part, i).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Irreducible factors over Z of a squarefree primitive integer polynomial
/// with positive leading coefficient (Zassenhaus).
std::vector<Poly> factor_squarefree_integer(const Poly& f);

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots; ///< ascending
    bool all_rational = false;
};

/// Throws DomainError for p = 0.
RationalRoots rational_roots(const Poly& p);

} // namespace gop
