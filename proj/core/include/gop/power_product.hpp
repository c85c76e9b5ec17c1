#pragma once

#include "gop/ratfunc.hpp"

#include <string>
#include <vector>

namespace gop {

/// coefficient * tag * prod p_i^{s_i} with monic irreducible p_i. The tag is
/// an opaque name for an undetermined non-zero constant ("" when absent).
struct PowerProduct {
    std::string constant_tag;
    Rat coefficient = 1;
    std::vector<std::pair<Poly, Rat>> factors; ///< canonical order, s != 0

    /// Sorts, merges repeated bases and drops zero exponents.
    void normalize();
    std::string to_string() const;
    friend bool operator==(const PowerProduct& a, const PowerProduct& b)
    {
        return a.constant_tag == b.constant_tag && a.coefficient == b.coefficient && a.factors == b.factors;
    }
};

inline constexpr const char* kDeltaTag = "delta";

RatFunc pp_log_derivative(const PowerProduct& p);
PowerProduct pp_mul(const PowerProduct& p, const PowerProduct& q);
PowerProduct pp_inverse(const PowerProduct& p);
PowerProduct pp_pow(const PowerProduct& p, const Rat& e);
bool pp_is_rational(const PowerProduct& p);
/// The value as a rational function (tag ignored); requires pp_is_rational.
RatFunc pp_to_ratfunc(const PowerProduct& p);
/// Exact factorization of a non-zero rational function.
PowerProduct pp_from_ratfunc(const RatFunc& f);

} // namespace gop
