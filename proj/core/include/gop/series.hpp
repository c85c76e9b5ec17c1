#pragma once

#include "gop/ratfunc.hpp"

#include <vector>

namespace gop {

/// sum_k coeffs[k] z^(offset + k) + O(z^(offset + truncation)).
struct TruncSeries {
    Rat offset = 0;
    std::vector<Rat> coeffs;

    std::size_t truncation() const { return coeffs.size(); }
    bool is_zero() const;
    /// Coefficient of z^(offset + k); zero past the truncation is not
    /// distinguishable and is rejected.
    const Rat& at(std::size_t k) const { return coeffs.at(k); }

    static TruncSeries from_coeffs(std::vector<Rat> c, Rat offset = 0);
};

/// Laurent expansion of f at z = 0 with n coefficients from its valuation
/// (offset = valuation; zero f gives offset 0 and n zeros).
TruncSeries laurent_at_zero(const RatFunc& f, std::size_t n);

/// Power series of a polynomial-free quotient num/den with den(0) != 0.
std::vector<Rat> series_quotient(const Poly& num, const Poly& den, std::size_t n);

} // namespace gop
