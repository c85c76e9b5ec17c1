#pragma once

#include "gop/ratfunc.hpp"

#include <vector>

namespace gop {

/// K = Q[x]/(p) for a monic irreducible p. Elements are polynomials of
/// degree < deg p.
class ResidueField {
public:
    explicit ResidueField(Poly modulus);

    const Poly& modulus() const { return mod_; }
    Poly reduce(const Poly& a) const { return a % mod_; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % mod_; }
    Poly inv(const Poly& a) const { return inverse_mod(a, mod_); }
    /// Image of a rational function with no pole at the place.
    Poly image(const RatFunc& f) const;

    /// First n Taylor coefficients of q(theta + t), theta the class of x.
    std::vector<Poly> taylor(const Poly& q, std::size_t n) const;

    struct Laurent {
        int valuation = 0;          ///< exponent of the first stored term
        std::vector<Poly> coeffs;   ///< coefficients of t^valuation, t^(valuation+1), ...
    };
    /// Laurent expansion of f at theta in t = z - theta, n terms from the
    /// valuation on. f must be non-zero.
    Laurent laurent(const RatFunc& f, std::size_t n) const;
    /// Coefficient of t^k in the expansion of f (zero allowed).
    Poly laurent_coeff(const RatFunc& f, int k) const;

private:
    Poly mod_;
};

/// Rational number represented by a constant element, if it is one.
std::optional<Rat> as_rational(const Poly& element);

} // namespace gop
