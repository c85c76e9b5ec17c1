#pragma once

#include "gop/poly.hpp"

#include <string>

namespace gop {

/// Element of Q(z) kept as num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc z() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    /// Value when constant; throws DomainError otherwise.
    Rat constant_value() const;

    RatFunc derivative() const;
    Rat eval(const Rat& at) const;
    /// deg(num) - deg(den); the negated order at infinity.
    int degree() const;
    /// Order of vanishing at infinity (deg den - deg num); large for zero.
    int order_at_infinity() const;
    /// f(1/w) as a function of w.
    RatFunc at_reciprocal() const;
    RatFunc pow(int n) const;
    std::string to_string(std::string_view var = "z") const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, true); }
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RatFunc(Poly num, Poly den, bool /*normalized*/) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

/// A point class of the projective line over Q: a monic irreducible
/// polynomial, or infinity.
class Place {
public:
    static Place finite(Poly p);
    static Place infinity() { return Place(); }

    bool is_infinity() const { return infinite_; }
    const Poly& poly() const { return poly_; }
    int degree() const { return infinite_ ? 1 : poly_.degree(); }
    /// The root when the place is linear.
    Rat root() const;
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b)
    {
        return a.infinite_ == b.infinite_ && a.poly_ == b.poly_;
    }
    /// Finite places in canonical order, infinity last.
    friend bool operator<(const Place& a, const Place& b);

private:
    Place() : infinite_(true) {}
    bool infinite_ = false;
    Poly poly_;
};

/// Multiplicity of the monic irreducible p in the polynomial q (q != 0).
int valuation(const Poly& q, const Poly& p);
/// Order of f at a place (negative for poles); INT_MAX for f = 0.
int order_at(const RatFunc& f, const Place& place);

} // namespace gop
