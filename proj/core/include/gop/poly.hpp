#pragma once

#include "gop/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gop {

/// Dense univariate polynomial over Q. Index i holds the coefficient of z^i;
/// the highest stored coefficient is non-zero unless the polynomial is zero
/// (empty storage).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    explicit Poly(const Rat& constant);

    static Poly x();
    static Poly monomial(const Rat& c, std::size_t k);
    /// z - root
    static Poly linear(const Rat& root);
    static Poly from_ints(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rat lead() const;

    Poly derivative() const;
    Rat eval(const Rat& at) const;
    Poly compose(const Poly& inner) const;
    Poly monic() const;
    Poly pow(unsigned n) const;
    /// z^n * p(1/z); requires n >= degree.
    Poly reversed(std::size_t n) const;
    /// Largest k with z^k dividing p (0 for the zero polynomial).
    std::size_t low_order() const;
    /// p / z^k, dropping the low k coefficients (exact when k <= low_order()).
    Poly shifted_down(std::size_t k) const;
    Poly shifted_up(std::size_t k) const;

    /// lcm of the coefficient denominators.
    Int denominator_lcm() const;
    /// Integer primitive part with positive leading coefficient, as a
    /// polynomial with integral coefficients.
    Poly primitive() const;
    /// Number of non-zero coefficients.
    std::size_t term_count() const;

    std::string to_string(std::string_view var = "z") const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Quotient and remainder; throws DomainError for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws DomainError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g; ///< monic gcd
    Poly s; ///< s*a + t*b = g
    Poly t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws DomainError when not coprime.
Poly inverse_mod(const Poly& a, const Poly& m);

/// Canonical place ordering: by degree, then linear factors by root
/// ascending (generally: lexicographic on the negated coefficients from the
/// constant term upward).
bool canonical_less(const Poly& a, const Poly& b);

} // namespace gop
