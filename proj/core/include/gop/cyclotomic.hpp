#pragma once

#include "gop/poly.hpp"

#include <string>
#include <vector>

namespace gop {

/// N-th cyclotomic polynomial (cached).
const Poly& cyclotomic_polynomial(unsigned n);

/// Element of Q(zeta_N)[tau], tau a formal symbol for 2 pi i. tau_coeffs[m]
/// is the coefficient of tau^m, a polynomial in x = zeta_N reduced mod Phi_N.
class CycConst {
public:
    CycConst() = default;
    explicit CycConst(unsigned level);
    CycConst(unsigned level, const Rat& c);

    static CycConst zeta(unsigned level, long k);
    static CycConst tau(unsigned level);

    unsigned level() const { return level_; }
    const std::vector<Poly>& tau_coeffs() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    /// Highest tau power (-1 for zero).
    int tau_degree() const { return static_cast<int>(t_.size()) - 1; }
    /// Lift to level m, a multiple of level().
    CycConst lifted(unsigned m) const;
    /// Inverse of an element free of tau; throws DomainError otherwise.
    CycConst inverse() const;
    /// Exact division by tau; throws unless the tau^0 part vanishes.
    CycConst divided_by_tau() const;
    /// zeta -> zeta^-1, tau -> -tau.
    CycConst conjugated() const;

    std::string to_string() const;

    friend CycConst operator+(const CycConst& a, const CycConst& b);
    friend CycConst operator-(const CycConst& a, const CycConst& b);
    friend CycConst operator*(const CycConst& a, const CycConst& b);
    friend CycConst operator*(const Rat& c, const CycConst& a);
    friend bool operator==(const CycConst& a, const CycConst& b);

private:
    void normalize();
    unsigned level_ = 1;
    std::vector<Poly> t_;
};

/// Level that both operands are lifted to before arithmetic.
unsigned common_level(unsigned a, unsigned b);

} // namespace gop
