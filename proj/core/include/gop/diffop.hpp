#pragma once

#include "gop/matrix.hpp"
#include "gop/series.hpp"

#include <string>
#include <vector>

namespace gop {

/// sum_i coeffs[i] D^i in Q(z)[D], D r = r D + r'.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<RatFunc> coeffs);
    DiffOp(const RatFunc& c);

    static DiffOp D() { return DiffOp(std::vector<RatFunc>{RatFunc(0), RatFunc(1)}); }
    /// D - a
    static DiffOp first_order(const RatFunc& a) { return DiffOp(std::vector<RatFunc>{-a, RatFunc(1)}); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    RatFunc coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(); }
    const RatFunc& leading() const;
    DiffOp monic() const;
    /// Left multiplication by a function (coefficientwise).
    DiffOp scaled(const RatFunc& f) const;

    std::string to_string(std::string_view var = "z") const;

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a) { return a.scaled(RatFunc(-1)); }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<RatFunc> c_;
};

/// Composition (M N) f = M (N f).
DiffOp op_mul(const DiffOp& m, const DiffOp& n);

struct RightDivision {
    DiffOp quotient;
    DiffOp remainder;
};
/// L = Q R + rem with order(rem) < order(R). Throws DomainError for R = 0.
RightDivision op_rdiv(const DiffOp& l, const DiffOp& r);

/// Monic greatest common right divisor.
DiffOp gcrd(const DiffOp& l, const DiffOp& m);

/// Term-wise application. The result keeps the input truncation; its offset
/// is offset(f) + min_i(val_0(a_i) - i).
TruncSeries op_apply(const DiffOp& l, const TruncSeries& f);

struct CompanionSystem {
    RatMatrix A;
};
/// Y' = A Y with Y = (y, y', ..., y^(n-1)). Order-0 input is rejected.
CompanionSystem companion(const DiffOp& l);

/// The operator in w = 1/z: each D_z becomes -w^2 D_w.
DiffOp transport_to_infinity(const DiffOp& l);

} // namespace gop
