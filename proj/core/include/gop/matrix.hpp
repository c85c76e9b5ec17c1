#pragma once

#include "gop/ratfunc.hpp"

#include <vector>

namespace gop {

/// Square matrix over Q(z).
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t n) : n_(n), e_(n * n) {}
    static RatMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    RatFunc& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    const std::vector<RatFunc>& entries() const { return e_; }

    RatMatrix derivative() const;
    bool is_zero() const;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatFunc& c, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    std::size_t n_ = 0;
    std::vector<RatFunc> e_;
};

} // namespace gop
