#include "gop/matrix.hpp"

#include <algorithm>

namespace gop {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = RatFunc(1);
    return m;
}

RatMatrix RatMatrix::derivative() const
{
    RatMatrix m(n_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        m.e_[k] = e_[k].derivative();
    return m;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const RatFunc& f) { return f.is_zero(); });
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    if (a.n_ != b.n_)
        throw DomainError("matrix size mismatch");
    RatMatrix m(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.n_ != b.n_)
        throw DomainError("matrix size mismatch");
    const std::size_t n = a.n_;
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero())
                    acc += a(i, k) * b(k, j);
            m(i, j) = acc;
        }
    return m;
}

RatMatrix operator*(const RatFunc& c, const RatMatrix& a)
{
    RatMatrix m(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        m.e_[k] = c * a.e_[k];
    return m;
}

} // namespace gop
