#include "gop/linalg.hpp"

namespace gop {

Echelon rref(RatRows m, std::size_t ncols)
{
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[row]);
        Rat inv = 1 / m[row][col];
        for (std::size_t c = col; c < ncols; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rat f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (m[row][c] != 0)
                    m[r][c] -= f * m[row][c];
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rows = std::move(m);
    return e;
}

std::vector<RatVector> nullspace(const RatRows& m, std::size_t ncols)
{
    Echelon e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatRows& m, const RatVector& b, std::size_t ncols)
{
    RatRows aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    Echelon e = rref(std::move(aug), ncols + 1);
    if (!e.pivots.empty() && e.pivots.back() == ncols)
        return std::nullopt;
    RatVector x(ncols, Rat(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.rows[r][ncols];
    return x;
}

} // namespace gop
