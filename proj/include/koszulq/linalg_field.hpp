#ifndef KOSZULQ_LINALG_FIELD_HPP
#define KOSZULQ_LINALG_FIELD_HPP

/**
 * @file linalg_field.hpp
 * @brief Dense exact elimination over a field (Q or Q(q)); small matrices
 *        only — relation spaces, kernels and coset reductions.
 */

#include <vector>

namespace koszulq {

template <class F>
using DenseMat = std::vector<std::vector<F>>; // row-major

// Reduced row echelon form in place; returns the rank and records pivot columns.
template <class F>
int rref(DenseMat<F>& m, std::vector<int>& pivot_cols) {
    pivot_cols.clear();
    if (m.empty()) return 0;
    const int ncols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        F inv = m[rank][col].inverse();
        for (int c = col; c < ncols; ++c) m[rank][c] = m[rank][c] * inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            F f = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    m.resize(rank);
    return rank;
}

// Kernel of the linear map with matrix rows acting on column vectors of size
// ncols; returns one vector per free column, carrying 1 in that column.
template <class F>
DenseMat<F> kernel_basis(DenseMat<F> m, int ncols) {
    std::vector<int> pivots;
    int rank = rref(m, pivots);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    DenseMat<F> kernel;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(ncols, F(0));
        v[free] = F(1);
        for (int r = 0; r < rank; ++r) v[pivots[r]] = -m[r][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace koszulq

#endif
