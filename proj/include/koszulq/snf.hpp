#ifndef KOSZULQ_SNF_HPP
#define KOSZULQ_SNF_HPP

/**
 * @file snf.hpp
 * @brief Smith normal form over the principal ideal domain Q[q^±1].
 *
 * Entries are cleared to ordinary polynomials by unit powers of q; invariant
 * factors are reported as canonical associates (monic, nonzero constant
 * term).  Row transformations can be accumulated so that A = U·D·V with U
 * unimodular, which is what kernel-lattice saturation needs.
 */

#include "laurent.hpp"
#include "linalg_field.hpp"

#include <vector>

namespace koszulq {

struct SnfResult {
    std::vector<Laurent> factors; // nonzero diagonal, normalized, d1 | d2 | ...
    int rank = 0;
    std::vector<Laurent> nonunit_factors() const {
        std::vector<Laurent> out;
        for (auto& f : factors)
            if (!f.is_one()) out.push_back(f);
        return out;
    }
};

namespace detail {

// U is maintained so that original = U * current holds under row operations
// (column operations on the worked matrix do not touch U; they only
// contribute to the untracked right factor V).
struct UTracker {
    DenseMat<Laurent>* u = nullptr;
    int n = 0;
    void init(int rows) {
        if (!u) return;
        n = rows;
        u->assign(rows, std::vector<Laurent>(rows, Laurent(0)));
        for (int i = 0; i < rows; ++i) (*u)[i][i] = Laurent(1);
    }
    // after row_i -= f * row_j:  col_j += f * col_i
    void row_sub(int i, int j, const Laurent& f) {
        if (!u) return;
        for (int r = 0; r < n; ++r) (*u)[r][j] += f * (*u)[r][i];
    }
    void row_swap(int i, int j) {
        if (!u) return;
        for (int r = 0; r < n; ++r) std::swap((*u)[r][i], (*u)[r][j]);
    }
    // after row_i *= s (s a unit):  col_i *= 1/s, recorded here as col_mul
    void col_mul(int i, const Laurent& s) {
        if (!u) return;
        for (int r = 0; r < n; ++r) (*u)[r][i] *= s;
    }
};

} // namespace detail

/// Dense Smith normal form; if u_out is given, fills it with a unimodular U
/// such that input = U * D * V for some unimodular V (V is not returned).
inline SnfResult smith_normal_form(DenseMat<Laurent> a, DenseMat<Laurent>* u_out = nullptr) {
    SnfResult res;
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    detail::UTracker ut{u_out};
    ut.init(m);
    if (m == 0 || n == 0) return res;

    // clear each row to ordinary polynomials by a unit power of q
    for (int r = 0; r < m; ++r) {
        int mn = 0;
        bool any = false;
        for (auto& v : a[r])
            if (!v.is_zero()) { mn = any ? std::min(mn, v.min_exp()) : v.min_exp(); any = true; }
        if (any && mn != 0) {
            for (auto& v : a[r]) v = v.shifted(-mn); // row *= q^{-mn}
            ut.col_mul(r, Laurent::q_power(mn));
        }
    }

    auto nonzero_in_block = [&](int t, int& br, int& bc) {
        bool found = false;
        int best = 0;
        for (int r = t; r < m; ++r)
            for (int c = t; c < n; ++c) {
                if (a[r][c].is_zero()) continue;
                int deg = a[r][c].degree_span();
                if (!found || deg < best) { found = true; best = deg; br = r; bc = c; }
            }
        return found;
    };

    int t = 0;
    while (t < std::min(m, n)) {
        int br, bc;
        if (!nonzero_in_block(t, br, bc)) break;
        if (br != t) { std::swap(a[br], a[t]); ut.row_swap(br, t); }
        if (bc != t)
            for (int r = 0; r < m; ++r) std::swap(a[r][bc], a[r][t]);
        for (;;) {
            bool again = false;
            // clear the pivot column
            for (int r = t + 1; r < m; ++r) {
                if (a[r][t].is_zero()) continue;
                Laurent quot, rem;
                poly_divmod(a[r][t], a[t][t], quot, rem);
                if (!quot.is_zero()) {
                    for (int c = t; c < n; ++c) a[r][c] -= quot * a[t][c];
                    ut.row_sub(r, t, quot);
                }
                if (!rem.is_zero()) { std::swap(a[r], a[t]); ut.row_swap(r, t); again = true; break; }
            }
            if (again) continue;
            // clear the pivot row
            for (int c = t + 1; c < n; ++c) {
                if (a[t][c].is_zero()) continue;
                Laurent quot, rem;
                poly_divmod(a[t][c], a[t][t], quot, rem);
                if (!quot.is_zero())
                    for (int r = t; r < m; ++r) a[r][c] -= quot * a[r][t];
                if (!rem.is_zero()) {
                    for (int r = 0; r < m; ++r) std::swap(a[r][c], a[r][t]);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            // enforce divisibility of the remaining block by the pivot
            bool fixed = false;
            for (int r = t + 1; r < m && !fixed; ++r)
                for (int c = t + 1; c < n && !fixed; ++c) {
                    if (a[r][c].is_zero()) continue;
                    Laurent quot, rem;
                    poly_divmod(a[r][c], a[t][t], quot, rem);
                    if (!rem.is_zero()) {
                        for (int cc = t; cc < n; ++cc) a[t][cc] += a[r][cc]; // row_t += row_r
                        ut.row_sub(t, r, Laurent(Rational(-1)));
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        // normalize the pivot to its canonical associate (unit scaling)
        Laurent norm = normalize_laurent(a[t][t]);
        if (norm != a[t][t]) {
            Laurent unit = exact_div(a[t][t], norm);
            for (int c = t; c < n; ++c) a[t][c] = exact_div(a[t][c], unit); // row_t /= unit
            ut.col_mul(t, unit);
        }
        ++t;
    }
    res.rank = t;
    for (int k = 0; k < t; ++k) res.factors.push_back(normalize_laurent(a[k][k]));
    return res;
}

inline SnfResult smith_normal_form(const GradedMatrix<Laurent>& m,
                                   DenseMat<Laurent>* u_out = nullptr) {
    DenseMat<Laurent> a(m.n_rows, std::vector<Laurent>(m.n_cols, Laurent(0)));
    for (int c = 0; c < m.n_cols; ++c)
        for (auto& [r, v] : m.columns[c]) a[r][c] = v;
    return smith_normal_form(std::move(a), u_out);
}

} // namespace koszulq

#endif
