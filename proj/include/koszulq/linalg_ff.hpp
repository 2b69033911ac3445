#ifndef KOSZULQ_LINALG_FF_HPP
#define KOSZULQ_LINALG_FF_HPP

/**
 * @file linalg_ff.hpp
 * @brief Sparse exact rank computation: ordinary elimination over Q, and
 *        primitive fraction-free elimination over Q[q] (content-stripped
 *        cross-multiplication, no rational-function arithmetic).
 */

#include "cochain.hpp"
#include "laurent.hpp"
#include "ratfunc.hpp"

#include <map>
#include <vector>

namespace koszulq {

enum class PivotStrategy { MinDegree, FirstNonzero };

namespace detail {

using QRow = std::map<int, Rational>;
using LRow = std::map<int, Laurent>;

inline void strip_row(QRow&) {} // nothing to strip over a field

inline void strip_row(LRow& row) {
    if (row.empty()) return;
    Laurent g;
    for (auto& [c, v] : row) g = laurent_gcd(g, v);
    if (!g.is_one() && !g.is_zero())
        for (auto& [c, v] : row) v = exact_div(v, g);
    Rational content;
    int shift = 0;
    bool first = true;
    for (auto& [c, v] : row) {
        content = rat_gcd(content, laurent_content(v));
        shift = first ? v.min_exp() : std::min(shift, v.min_exp());
        first = false;
    }
    for (auto& [c, v] : row) {
        if (!content.is_one()) v = v.scaled(content.inverse());
        if (shift != 0) v = v.shifted(-shift);
    }
}

inline long pivot_cost(const Rational&) { return 0; }
inline long pivot_cost(const Laurent& v) { return v.degree_span(); }

// eliminate column `col` from `target` using `pivot_row`; fraction-free for
// polynomial entries, ordinary for rationals
inline void eliminate(QRow& target, const QRow& pivot_row, int col) {
    Rational f = target.at(col) / pivot_row.at(col);
    for (auto& [c, v] : pivot_row) {
        auto it = target.find(c);
        if (it == target.end()) {
            Rational nv = -f * v;
            if (!nv.is_zero()) target.emplace(c, nv);
        } else {
            it->second -= f * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

inline void eliminate(LRow& target, const LRow& pivot_row, int col) {
    Laurent p = pivot_row.at(col), e = target.at(col);
    // target <- p*target - e*pivot_row
    LRow out;
    for (auto& [c, v] : target) out.emplace(c, v * p);
    for (auto& [c, v] : pivot_row) {
        Laurent sub = v * e;
        auto it = out.find(c);
        if (it == out.end()) {
            if (!sub.is_zero()) out.emplace(c, -sub);
        } else {
            it->second -= sub;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    target = std::move(out);
    strip_row(target);
}

template <class Row>
int sparse_rank(std::vector<Row> rows, PivotStrategy strategy) {
    for (auto& r : rows) strip_row(r);
    int rank = 0;
    std::vector<bool> used(rows.size(), false);
    for (;;) {
        // choose pivot among unused nonzero rows
        int best_row = -1, best_col = -1;
        long best_cost = 0;
        std::size_t best_nnz = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            if (strategy == PivotStrategy::FirstNonzero) {
                best_row = static_cast<int>(r);
                best_col = rows[r].begin()->first;
                break;
            }
            for (auto& [c, v] : rows[r]) {
                long cost = pivot_cost(v);
                if (best_row < 0 || cost < best_cost ||
                    (cost == best_cost && rows[r].size() < best_nnz)) {
                    best_row = static_cast<int>(r);
                    best_col = c;
                    best_cost = cost;
                    best_nnz = rows[r].size();
                }
            }
        }
        if (best_row < 0) break;
        used[best_row] = true;
        ++rank;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            if (rows[r].count(best_col)) eliminate(rows[r], rows[best_row], best_col);
        }
    }
    return rank;
}

template <class S>
std::vector<std::map<int, S>> matrix_rows(const GradedMatrix<S>& m) {
    std::vector<std::map<int, S>> rows(m.n_rows);
    for (int c = 0; c < m.n_cols; ++c)
        for (auto& [r, v] : m.columns[c]) rows[r].emplace(c, v);
    return rows;
}

} // namespace detail

inline int matrix_rank(const GradedMatrix<Rational>& m,
                       PivotStrategy strategy = PivotStrategy::MinDegree) {
    return detail::sparse_rank(detail::matrix_rows(m), strategy);
}

inline int matrix_rank(const GradedMatrix<Laurent>& m,
                       PivotStrategy strategy = PivotStrategy::MinDegree) {
    return detail::sparse_rank(detail::matrix_rows(m), strategy);
}

inline int matrix_rank(const GradedMatrix<RatFunc>& m,
                       PivotStrategy strategy = PivotStrategy::MinDegree) {
    // clear each row's denominators; rank is unchanged
    auto rows = detail::matrix_rows(m);
    std::vector<detail::LRow> cleared(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Laurent l(1);
        for (auto& [c, v] : rows[r]) l = exact_div(l * v.den(), laurent_gcd(l, v.den()));
        for (auto& [c, v] : rows[r]) cleared[r].emplace(c, v.num() * exact_div(l, v.den()));
    }
    return detail::sparse_rank(std::move(cleared), strategy);
}

// rank after specializing q (q = 1 unless another exact value is given)
inline int matrix_rank_at(const GradedMatrix<Laurent>& m, const Rational& q_value = Rational(1),
                          PivotStrategy strategy = PivotStrategy::MinDegree) {
    GradedMatrix<Rational> sp = m.map_entries([&](const Laurent& v) { return v.eval_at(q_value); });
    return matrix_rank(sp, strategy);
}

} // namespace koszulq

#endif
