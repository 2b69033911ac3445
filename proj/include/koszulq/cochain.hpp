#ifndef KOSZULQ_COCHAIN_HPP
#define KOSZULQ_COCHAIN_HPP

/**
 * @file cochain.hpp
 * @brief Elements of Λ ⊗ Λ^! in PBW coordinates, and the differential
 *        restricted to one bidegree as an exact sparse matrix.
 *
 * Bidegree convention: homological degree i is the dual word length, internal
 * degree j is the sum of the degrees of both tensor factors, so
 * dim C^{i,j} = dim Λ^!_i · dim Λ_{j-i} and the differential lands in
 * C^{i+1,j+2}.
 */

#include "ncpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace koszulq {

template <class S>
struct Cochain {
    using Key = std::pair<Word, Word>; // (algebra word, dual word)
    std::map<Key, S> terms;

    Cochain() = default;
    static Cochain wedge(Word alg, Word dual, S c = S(1)) {
        Cochain z;
        if (!c.is_zero()) z.terms.emplace(Key{std::move(alg), std::move(dual)}, std::move(c));
        return z;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Word& mu, const S& c) {
        if (c.is_zero()) return;
        Key k{w, mu};
        auto it = terms.find(k);
        if (it == terms.end()) { terms.emplace(std::move(k), c); return; }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    Cochain& operator+=(const Cochain& o) {
        for (auto& [k, c] : o.terms) add_term(k.first, k.second, c);
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        for (auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend bool operator==(const Cochain& a, const Cochain& b) { return a.terms == b.terms; }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

    Cochain scaled(const S& s) const {
        Cochain r;
        if (s.is_zero()) return r;
        for (auto& [k, c] : terms) {
            S p = c * s;
            if (!p.is_zero()) r.terms.emplace(k, std::move(p));
        }
        return r;
    }

    std::string str(const GeneratorSet& alg_gens, const GeneratorSet& dual_gens) const {
        if (terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [k, c] : terms) {
            if (!first) s += " + ";
            first = false;
            s += "(" + scalar_str(c) + ")*" + alg_gens.word_str(k.first) + "|" +
                 dual_gens.word_str(k.second);
        }
        return s;
    }
};

template <class S>
struct GradedMatrix {
    int i = 0, j = 0; // source bidegree; the map lands in (i+1, j+2)
    int n_rows = 0, n_cols = 0;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<std::pair<int, S>>> columns; // row-sorted sparse columns

    bool is_zero() const {
        for (auto& col : columns)
            if (!col.empty()) return false;
        return true;
    }

    S entry(int r, int c) const {
        for (auto& [rr, v] : columns[c])
            if (rr == r) return v;
        return S(0);
    }

    template <class F>
    GradedMatrix<std::decay_t<decltype(std::declval<F>()(std::declval<S>()))>>
    map_entries(F&& f) const {
        using T = std::decay_t<decltype(f(std::declval<S>()))>;
        GradedMatrix<T> out;
        out.i = i;
        out.j = j;
        out.n_rows = n_rows;
        out.n_cols = n_cols;
        out.row_labels = row_labels;
        out.col_labels = col_labels;
        out.columns.resize(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (auto& [r, v] : columns[c]) {
                T w = f(v);
                if (!w.is_zero()) out.columns[c].emplace_back(r, std::move(w));
            }
        return out;
    }

    // dense column vectors (for small-matrix field algebra)
    std::vector<S> dense_column(int c) const {
        std::vector<S> v(n_rows, S(0));
        for (auto& [r, val] : columns[c]) v[r] = val;
        return v;
    }
};

// y = M x for a coordinate vector x over the source basis
template <class S>
std::vector<S> apply_matrix(const GradedMatrix<S>& m, const std::vector<S>& x) {
    std::vector<S> y(m.n_rows, S(0));
    for (int c = 0; c < m.n_cols; ++c) {
        if (x[c].is_zero()) continue;
        for (auto& [r, v] : m.columns[c]) y[r] += v * x[c];
    }
    return y;
}

} // namespace koszulq

#endif
