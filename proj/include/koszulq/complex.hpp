#ifndef KOSZULQ_COMPLEX_HPP
#define KOSZULQ_COMPLEX_HPP

/**
 * @file complex.hpp
 * @brief A bigraded cocomplex presented by basis enumerators and a
 *        per-basis-element differential; matrices are assembled lazily and
 *        memoized.  Assembly for distinct bidegrees is independent, so the
 *        bidegree scheduler can run them in parallel.
 */

#include "cochain.hpp"
#include "errors.hpp"
#include "weights.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

namespace koszulq {

template <class S>
class KoszulComplex {
public:
    GeneratorSet alg_gens, dual_gens;
    std::function<std::vector<Word>(int)> alg_basis;  // internal degree -> words
    std::function<std::vector<Word>(int)> dual_basis; // homological degree -> words
    std::function<Cochain<S>(const Word&, const Word&)> apply;
    int top_i = 0; // highest homological degree with a nonzero dual space
    std::optional<WeightVector> weights;
    std::string name;

    using BasisPair = std::pair<Word, Word>;

    // column order: dual word outer, algebra word inner, each in basis order
    std::vector<BasisPair> basis(int i, int j) const {
        std::vector<BasisPair> out;
        if (i < 0 || j < i) return out;
        auto duals = dual_basis(i);
        auto algs = alg_basis(j - i);
        out.reserve(duals.size() * algs.size());
        for (auto& mu : duals)
            for (auto& w : algs) out.emplace_back(w, mu);
        return out;
    }

    int dim(int i, int j) const {
        if (i < 0 || j < i) return 0;
        return static_cast<int>(dual_basis(i).size()) * static_cast<int>(alg_basis(j - i).size());
    }

    std::string label(const BasisPair& p) const {
        return alg_gens.word_str(p.first) + "|" + dual_gens.word_str(p.second);
    }

    int weight_of(const BasisPair& p) const {
        return weights ? weights->pair_weight(p.first, p.second) : 0;
    }

    // The differential C^{i,j} -> C^{i+1,j+2}, assembled and cached.
    const GradedMatrix<S>& d(int i, int j) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->mats.find({i, j});
            if (it != cache_->mats.end()) return it->second;
        }
        GradedMatrix<S> m = assemble(i, j);
        std::lock_guard<std::mutex> lock(cache_->mu);
        return cache_->mats.emplace(std::make_pair(i, j), std::move(m)).first->second;
    }

    GradedMatrix<S> assemble(int i, int j) const {
        GradedMatrix<S> m;
        m.i = i;
        m.j = j;
        auto src = basis(i, j);
        auto dst = basis(i + 1, j + 2);
        m.n_cols = static_cast<int>(src.size());
        m.n_rows = static_cast<int>(dst.size());
        std::map<BasisPair, int> index;
        for (int r = 0; r < m.n_rows; ++r) index.emplace(dst[r], r);
        for (auto& p : src) m.col_labels.push_back(label(p));
        for (auto& p : dst) m.row_labels.push_back(label(p));
        m.columns.resize(src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            Cochain<S> out = apply(src[c].first, src[c].second);
            for (auto& [k, v] : out.terms) {
                auto it = index.find(k);
                if (it == index.end())
                    throw std::logic_error(name + ": differential left the expected bidegree at " +
                                           label(src[c]) + " -> " + label(k));
                m.columns[c].emplace_back(it->second, v);
            }
            std::sort(m.columns[c].begin(), m.columns[c].end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
        }
        return m;
    }

    std::vector<int> col_weights(int i, int j) const {
        std::vector<int> w;
        for (auto& p : basis(i, j)) w.push_back(weight_of(p));
        return w;
    }

    // coordinates of a cochain in the basis of C^{i,j}
    std::vector<S> coordinates(const Cochain<S>& z, int i, int j) const {
        auto b = basis(i, j);
        std::map<BasisPair, int> index;
        for (int c = 0; c < static_cast<int>(b.size()); ++c) index.emplace(b[c], c);
        std::vector<S> v(b.size(), S(0));
        for (auto& [k, val] : z.terms) {
            auto it = index.find(k);
            if (it == index.end())
                throw std::invalid_argument(name + ": cochain term outside bidegree (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            v[it->second] = val;
        }
        return v;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, int>, GradedMatrix<S>> mats;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Split a matrix into weight-homogeneous blocks keyed by weight; throws
// NotHomogeneous when an entry connects different weights.
template <class S>
std::map<int, GradedMatrix<S>> weight_decompose(const GradedMatrix<S>& m,
                                                const std::vector<int>& col_weights,
                                                const std::vector<int>& row_weights) {
    std::map<int, GradedMatrix<S>> blocks;
    std::map<int, std::vector<int>> cols_by_w, rows_by_w;
    for (int c = 0; c < m.n_cols; ++c) cols_by_w[col_weights[c]].push_back(c);
    for (int r = 0; r < m.n_rows; ++r) rows_by_w[row_weights[r]].push_back(r);
    for (int c = 0; c < m.n_cols; ++c)
        for (auto& [r, v] : m.columns[c])
            if (row_weights[r] != col_weights[c])
                throw NotHomogeneous("entry " + m.col_labels[c] + " -> " + m.row_labels[r] +
                                     " connects weight " + std::to_string(col_weights[c]) +
                                     " to " + std::to_string(row_weights[r]));
    std::set<int> weights_seen;
    for (auto& [w, cols] : cols_by_w) weights_seen.insert(w);
    for (auto& [w, rows] : rows_by_w) weights_seen.insert(w);
    for (int w : weights_seen) {
        GradedMatrix<S> b;
        b.i = m.i;
        b.j = m.j;
        auto& cols = cols_by_w[w];
        auto& rows = rows_by_w[w];
        std::map<int, int> row_index;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) row_index.emplace(rows[r], r);
        b.n_cols = static_cast<int>(cols.size());
        b.n_rows = static_cast<int>(rows.size());
        for (int c : cols) b.col_labels.push_back(m.col_labels[c]);
        for (int r : rows) b.row_labels.push_back(m.row_labels[r]);
        b.columns.resize(cols.size());
        for (int cc = 0; cc < static_cast<int>(cols.size()); ++cc)
            for (auto& [r, v] : m.columns[cols[cc]])
                b.columns[cc].emplace_back(row_index.at(r), v);
        blocks.emplace(w, std::move(b));
    }
    return blocks;
}

} // namespace koszulq

#endif
