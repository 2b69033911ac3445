#ifndef KOSZULQ_NCPOLY_HPP
#define KOSZULQ_NCPOLY_HPP

/**
 * @file ncpoly.hpp
 * @brief Noncommutative graded algebras presented by quadratic relations,
 *        with PBW-ordered rewriting.
 *
 * A rule set is derived from the relations by echelonizing the degree-two
 * coefficient matrix with pivots on the lexicographically largest words, so
 * every non-normal length-2 word rewrites to a combination of normal ones.
 * Words are normal when no adjacent pair is a rule left-hand side.
 */

#include "errors.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace koszulq {

using Gen = std::uint8_t;
using Word = std::vector<Gen>;

// length first, then lexicographic; for degree-1 generators this is deg-lex
struct LenLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct GeneratorSet {
    std::vector<std::string> names;
    std::vector<int> degrees;

    GeneratorSet() = default;
    GeneratorSet(std::vector<std::string> n, std::vector<int> d)
        : names(std::move(n)), degrees(std::move(d)) {
        if (names.size() != degrees.size())
            throw std::invalid_argument("GeneratorSet: names/degrees size mismatch");
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (degrees[i] <= 0) throw std::invalid_argument("GeneratorSet: degree must be positive");
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw std::invalid_argument("GeneratorSet: duplicate name " + names[i]);
        }
    }
    static GeneratorSet degree_one(std::vector<std::string> n) {
        std::vector<int> d(n.size(), 1);
        return GeneratorSet(std::move(n), std::move(d));
    }

    int size() const { return static_cast<int>(names.size()); }
    int find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == name) return i;
        return -1;
    }
    int word_degree(const Word& w) const {
        int d = 0;
        for (Gen g : w) d += degrees[g];
        return d;
    }
    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ".";
            s += names[w[i]];
        }
        return s;
    }
};

template <class S>
class NcPoly {
public:
    using Terms = std::map<Word, S, LenLexLess>;
    Terms terms;

    NcPoly() = default;
    static NcPoly monomial(Word w, S c = S(1)) {
        NcPoly p;
        if (!c.is_zero()) p.terms.emplace(std::move(w), std::move(c));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const S& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) { terms.emplace(w, c); return; }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (auto& [w, c] : o.terms) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (auto& [w, c] : o.terms) add_term(w, -c);
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(const NcPoly& a) {
        NcPoly r;
        for (auto& [w, c] : a.terms) r.terms.emplace(w, -c);
        return r;
    }
    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    NcPoly scaled(const S& s) const {
        NcPoly r;
        if (s.is_zero()) return r;
        for (auto& [w, c] : terms) {
            S p = c * s;
            if (!p.is_zero()) r.terms.emplace(w, std::move(p));
        }
        return r;
    }

    S coeff(const Word& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? S(0) : it->second;
    }

    std::string str(const GeneratorSet& gens) const {
        if (terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [w, c] : terms) {
            std::string cs = scalar_str(c);
            bool neg = cs.size() && cs[0] == '-';
            if (first) {
                if (neg) { s += "-"; cs = cs.substr(1); }
                first = false;
            } else {
                s += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            bool needs_paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            if (w.empty()) {
                s += needs_paren ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                s += gens.word_str(w);
            } else {
                s += (needs_paren ? "(" + cs + ")" : cs) + "*" + gens.word_str(w);
            }
        }
        return s;
    }
};

// Column order for degree-2 elimination: out-of-order and square words first
// (descending lex within each class), strictly ascending words last.  Pivoting
// in this order orients every derived rule toward smaller-index-first words.
inline std::vector<Word> degree2_pivot_order(int n) {
    std::vector<Word> cols;
    for (int a = n - 1; a >= 0; --a)
        for (int b = n - 1; b >= 0; --b)
            if (a >= b) cols.push_back({static_cast<Gen>(a), static_cast<Gen>(b)});
    for (int a = n - 1; a >= 0; --a)
        for (int b = n - 1; b >= 0; --b)
            if (a < b) cols.push_back({static_cast<Gen>(a), static_cast<Gen>(b)});
    return cols;
}

struct ConfluenceReport {
    struct Failure {
        Word overlap;           // the ambiguous length-3 word
        std::string difference; // normal form of (left reduction - right reduction)
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

template <class S>
class QuadraticAlgebra {
public:
    GeneratorSet gens;
    std::vector<NcPoly<S>> relations;

    // rewriting step bound per normal_form call; generous for any confluent
    // quadratic system
    long step_bound = 1000000;

    QuadraticAlgebra() = default;

    QuadraticAlgebra(GeneratorSet g, std::vector<NcPoly<S>> rels)
        : gens(std::move(g)), relations(std::move(rels)) {
        derive_rules();
    }

    // Constructor-time confluence gate: rejects non-PBW presentations eagerly.
    static QuadraticAlgebra checked(GeneratorSet g, std::vector<NcPoly<S>> rels,
                                    const std::string& what = "quadratic algebra") {
        QuadraticAlgebra alg(std::move(g), std::move(rels));
        ConfluenceReport rep = alg.confluence_check();
        if (!rep.ok())
            throw NonTerminating(what + ": rule set is not confluent (" +
                                 std::to_string(rep.failures.size()) + " bad overlaps, first " +
                                 alg.gens.word_str(rep.failures.front().overlap) + ")");
        return alg;
    }

    int n_generators() const { return gens.size(); }

    bool has_rule(Gen a, Gen b) const { return rules_.count(key(a, b)) != 0; }
    const NcPoly<S>& rule(Gen a, Gen b) const { return rules_.at(key(a, b)); }
    const std::map<int, NcPoly<S>>& rule_table() const { return rules_; }

    // square-zero generators rewrite their square to 0 (exterior-type duals)
    bool is_square_zero(Gen g) const {
        auto it = rules_.find(key(g, g));
        return it != rules_.end() && it->second.is_zero();
    }

    NcPoly<S> normal_form(const NcPoly<S>& p) const {
        NcPoly<S> result, pending = p;
        long steps = 0;
        while (!pending.is_zero()) {
            auto node = pending.terms.extract(pending.terms.begin());
            const Word& w = node.key();
            const S& c = node.mapped();
            int pos = first_reducible(w);
            if (pos < 0) {
                result.add_term(w, c);
                continue;
            }
            if (++steps > step_bound)
                throw NonTerminating("normal_form: step bound exceeded");
            const NcPoly<S>& r = rules_.at(key(w[pos], w[pos + 1]));
            for (auto& [mid, mc] : r.terms) {
                Word w2;
                w2.reserve(w.size());
                w2.insert(w2.end(), w.begin(), w.begin() + pos);
                w2.insert(w2.end(), mid.begin(), mid.end());
                w2.insert(w2.end(), w.begin() + pos + 2, w.end());
                pending.add_term(w2, c * mc);
            }
        }
        return result;
    }

    NcPoly<S> multiply(const NcPoly<S>& u, const NcPoly<S>& v) const {
        NcPoly<S> prod;
        for (auto& [wu, cu] : u.terms)
            for (auto& [wv, cv] : v.terms) {
                Word w = wu;
                w.insert(w.end(), wv.begin(), wv.end());
                prod.add_term(w, cu * cv);
            }
        return normal_form(prod);
    }

    // Resolve every length-3 word that is reducible in two ways; failures are
    // data (an empty report means the presentation is PBW).
    ConfluenceReport confluence_check() const {
        ConfluenceReport rep;
        for (auto& [k1, r1] : rules_) {
            Gen x = static_cast<Gen>(k1 >> 8), y = static_cast<Gen>(k1 & 0xff);
            for (Gen z = 0; z < static_cast<Gen>(gens.size()); ++z) {
                if (!has_rule(y, z)) continue;
                // reduce xyz two ways: (xy)z and x(yz)
                NcPoly<S> left, right;
                for (auto& [w, c] : r1.terms) {
                    Word e = w;
                    e.push_back(z);
                    left.add_term(e, c);
                }
                for (auto& [w, c] : rule(y, z).terms) {
                    Word e;
                    e.push_back(x);
                    e.insert(e.end(), w.begin(), w.end());
                    right.add_term(e, c);
                }
                NcPoly<S> diff = normal_form(left) - normal_form(right);
                if (!diff.is_zero())
                    rep.failures.push_back({Word{x, y, z}, diff.str(gens)});
            }
        }
        return rep;
    }

    // Normal words of internal degree m, lexicographic in the PBW order.
    const std::vector<Word>& graded_basis(int m) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->basis.find(m);
        if (it != cache_->basis.end()) return it->second;
        std::vector<Word> out;
        Word w;
        enumerate(m, w, out);
        return cache_->basis.emplace(m, std::move(out)).first->second;
    }

    std::vector<long long> hilbert_coeffs(int maxdeg) const {
        std::vector<long long> h;
        for (int m = 0; m <= maxdeg; ++m)
            h.push_back(static_cast<long long>(graded_basis(m).size()));
        return h;
    }

private:
    std::map<int, NcPoly<S>> rules_;
    // memoized bases; shared across copies, which is safe because the rule
    // set is immutable after construction
    struct BasisCache {
        std::mutex mu;
        std::map<int, std::vector<Word>> basis;
    };
    std::shared_ptr<BasisCache> cache_ = std::make_shared<BasisCache>();

    static int key(Gen a, Gen b) { return (static_cast<int>(a) << 8) | b; }

    int first_reducible(const Word& w) const {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (has_rule(w[i], w[i + 1])) return static_cast<int>(i);
        return -1;
    }

    void enumerate(int remaining, Word& w, std::vector<Word>& out) const {
        if (remaining == 0) {
            out.push_back(w);
            return;
        }
        for (Gen g = 0; g < static_cast<Gen>(gens.size()); ++g) {
            if (gens.degrees[g] > remaining) continue;
            if (!w.empty() && has_rule(w.back(), g)) continue;
            w.push_back(g);
            enumerate(remaining - gens.degrees[g], w, out);
            w.pop_back();
        }
    }

    // Echelonize the relation span over the fraction field with pivots on the
    // lexicographically largest length-2 words; each pivot row becomes a rule.
    void derive_rules() {
        using FF = typename scalar_traits<S>::fraction_field;
        const int n = gens.size();
        for (auto& r : relations)
            for (auto& [w, c] : r.terms)
                if (w.size() != 2)
                    throw std::invalid_argument("QuadraticAlgebra: relation term " + gens.word_str(w) +
                                                " is not a length-2 word");
        std::vector<Word> cols = degree2_pivot_order(n);
        std::vector<int> col_index(n * n);
        for (int c = 0; c < n * n; ++c) col_index[cols[c][0] * n + cols[c][1]] = c;
        auto col_of = [&](Gen a, Gen b) { return col_index[a * n + b]; };
        auto word_of = [&](int col) { return cols[col]; };
        std::vector<std::vector<FF>> m;
        for (auto& r : relations) {
            std::vector<FF> row(n * n, FF(0));
            for (auto& [w, c] : r.terms) row[col_of(w[0], w[1])] = scalar_traits<S>::to_fraction(c);
            m.push_back(std::move(row));
        }
        // reduced row echelon form
        std::size_t rank = 0;
        for (int col = 0; col < n * n && rank < m.size(); ++col) {
            std::size_t piv = rank;
            while (piv < m.size() && m[piv][col].is_zero()) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[rank], m[piv]);
            FF inv = m[rank][col].inverse();
            for (auto& v : m[rank]) v = v * inv;
            for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
                if (r2 == rank || m[r2][col].is_zero()) continue;
                FF f = m[r2][col];
                for (int c2 = col; c2 < n * n; ++c2) m[r2][c2] -= f * m[rank][c2];
            }
            ++rank;
        }
        m.resize(rank);
        for (auto& row : m) {
            int pivot = -1;
            for (int c2 = 0; c2 < n * n; ++c2)
                if (!row[c2].is_zero()) { pivot = c2; break; }
            if (pivot < 0) continue;
            Word lhs = word_of(pivot);
            NcPoly<S> rhs;
            for (int c2 = pivot + 1; c2 < n * n; ++c2)
                if (!row[c2].is_zero())
                    rhs.add_term(word_of(c2), scalar_traits<S>::from_fraction(-row[c2]));
            rules_.emplace(key(lhs[0], lhs[1]), std::move(rhs));
        }
    }
};

} // namespace koszulq

#endif
