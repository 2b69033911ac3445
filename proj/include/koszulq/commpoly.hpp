#ifndef KOSZULQ_COMMPOLY_HPP
#define KOSZULQ_COMMPOLY_HPP

/**
 * @file commpoly.hpp
 * @brief Sparse commutative polynomials over Q (exponent-vector keyed) and
 *        exterior monomials as index bitmasks.
 */

#include "ncpoly.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace koszulq {

using ExpVec = std::vector<int>;

class CommPoly {
public:
    std::map<ExpVec, Rational> terms; // no zero coefficients

    CommPoly() = default;
    static CommPoly constant(int n, const Rational& c) {
        CommPoly p;
        if (!c.is_zero()) p.terms.emplace(ExpVec(n, 0), c);
        return p;
    }
    static CommPoly variable(int n, int i) {
        ExpVec e(n, 0);
        e[i] = 1;
        CommPoly p;
        p.terms.emplace(std::move(e), Rational(1));
        return p;
    }
    static CommPoly monomial(ExpVec e, const Rational& c) {
        CommPoly p;
        if (!c.is_zero()) p.terms.emplace(std::move(e), c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) { terms.emplace(e, c); return; }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    CommPoly& operator+=(const CommPoly& o) {
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    CommPoly& operator-=(const CommPoly& o) {
        for (auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator-(const CommPoly& a) {
        CommPoly r;
        for (auto& [e, c] : a.terms) r.terms.emplace(e, -c);
        return r;
    }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        CommPoly r;
        for (auto& [e1, c1] : a.terms)
            for (auto& [e2, c2] : b.terms) {
                ExpVec e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    CommPoly scaled(const Rational& s) const {
        CommPoly r;
        if (s.is_zero()) return r;
        for (auto& [e, c] : terms) r.terms.emplace(e, c * s);
        return r;
    }

    CommPoly partial(int var) const {
        CommPoly r;
        for (auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            ExpVec e2 = e;
            --e2[var];
            r.add_term(e2, c * Rational(e[var]));
        }
        return r;
    }

    int degree() const {
        int d = -1;
        for (auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }
    bool is_homogeneous(int d) const {
        for (auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            if (t != d) return false;
        }
        return true;
    }

    // sorted word form: x^(2,1) -> [0,0,1]
    static Word exp_to_word(const ExpVec& e) {
        Word w;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int t = 0; t < e[i]; ++t) w.push_back(static_cast<Gen>(i));
        return w;
    }
    static ExpVec word_to_exp(const Word& w, int n) {
        ExpVec e(n, 0);
        for (Gen g : w) ++e[g];
        return e;
    }

    std::string str(const GeneratorSet& vars) const {
        NcPoly<Rational> p;
        for (auto& [e, c] : terms) p.add_term(exp_to_word(e), c);
        return p.str(vars);
    }
};

// Commutativize a noncommutative polynomial (sort each word).
inline CommPoly commutativize(const NcPoly<Rational>& p, int n) {
    CommPoly r;
    for (auto& [w, c] : p.terms) r.add_term(CommPoly::word_to_exp(w, n), c);
    return r;
}

// ---- exterior algebra on index bitmasks ----

using ExtMask = std::uint32_t;

inline int ext_size(ExtMask m) { return std::popcount(m); }

// sign of moving generator i into the ascending product of `mask`
inline int sign_below(ExtMask mask, int i) {
    return (std::popcount(mask & ((ExtMask(1) << i) - 1)) % 2) ? -1 : 1;
}

// sign collected when concatenating two ascending products (0 if they meet)
inline int wedge_sign(ExtMask a, ExtMask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (int i = 0; i < 32; ++i)
        if (b & (ExtMask(1) << i)) inversions += std::popcount(a >> (i + 1));
    return (inversions % 2) ? -1 : 1;
}

struct ExtElem {
    std::map<ExtMask, Rational> terms;

    ExtElem() = default;
    static ExtElem basis(ExtMask m, const Rational& c = Rational(1)) {
        ExtElem e;
        if (!c.is_zero()) e.terms.emplace(m, c);
        return e;
    }
    bool is_zero() const { return terms.empty(); }
    void add_term(ExtMask m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) { terms.emplace(m, c); return; }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    ExtElem& operator+=(const ExtElem& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    ExtElem& operator-=(const ExtElem& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.terms == b.terms; }
    ExtElem scaled(const Rational& s) const {
        ExtElem r;
        if (s.is_zero()) return r;
        for (auto& [m, c] : terms) r.terms.emplace(m, c * s);
        return r;
    }
    friend ExtElem wedge(const ExtElem& a, const ExtElem& b) {
        ExtElem r;
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) {
                int s = wedge_sign(ma, mb);
                if (s) r.add_term(ma | mb, ca * cb * Rational(s));
            }
        return r;
    }
};

} // namespace koszulq

#endif
