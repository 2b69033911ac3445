#ifndef KOSZULQ_LAURENT_HPP
#define KOSZULQ_LAURENT_HPP

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in q over the rationals, with the q-integer
 *        helpers, exact division and gcd used throughout the library.
 *
 * Canonical form: a map exponent -> coefficient with no stored zeros.  The
 * canonical associate of a nonzero element is the ordinary polynomial with
 * nonzero constant term and leading coefficient 1; gcds and invariant factors
 * are reported in that form.
 */

#include "errors.hpp"
#include "rational.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace koszulq {

class Laurent {
    std::map<int, Rational> c_; // exponent -> coefficient, no zeros

public:
    Laurent() = default;
    Laurent(int v) { if (v != 0) c_[0] = Rational(v); }
    Laurent(const Rational& v) { if (!v.is_zero()) c_[0] = v; }
    Laurent(const Rational& coeff, int exp) { if (!coeff.is_zero()) c_[exp] = coeff; }

    static Laurent q_power(int e) { return Laurent(Rational(1), e); }

    const std::map<int, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }
    // units of Q[q^±1] are the nonzero rational multiples of powers of q
    bool is_unit() const { return c_.size() == 1; }

    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    int degree_span() const { return c_.empty() ? -1 : max_exp() - min_exp(); }

    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational() : it->second;
    }
    Rational leading_coeff() const { return c_.empty() ? Rational() : c_.rbegin()->second; }

    void add_term(int e, const Rational& v) {
        if (v.is_zero()) return;
        auto it = c_.find(e);
        if (it == c_.end()) { c_.emplace(e, v); return; }
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    // arbitrary total order so Laurent can key ordered containers
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.c_ < b.c_; }

    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (auto& [e, v] : a.c_) r.c_.emplace(e, -v);
        return r;
    }
    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, v] : b.c_) r.add_term(e, v);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, v] : b.c_) r.add_term(e, -v);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [e1, v1] : a.c_)
            for (auto& [e2, v2] : b.c_) r.add_term(e1 + e2, v1 * v2);
        return r;
    }
    Laurent& operator+=(const Laurent& b) { for (auto& [e, v] : b.c_) add_term(e, v); return *this; }
    Laurent& operator-=(const Laurent& b) { for (auto& [e, v] : b.c_) add_term(e, -v); return *this; }
    Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

    Laurent scaled(const Rational& s) const {
        Laurent r;
        if (s.is_zero()) return r;
        for (auto& [e, v] : c_) r.c_.emplace(e, v * s);
        return r;
    }
    Laurent shifted(int k) const {
        Laurent r;
        for (auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    // substitute q = 1
    Rational eval_q1() const {
        Rational r;
        for (auto& [e, v] : c_) r += v;
        return r;
    }

    // substitute q = t for an arbitrary rational t != 0
    Rational eval_at(const Rational& t) const {
        Rational r;
        for (auto& [e, v] : c_) r += v * rat_pow(t, e);
        return r;
    }

    std::string str() const;
};

// q-integer [m] = (q^m - 1)/(q - 1); [-m] = -q^{-m}[m]
inline Laurent qint(int m) {
    Laurent r;
    if (m >= 0) {
        for (int e = 0; e < m; ++e) r.add_term(e, Rational(1));
    } else {
        for (int e = m; e < 0; ++e) r.add_term(e, Rational(-1));
    }
    return r;
}

inline Rational eval_q1(const Laurent& p) { return p.eval_q1(); }

// Exact division in Q[q^±1]; throws NotDivisible when d does not divide p.
inline Laurent exact_div(const Laurent& p, const Laurent& d) {
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
    Laurent rem = p, quot;
    const int dmax = d.max_exp();
    const Rational dlead = d.leading_coeff();
    while (!rem.is_zero()) {
        int e = rem.max_exp() - dmax;
        if (rem.degree_span() < d.degree_span())
            throw NotDivisible("exact_div: remainder " + rem.str());
        Rational cf = rem.leading_coeff() / dlead;
        quot.add_term(e, cf);
        rem -= d.scaled(cf).shifted(e);
    }
    return quot;
}

// Division with remainder for ordinary polynomials (min_exp >= 0), used by
// the Euclidean algorithm and Smith normal form.
inline void poly_divmod(const Laurent& a, const Laurent& b, Laurent& q_out, Laurent& r_out) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    Laurent rem = a, quot;
    const int db = b.max_exp();
    const Rational blead = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        int e = rem.max_exp() - db;
        Rational cf = rem.leading_coeff() / blead;
        quot.add_term(e, cf);
        rem -= b.scaled(cf).shifted(e);
    }
    q_out = std::move(quot);
    r_out = std::move(rem);
}

// Canonical associate: ordinary polynomial, nonzero constant term, monic.
inline Laurent normalize_laurent(const Laurent& p) {
    if (p.is_zero()) return p;
    Laurent r = p.shifted(-p.min_exp());
    return r.scaled(r.leading_coeff().inverse());
}

// gcd in Q[q^±1], reported as the canonical associate; gcd(0,0) = 0.
inline Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    Laurent x = normalize_laurent(a), y = normalize_laurent(b);
    while (!y.is_zero()) {
        Laurent q, r;
        poly_divmod(x, y, q, r);
        x = std::move(y);
        y = normalize_laurent(r);
    }
    return normalize_laurent(x);
}

// Rational content (gcd of coefficients, sign of leading coefficient kept positive).
inline Rational laurent_content(const Laurent& p) {
    Rational g;
    for (auto& [e, v] : p.terms()) g = rat_gcd(g, v);
    if (!g.is_zero() && p.leading_coeff().sgn() < 0) g = -g;
    return g;
}

inline std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, v] : c_) { // ascending exponents: canonical print order
        Rational av = v.abs();
        if (first) {
            if (v.sgn() < 0) s += "-";
            first = false;
        } else {
            s += v.sgn() < 0 ? " - " : " + ";
        }
        std::string qpart;
        if (e == 1) qpart = "q";
        else if (e != 0) qpart = "q^" + std::to_string(e);
        if (qpart.empty()) s += av.str();
        else if (av.is_one()) s += qpart;
        else s += av.str() + "*" + qpart;
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

} // namespace koszulq

#endif
