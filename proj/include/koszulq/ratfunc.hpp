#ifndef KOSZULQ_RATFUNC_HPP
#define KOSZULQ_RATFUNC_HPP

/**
 * @file ratfunc.hpp
 * @brief The field Q(q) as reduced fractions of Laurent polynomials.
 *
 * Invariant: denominator is the canonical associate of itself (ordinary monic
 * polynomial with nonzero constant term) and gcd(num, den) is a unit.
 */

#include "laurent.hpp"

namespace koszulq {

class RatFunc {
    Laurent num_;
    Laurent den_; // normalized, nonzero

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) { den_ = Laurent(1); return; }
        Laurent g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        // push the denominator's unit part (c * q^k) into the numerator
        Laurent dn = normalize_laurent(den_);
        if (dn != den_) {
            Laurent unit = exact_div(den_, dn); // c * q^k
            num_ = exact_div(num_, unit);
            den_ = dn;
        }
    }

public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int v) : num_(v), den_(1) {}
    RatFunc(const Rational& v) : num_(v), den_(1) {}
    RatFunc(Laurent n) : num_(std::move(n)), den_(1) {}
    RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }
};

} // namespace koszulq

#endif
