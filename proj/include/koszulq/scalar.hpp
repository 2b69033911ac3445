#ifndef KOSZULQ_SCALAR_HPP
#define KOSZULQ_SCALAR_HPP

/**
 * @file scalar.hpp
 * @brief Glue between the three coefficient rings Q, Q[q^±1] and Q(q), so the
 *        algebra and matrix code can be generic over the scalar type.
 */

#include "laurent.hpp"
#include "ratfunc.hpp"

#include <string>

namespace koszulq {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    using fraction_field = Rational;
    static constexpr const char* name = "Q";
    static Rational to_fraction(const Rational& v) { return v; }
    static Rational from_fraction(const Rational& v) { return v; }
    static Rational at_q1(const Rational& v) { return v; }
    static bool is_unit(const Rational& v) { return !v.is_zero(); }
};

template <>
struct scalar_traits<Laurent> {
    using fraction_field = RatFunc;
    static constexpr const char* name = "Qq";
    static RatFunc to_fraction(const Laurent& v) { return RatFunc(v); }
    static Laurent from_fraction(const RatFunc& v) {
        if (!v.is_laurent())
            throw NotDivisible("coefficient " + v.str() + " is not a Laurent polynomial");
        return v.num();
    }
    static Rational at_q1(const Laurent& v) { return v.eval_q1(); }
    static bool is_unit(const Laurent& v) { return v.is_unit(); }
};

template <>
struct scalar_traits<RatFunc> {
    using fraction_field = RatFunc;
    static constexpr const char* name = "Qq_field";
    static RatFunc to_fraction(const RatFunc& v) { return v; }
    static RatFunc from_fraction(const RatFunc& v) { return v; }
    static Rational at_q1(const RatFunc& v) {
        Rational d = v.den().eval_q1();
        if (d.is_zero()) throw std::domain_error("evaluation at q=1 hits a pole");
        return v.num().eval_q1() / d;
    }
    static bool is_unit(const RatFunc& v) { return !v.is_zero(); }
};

template <class S>
std::string scalar_str(const S& v) { return v.str(); }

} // namespace koszulq

#endif
