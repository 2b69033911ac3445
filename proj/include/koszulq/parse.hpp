#ifndef KOSZULQ_PARSE_HPP
#define KOSZULQ_PARSE_HPP

/**
 * @file parse.hpp
 * @brief Expression parser for scalars and noncommutative polynomials.
 *
 * Grammar: sums and differences of products; factors are integers, fractions
 * a/b, q powers (q, q^3, q^-2), parenthesized subexpressions, and generator
 * words written with dots (a.b) or products (a*b).  Multiplication of words
 * is free concatenation — rewriting happens later, inside an algebra.
 */

#include "errors.hpp"
#include "ncpoly.hpp"

#include <cctype>
#include <string>

namespace koszulq {

namespace detail {

template <class S>
struct ScalarBuild; // how to inject integers / fractions / q-powers into S

template <>
struct ScalarBuild<Rational> {
    static Rational integer(const BigInt& v) { return Rational(v); }
    static Rational fraction(const BigInt& a, const BigInt& b) { return Rational(a, b); }
    static Rational q_power(int, int line, int col) {
        throw ParseError("q is not a valid coefficient over Q", line, col);
    }
};

template <>
struct ScalarBuild<Laurent> {
    static Laurent integer(const BigInt& v) { return Laurent(Rational(v)); }
    static Laurent fraction(const BigInt& a, const BigInt& b) { return Laurent(Rational(a, b)); }
    static Laurent q_power(int e, int, int) { return Laurent::q_power(e); }
};

template <>
struct ScalarBuild<RatFunc> {
    static RatFunc integer(const BigInt& v) { return RatFunc(Rational(v)); }
    static RatFunc fraction(const BigInt& a, const BigInt& b) { return RatFunc(Rational(a, b)); }
    static RatFunc q_power(int e, int, int) { return RatFunc(Laurent::q_power(e)); }
};

} // namespace detail

template <class S>
class PolyParser {
public:
    PolyParser(const std::string& text, const GeneratorSet* gens, int line = 1, int col_offset = 0)
        : text_(text), gens_(gens), line_(line), col_offset_(col_offset) {}

    NcPoly<S> parse() {
        NcPoly<S> p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    const GeneratorSet* gens_;
    std::size_t pos_ = 0;
    int line_;
    int col_offset_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_offset_ + static_cast<int>(pos_) + 1);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BigInt parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }
    int parse_int_exponent() {
        bool neg = eat('-');
        BigInt v = parse_uint();
        if (v > 1000000) fail("exponent too large");
        int e = static_cast<int>(v);
        return neg ? -e : e;
    }
    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '*'))
        {
            // '*' is multiplication unless it directly trails an identifier
            // character, where it is part of a dual-generator name (a*)
            if (text_[pos_] == '*') {
                if (pos_ + 1 < text_.size() &&
                    (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) ||
                     text_[pos_ + 1] == '_'))
                    break; // a*b reads as product
                ++pos_;
                break; // trailing star belongs to the name
            }
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    NcPoly<S> parse_expr() {
        NcPoly<S> acc = parse_term();
        for (;;) {
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else return acc;
        }
    }

    NcPoly<S> parse_term() {
        NcPoly<S> acc = parse_factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') { ++pos_; acc = free_mul(acc, parse_factor()); }
            else if (c == '.') { ++pos_; acc = free_mul(acc, parse_factor()); }
            else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)))
                acc = free_mul(acc, parse_factor());
            else return acc;
        }
    }

    NcPoly<S> parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected an expression");
        char c = text_[pos_];
        if (c == '-') { ++pos_; return -parse_factor(); }
        if (c == '(') {
            ++pos_;
            NcPoly<S> p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt a = parse_uint();
            if (eat('/')) {
                BigInt b = parse_uint();
                if (b == 0) fail("zero denominator");
                return NcPoly<S>::monomial({}, detail::ScalarBuild<S>::fraction(a, b));
            }
            return NcPoly<S>::monomial({}, detail::ScalarBuild<S>::integer(a));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = parse_ident();
            if (name == "q" && (gens_ == nullptr || gens_->find("q") < 0)) {
                int e = 1;
                if (eat('^')) e = parse_int_exponent();
                return NcPoly<S>::monomial(
                    {}, detail::ScalarBuild<S>::q_power(
                            e, line_, col_offset_ + static_cast<int>(at) + 1));
            }
            if (gens_ == nullptr) fail("unexpected identifier '" + name + "' in a scalar");
            int g = gens_->find(name);
            if (g < 0) fail("unknown generator '" + name + "'");
            int e = 1;
            if (eat('^')) {
                e = parse_int_exponent();
                if (e < 0) fail("negative generator power");
            }
            Word w(static_cast<std::size_t>(e), static_cast<Gen>(g));
            return NcPoly<S>::monomial(std::move(w), S(1));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static NcPoly<S> free_mul(const NcPoly<S>& a, const NcPoly<S>& b) {
        NcPoly<S> r;
        for (auto& [wa, ca] : a.terms)
            for (auto& [wb, cb] : b.terms) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }
};

template <class S>
NcPoly<S> parse_poly(const std::string& text, const GeneratorSet& gens, int line = 1,
                     int col_offset = 0) {
    return PolyParser<S>(text, &gens, line, col_offset).parse();
}

template <class S>
S parse_scalar(const std::string& text, int line = 1, int col_offset = 0) {
    NcPoly<S> p = PolyParser<S>(text, nullptr, line, col_offset).parse();
    S v(0);
    for (auto& [w, c] : p.terms) {
        // gens == nullptr means every term is scalar
        v += c;
    }
    return v;
}

} // namespace koszulq

#endif
