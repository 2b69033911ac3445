#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <koszulq/laurent.hpp>
#include <koszulq/parse.hpp>
#include <koszulq/ratfunc.hpp>

#include <random>

using namespace koszulq;

static Laurent L(const std::string& s) { return parse_scalar<Laurent>(s); }

TEST_CASE("qint small values") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    CHECK(qint(3) == L("q^2 + q + 1"));
    // [-2] = -q^-2 - q^-1, checked against (q^-2 - 1)/(q - 1)
    CHECK(qint(-2) == L("-q^-2 - q^-1"));
    CHECK(qint(-2) == exact_div(L("q^-2 - 1"), L("q - 1")));
}

TEST_CASE("q-integer addition law [m+n] = [m] + q^m [n]") {
    for (int m = 0; m <= 9; ++m)
        for (int n = 0; n <= 9; ++n)
            CHECK(qint(m + n) == qint(m) + Laurent::q_power(m) * qint(n));
}

TEST_CASE("eval_q1") {
    CHECK(eval_q1(qint(5)) == Rational(5));
    CHECK(eval_q1(L("q^-1 + q")) == Rational(2));
    // q - q^-1 evaluates to 0 raw; the bracket coefficient 2 appears only
    // after dividing by q - 1 first
    CHECK(eval_q1(L("q - q^-1")) == Rational(0));
    CHECK(eval_q1(exact_div(L("q - q^-1"), L("q - 1"))) == Rational(2));
    for (int m = -12; m <= 12; ++m) CHECK(eval_q1(qint(m)) == Rational(m));
}

TEST_CASE("exact_div") {
    CHECK(exact_div(L("q^2 - 1"), L("q - 1")) == L("q + 1"));
    CHECK(exact_div(L("q - q^-1"), L("q - 1")) == L("q^-1 + 1"));
    CHECK(exact_div(L("q - q^-1"), L("q - 1")) == L("q^-1") * L("q + 1"));
    CHECK_THROWS_AS(exact_div(L("q + 1"), L("q - 1")), NotDivisible);
    CHECK(exact_div(Laurent(), L("q - 1")).is_zero());
}

TEST_CASE("exact_div round-trips on random products") {
    std::mt19937 rng(12345);
    auto random_laurent = [&](int max_terms) {
        Laurent p;
        std::uniform_int_distribution<int> nt(1, max_terms), ex(-4, 4), cf(-5, 5);
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) p.add_term(ex(rng), Rational(cf(rng)));
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Laurent p = random_laurent(4), d = random_laurent(3);
        if (d.is_zero()) continue;
        CHECK(exact_div(p * d, d) == p);
    }
}

TEST_CASE("laurent_gcd") {
    CHECK(laurent_gcd(qint(4), qint(6)) == qint(2));
    CHECK(laurent_gcd(qint(3), qint(5)).is_one());
    // gcd([a],[b]) = [gcd(a,b)]
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= 10; ++b)
            CHECK(laurent_gcd(qint(a), qint(b)) == qint(std::gcd(a, b)));
    Laurent p = L("3*q^-2 - 3*q");
    CHECK(laurent_gcd(p, Laurent()) == normalize_laurent(p));
    CHECK(laurent_gcd(Laurent(), Laurent()).is_zero());
}

TEST_CASE("normalization convention") {
    // canonical associate: ordinary polynomial, nonzero constant term, monic
    Laurent p = L("2*q^3 - 2*q^5");
    Laurent n = normalize_laurent(p);
    CHECK(n == L("-1 + q^2"));
    CHECK(n.min_exp() == 0);
    CHECK(n.leading_coeff().is_one());
    CHECK(!n.coeff(0).is_zero());
}

TEST_CASE("rational arithmetic basics") {
    Rational a(BigInt(2), BigInt(-4));
    CHECK(a == Rational(BigInt(-1), BigInt(2)));
    CHECK(a.den() == 2);
    CHECK((a + a) == Rational(-1));
    CHECK((a * Rational(4)) == Rational(-2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(rat_pow(Rational(BigInt(2), BigInt(3)), -2) == Rational(BigInt(9), BigInt(4)));
}

TEST_CASE("rational function field axioms on random elements") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> ex(-3, 3), cf(-4, 4);
    auto random_rf = [&]() {
        Laurent n, d;
        for (int t = 0; t < 3; ++t) n.add_term(ex(rng), Rational(cf(rng)));
        while (d.is_zero())
            for (int t = 0; t < 2; ++t) d.add_term(ex(rng), Rational(cf(rng)));
        return RatFunc(n, d);
    };
    for (int trial = 0; trial < 100; ++trial) {
        RatFunc x = random_rf(), y = random_rf(), z = random_rf();
        CHECK((x + y) * z == x * z + y * z);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == RatFunc(1));
            CHECK((y / x) * x == y);
        }
    }
}

TEST_CASE("ratfunc reduction invariant") {
    RatFunc f(L("q^2 - 1"), L("2*q - 2"));
    CHECK(f.is_laurent());
    CHECK(f.num() == L("1/2 + 1/2*q"));
    RatFunc g(L("q + 1"), L("q - 1"));
    CHECK(g.den() == L("-1 + q"));
    CHECK(laurent_gcd(g.num(), g.den()).is_one());
}

TEST_CASE("canonical printing, exponents ascending") {
    CHECK(L("q + 1 + q^-2").str() == "q^-2 + 1 + q");
    CHECK(qint(3).str() == "1 + q + q^2");
    CHECK(qint(-2).str() == "-q^-2 - q^-1");
    CHECK(Laurent().str() == "0");
    CHECK(L("-3/2*q^2").str() == "-3/2*q^2");
    CHECK(Rational(BigInt(-7), BigInt(2)).str() == "-7/2");
    CHECK(RatFunc(L("q"), L("q-1")).str() == "q/(-1 + q)");
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_scalar<Laurent>("q^"), ParseError);
    CHECK_THROWS_AS(parse_scalar<Rational>("q + 1"), ParseError);
    try {
        parse_scalar<Laurent>("1 + #");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
}

TEST_CASE("parse/print round-trip is stable") {
    for (const char* s : {"q^-2 + 1 + q", "-q^-2 - q^-1", "1 + q + q^2", "-3/2*q^2", "2", "0"}) {
        Laurent p = L(s);
        CHECK(L(p.str()) == p);
        CHECK(p.str() == L(p.str()).str());
    }
}
