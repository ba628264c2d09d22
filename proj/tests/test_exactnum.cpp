#include "topskit/error.hpp"
#include "topskit/exactnum.hpp"

#include <doctest.h>

#include <random>

using namespace topskit;

namespace {

ExactReal golden()
{
    return ExactReal::algebraic(IntPoly{-1, 1, 1}, Rational(3, 5), Rational(7, 10));
}

ExactReal q(long n, long d) { return ExactReal::fraction(n, d); }

} // namespace

TEST_CASE("sign_at")
{
    CHECK(sign_at(IntPoly{-1, 1, 1}, golden()) == 0);
    CHECK(sign_at(IntPoly{}, q(2, 3)) == 0);
    // x^3 - 2x + 1 at 2/3 is 8/27 - 4/3 + 1 = -1/27
    CHECK(Rational(8, 27) - Rational(4, 3) + 1 == Rational(-1, 27));
    CHECK(sign_at(IntPoly{1, -2, 0, 1}, q(2, 3)) == -1);
}

TEST_CASE("compare")
{
    CHECK(compare(q(1, 2), q(1, 2)) == Ordering::Equal);
    CHECK(compare(golden(), q(2, 3)) == Ordering::Less);
    CHECK(compare(q(2, 3), q(1, 2)) == Ordering::Greater);
    CHECK(compare(golden(), q(3, 5)) == Ordering::Greater);
}

TEST_CASE("arith")
{
    CHECK(arith(q(1, 2), q(1, 3), ArithOp::Add) == q(5, 6));
    ExactReal r = golden();
    CHECK(compare(r * r, ExactReal(1) - r) == Ordering::Equal);
    CHECK((r * r).to_string() == (ExactReal(1) - r).to_string());
    CHECK(q(2, 3).pow(3) == q(8, 27));
    CHECK_THROWS_AS(q(1, 2) / ExactReal(0), DomainError);
    CHECK_THROWS_AS(r / (r * r + r - ExactReal(1)), DomainError);
}

TEST_CASE("algebraic construction")
{
    CHECK_THROWS_AS(ExactReal::algebraic(IntPoly{-1, 1, 1}, Rational(-2), Rational(1)), ValidationError);
    // A rational root comes back as a rational.
    ExactReal half = ExactReal::algebraic(IntPoly{-1, 2}, Rational(0), Rational(1));
    CHECK(half.is_rational());
    CHECK(half == q(1, 2));
    // sqrt 2 from a reducible, non-squarefree polynomial: (x^2 - 2)^2 (x - 5).
    IntPoly p = IntPoly{-2, 0, 1} * IntPoly{-2, 0, 1} * IntPoly{-5, 1};
    ExactReal s = ExactReal::algebraic(p, Rational(1), Rational(2));
    CHECK(s * s == ExactReal(2));
    CHECK(sign_at(p, s) == 0);
}

TEST_CASE("parse and print round trip")
{
    CHECK(ExactReal::parse("6/8") == q(3, 4));
    CHECK(ExactReal::parse("0.625") == q(5, 8));
    CHECK(ExactReal::parse("-7").to_string() == "-7");
    ExactReal r = ExactReal::parse("poly:[-1,1,1]@[0.6,0.7]");
    CHECK(r == golden());
    ExactReal x = r * r * r + q(1, 3);
    CHECK(ExactReal::parse(x.to_string()) == x);
    CHECK_THROWS_AS(ExactReal::parse("1/0"), ParseError);
    CHECK_THROWS_AS(ExactReal::parse("abc"), ParseError);
    CHECK_THROWS_AS(ExactReal::parse("poly:[-1,1,1]"), ParseError);
}

TEST_CASE("different fields compare but do not mix")
{
    ExactReal s2 = ExactReal::parse("poly:[-2,0,1]@[1,2]");
    ExactReal r = golden();
    CHECK(compare(r, s2) == Ordering::Less);
    CHECK(compare(s2 - ExactReal(1), ExactReal::parse("poly:[-1,2,1]@[0,1]")) == Ordering::Equal);
    CHECK_THROWS_AS(r + s2, DomainError);
}

TEST_CASE("properties on random values")
{
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    const ExactReal r = golden();
    auto random_value = [&] {
        ExactReal a = q(num(rng), den(rng));
        if (rng() % 2)
            a = a + q(num(rng), den(rng)) * r;
        return a;
    };
    for (int i = 0; i < 300; ++i) {
        ExactReal a = random_value(), b = random_value(), c = random_value();
        // trichotomy and antisymmetry
        CHECK(compare(a, b) == invert(compare(b, a)));
        CHECK(((a < b) + (a == b) + (a > b)) == 1);
        // field axioms
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        // sign agrees with a tight enclosure whenever it excludes zero
        auto [lo, hi] = a.enclosure(64);
        if (lo > 0)
            CHECK(a.sign() == 1);
        if (hi < 0)
            CHECK(a.sign() == -1);
        CHECK(lo <= hi);
    }
}

TEST_CASE("sign_at agrees with interval evaluation")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9), num(-30, 30), den(1, 12);
    for (int i = 0; i < 1000; ++i) {
        IntPoly p{coef(rng), coef(rng), coef(rng), coef(rng)};
        ExactReal x = q(num(rng), den(rng));
        Rational v = p.eval(x.rational_value());
        CHECK(sign_at(p, x) == sgn(v));
    }
    // Algebraic points: compare against the enclosure-based bound.
    const ExactReal r = golden();
    for (int i = 0; i < 200; ++i) {
        IntPoly p{coef(rng), coef(rng), coef(rng), coef(rng)};
        auto [lo, hi] = eval(p, r).enclosure(80);
        int s = sign_at(p, r);
        if (lo > 0)
            CHECK(s == 1);
        else if (hi < 0)
            CHECK(s == -1);
    }
}
