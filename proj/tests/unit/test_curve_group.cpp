#include "doctest.h"
#include "nckit/curve_group.hpp"
#include "nckit/error.hpp"
#include "nckit/picard.hpp"

using namespace nckit;

namespace {
Point G(const char* n, Rational c = 1) { return Point::generator(n, c); }
}

TEST_CASE("add: identity, inverse, free sum") {
    Point p = G("p"), q = G("q");
    CHECK(add(p, Point()) == p);
    CHECK(add(p, -p).is_zero());
    Point s = add(p, q);
    CHECK(s.coeffs().size() == 2);
    CHECK(s.coeff("p") == 1);
    CHECK(s.coeff("q") == 1);
}

TEST_CASE("scale: thirds of t, zero and negation") {
    Point t = G("t", 3) + G("u", Rational(1, 2));
    Point s = scale(Rational(1, 3), t);
    CHECK(add(s, add(s, s)) == t);
    CHECK(scale(0, t).is_zero());
    CHECK(scale(-1, t) == -t);
}

TEST_CASE("translate") {
    Point p = G("p"), t = G("t");
    CHECK(translate(p, t, 1) == p + t);
    CHECK(translate(translate(p, t, -1), t, 1) == p);
    CHECK(translate(Point(), t, 3) == Rational(3) * t);
}

TEST_CASE("collinear_wrt under sum-zero normalization") {
    SheafClass L{3, Point()};
    Point p = G("p"), q = G("q"), r = G("r"), s = G("s");
    CHECK(collinear_wrt(L, p, q, -p - q));
    CHECK_FALSE(collinear_wrt(L, p, q, r));
    // p + q + r = -3s, so the sigma-translates sum to zero
    Point r2 = -p - q - Rational(3) * s;
    CHECK(collinear_wrt(L, p + s, q + s, r2 + s));
    CHECK_THROWS_AS(collinear_wrt(SheafClass{2, Point()}, p, q, r), Error);
}

TEST_CASE("divisor_stats") {
    Point p = G("p"), q = G("q"), r = G("r");
    auto st = divisor_stats(Divisor{p, q, r});
    CHECK(st.degree == 3);
    CHECK(st.sum == p + q + r);
    auto z = divisor_stats(Divisor{});
    CHECK(z.degree == 0);
    CHECK(z.sum.is_zero());
    auto two = divisor_stats(Divisor::single(p, 2));
    CHECK(two.degree == 2);
    CHECK(two.sum == Rational(2) * p);
}

TEST_CASE("point printing and rational text") {
    CHECK(Point().str() == "0");
    CHECK(rational_str(Rational(-2, 3)) == "-2/3");
    CHECK(rational_str(Rational(4)) == "4/1");
    CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
}
