#include "doctest.h"
#include "nckit/picard.hpp"
#include "oracle.hpp"

using namespace nckit;

namespace {
Point G(const char* n, Rational c = 1) { return Point::generator(n, c); }

oracle::Vec to_vec(const Point& p) {
    oracle::Vec v;
    for (const auto& [k, x] : p.coeffs())
        v[k] = oracle::Q(static_cast<long long>(numerator(x)), static_cast<long long>(denominator(x)));
    return v;
}
oracle::Cls to_cls(const SheafClass& c) { return {c.degree, to_vec(c.sum)}; }
}  // namespace

TEST_CASE("tensor") {
    SheafClass L{3, G("x")};
    CHECK(tensor(L, SheafClass::trivial()) == L);
    CHECK(tensor(SheafClass{3, G("x")}, SheafClass{3, G("y")}) == SheafClass{6, G("x") + G("y")});
    CHECK(tensor(L, L.dual()) == SheafClass::trivial());
}

TEST_CASE("twist") {
    Point m = G("m"), p = G("p"), q = G("q"), t = G("t");
    CHECK(twist(SheafClass{9, m}, Divisor{p, q}, -1) == SheafClass{7, m - p - q});
    SheafClass L{5, m};
    Divisor D{p, q, t};
    CHECK(twist(twist(L, D, -1), D, +1) == L);
    CHECK(twist(SheafClass{8, m}, Divisor{t}, -1) == SheafClass{7, m - t});
}

TEST_CASE("pullback of a point sheaf moves the point back") {
    Point p = G("p"), t = G("t");
    // oracle: pull back the divisor p by tau, giving the single point p - t
    oracle::Cls o = oracle::pullback_steps({1, to_vec(p)}, to_vec(t), 1);
    CHECK(o.sum == to_vec(p - t));
    CHECK(pullback(SheafClass::of_point(p), t, 1) == SheafClass{1, p - t});
    SheafClass L{4, G("l")};
    CHECK(pullback(L, t, 0) == L);
    CHECK(pullback(pullback(L, t, 5), t, -5) == L);
}

TEST_CASE("twisted_power") {
    Point l = G("l"), s = G("s"), t = Rational(3) * s;
    SheafClass L{3, l};
    CHECK(twisted_power(L, t, 0) == SheafClass::trivial());
    CHECK(twisted_power(L, t, 1) == L);
    // L_3 along sigma = s is the class M of the Veronese
    oracle::Cls o = oracle::twisted_power(to_cls(L), to_vec(s), 3);
    CHECK(o.deg == 9);
    CHECK(o.sum == to_vec(Rational(3) * l - Rational(9) * s));
    CHECK(twisted_power(L, s, 3) == SheafClass{9, Rational(3) * l - Rational(9) * s});
    // along t = 3s the same power carries 9t
    CHECK(oracle::twisted_power(to_cls(L), to_vec(t), 3).sum == to_vec(Rational(3) * l - Rational(27) * s));
    CHECK(twisted_power(L, t, 3) == SheafClass{9, Rational(3) * l - Rational(27) * s});
}

TEST_CASE("h0 by Riemann-Roch") {
    CHECK(h0(SheafClass{3, G("l")}) == 3);
    CHECK(h0(SheafClass::trivial()) == 1);
    CHECK(h0(SheafClass{0, G("p")}) == 0);
    CHECK(h0(SheafClass{-2, Point()}) == 0);
}

TEST_CASE("is_isomorphic") {
    Point p = G("p"), q = G("q"), r = G("r");
    SheafClass L{3, p};
    CHECK(is_isomorphic(L, L));
    CHECK_FALSE(is_isomorphic(SheafClass{3, p + q + r}, SheafClass{3, Point()}));
    // the degree three identity O(tau a + b + c) = O(d + e + f)
    Point t = G("t"), a = G("a"), b = G("b"), c = G("c");
    Point d = a + t, e = b, f = c;
    CHECK(is_isomorphic(SheafClass::of_divisor(Divisor{a + t, b, c}),
                        SheafClass::of_divisor(Divisor{d, e, f})));
}
