#include "doctest.h"
#include "nckit/error.hpp"
#include "nckit/zalgebra.hpp"

using namespace nckit;

namespace {
Point G(const char* n, Rational c = 1) { return Point::generator(n, c); }

// Data satisfying both identities by construction.
struct Data {
    Point a = G("a"), b = G("b"), c = G("c"), d = G("d"), e = G("e"), t = G("t");
    Point f = a + b + c + t - d - e;
    SheafClass N{9, Rational(3) * (a + b + c) - Rational(3) * t};
};

StandardZAlgebra table(const Data& x, long lo = -6, long hi = 8) {
    return sklyanin_table(x.a, x.b, x.c, x.d, x.e, x.f, x.N, x.t, lo, hi);
}
}  // namespace

TEST_CASE("sklyanin table exponents") {
    Data x;
    auto A = table(x);
    for (long n = -6; n <= 8; ++n) {
        CHECK(A.at(n).V.degree == 3);
        CHECK(A.at(n).d == ((n % 3 + 3) % 3 == 0 ? 1 : 0));
    }
    CHECK_THROWS_AS(A.at(20), Error);
}

TEST_CASE("normalize") {
    Data x;
    StandardZAlgebra flat;
    flat.base_tau = x.t;
    for (long n = -3; n <= 3; ++n) flat.gens[n] = {SheafClass{3, G("v")}, 0};
    auto nf = normalize(flat);
    for (const auto& [n, e] : nf.e) CHECK(e == 0);
    CHECK(nf.algebra.gens == flat.gens);

    auto A = table(x);
    auto nA = normalize(A);
    for (long n = A.lo(); n <= A.hi(); ++n) {
        CHECK(nA.algebra.at(n).d == 0);
        // floor(n/3) pullbacks applied to V_n
        long fl = n >= 0 ? n / 3 : -((-n + 2) / 3);
        CHECK(nA.algebra.at(n).V == pullback(A.at(n).V, x.t, -fl));
    }
    for (long i = A.lo(); i <= A.hi() + 1; ++i)
        for (long j = A.lo(); j <= i; ++j) CHECK(nA.e.at(i) + compose(A, i, j).d == nA.e.at(j));
    auto twice = normalize(nA.algebra);
    CHECK(twice.algebra.gens == nA.algebra.gens);
}

TEST_CASE("veronese") {
    Data x;
    auto A = table(x);
    auto V = veronese(A, 3, 2);
    CHECK_FALSE(V.gens.empty());
    for (const auto& [n, g] : V.gens) CHECK(g.V.degree == 9);
    CHECK(veronese(A, 1, 0).gens == A.gens);
    // composing Veroneses matches the combined step
    auto V2 = veronese(veronese(A, 2, 1), 2, 0);
    auto V4 = veronese(A, 4, 1);
    for (const auto& [n, g] : V4.gens)
        if (V2.has(n)) CHECK(V2.at(n) == g);
    CHECK_FALSE(V2.gens.empty());
}

TEST_CASE("check_periodic") {
    Data x;
    auto A = table(x);
    CHECK(check_periodic(A, 3));
    CHECK_FALSE(check_periodic(A, 1));
    CHECK(check_periodic(A, 0));
    CHECK(check_periodic(normalize(A).algebra, 0));
}

TEST_CASE("binomial_consistency") {
    CHECK(binomial_consistency({{{5, 5}, 1}}));
    CHECK(binomial_consistency({{{6, 5}, 3}}));
    CHECK(binomial_consistency({{{8, 5}, 10}}));
    CHECK_FALSE(binomial_consistency({{{8, 5}, 9}}));
}

TEST_CASE("solve_sklyanin") {
    Data x;
    auto res = solve_sklyanin(x.a, x.b, x.c, x.d, x.e, x.f, x.N, x.t);
    CHECK(res.data.sigma == Rational(1, 3) * x.t);
    // L = N twisted down by the shifted d, e, f and by a, b, c
    Point expected = x.N.sum - (x.d + x.e + x.f - Rational(3) * x.t) - (x.a + x.b + x.c);
    CHECK(res.data.L == SheafClass{3, expected});
    for (const auto& [k, ok] : res.checks) CHECK_MESSAGE(ok, k);
    CHECK(res.window.size() == 19);

    auto code = [&](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return std::string();
    };
    CHECK(code([&] { solve_sklyanin(x.a, x.b, x.c, x.d, x.e, x.f + G("u"), x.N, x.t); }) ==
          "need1-failed");
    CHECK(code([&] { solve_sklyanin(x.a, x.b, x.c, x.d, x.e, x.f, SheafClass{9, Point()}, x.t); }) ==
          "need2-failed");
    CHECK(code([&] { solve_sklyanin(x.a, x.b, x.c, x.d, x.e, x.f, x.N, x.t, false); }) ==
          "polynomial-extension-branch");
}
