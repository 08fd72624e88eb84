#pragma once

#include <string>

#include "nckit/curve_group.hpp"

namespace nckit {

// Isomorphism class of an invertible sheaf on the curve: (degree, sum).
struct SheafClass {
    long degree = 0;
    Point sum;

    static SheafClass trivial() { return {}; }
    // O(D) for an effective or virtual divisor D.
    static SheafClass of_divisor(const Divisor& d) { return {d.degree(), d.sum()}; }
    static SheafClass of_point(const Point& p) { return {1, p}; }

    SheafClass dual() const { return {-degree, -sum}; }

    bool operator==(const SheafClass& o) const { return degree == o.degree && sum == o.sum; }
    bool operator!=(const SheafClass& o) const { return !(*this == o); }

    std::string str() const;
};

SheafClass tensor(const SheafClass& l, const SheafClass& m);
// L(sign * D).
SheafClass twist(const SheafClass& l, const Divisor& d, int sign);
// L^{tau^k} = (tau^k)^* L, where tau is translation by t.
SheafClass pullback(const SheafClass& l, const Point& t, long k);
// L_n = L (x) L^tau (x) ... (x) L^{tau^{n-1}}.
SheafClass twisted_power(const SheafClass& l, const Point& t, long n);
// Riemann-Roch on a genus one curve.
long h0(const SheafClass& l);
bool is_isomorphic(const SheafClass& l, const SheafClass& m);

// a, b, c lie on a line of the plane embedded by the degree 3 class L.
bool collinear_wrt(const SheafClass& l, const Point& a, const Point& b, const Point& c);

}  // namespace nckit
