#include "nckit/picard.hpp"

#include "nckit/error.hpp"

namespace nckit {

std::string SheafClass::str() const {
    return "(" + std::to_string(degree) + ", " + sum.str() + ")";
}

SheafClass tensor(const SheafClass& l, const SheafClass& m) {
    return {l.degree + m.degree, l.sum + m.sum};
}

SheafClass twist(const SheafClass& l, const Divisor& d, int sign) {
    if (sign != 1 && sign != -1)
        throw input_error("bad-sign", "twist sign must be +1 or -1");
    return {l.degree + sign * d.degree(), l.sum + Rational(sign) * d.sum()};
}

SheafClass pullback(const SheafClass& l, const Point& t, long k) {
    return {l.degree, l.sum - Rational(k) * Rational(l.degree) * t};
}

SheafClass twisted_power(const SheafClass& l, const Point& t, long n) {
    if (n < 0) throw input_error("negative-power", "twisted_power needs n >= 0");
    Rational tri = Rational(n) * Rational(n - 1) / 2;
    return {n * l.degree, Rational(n) * l.sum - Rational(l.degree) * tri * t};
}

long h0(const SheafClass& l) {
    if (l.degree >= 1) return l.degree;
    if (l.degree < 0) return 0;
    return l.sum.is_zero() ? 1 : 0;
}

bool is_isomorphic(const SheafClass& l, const SheafClass& m) { return l == m; }

bool collinear_wrt(const SheafClass& l, const Point& a, const Point& b, const Point& c) {
    if (l.degree != 3)
        throw input_error("invalid-sheaf-degree",
                          "collinearity needs a degree 3 class, got degree " +
                              std::to_string(l.degree));
    return a + b + c == l.sum;
}

}  // namespace nckit
