#include "nckit/curve_group.hpp"

#include <algorithm>

namespace nckit {

Point::Point(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Point Point::generator(const std::string& name, const Rational& c) {
    return Point(Coeffs{{name, c}});
}

Rational Point::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Point& Point::operator+=(const Point& o) {
    for (const auto& [name, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(name, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Point& Point::operator-=(const Point& o) { return *this += -o; }

Point Point::operator+(const Point& o) const {
    Point r = *this;
    r += o;
    return r;
}

Point Point::operator-(const Point& o) const {
    Point r = *this;
    r -= o;
    return r;
}

Point Point::operator-() const {
    Point r = *this;
    for (auto& kv : r.coeffs_) kv.second = -kv.second;
    return r;
}

bool Point::operator<(const Point& o) const {
    return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(),
                                        o.coeffs_.end());
}

std::string Point::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [name, c] : coeffs_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (a != 1) {
            auto num = boost::multiprecision::numerator(a);
            auto den = boost::multiprecision::denominator(a);
            out += num.str();
            if (den != 1) out += "/" + den.str();
            out += " ";
        }
        out += name;
    }
    return out;
}

Point operator*(const Rational& c, const Point& p) {
    if (c == 0) return Point();
    Point::Coeffs out;
    for (const auto& [name, v] : p.coeffs()) out.emplace(name, v * c);
    return Point(std::move(out));
}

Point add(const Point& p, const Point& q) { return p + q; }
Point scale(const Rational& c, const Point& p) { return c * p; }
Point translate(const Point& p, const Point& t, long k) { return p + Rational(k) * t; }

Divisor::Divisor(std::initializer_list<Point> points) {
    for (const auto& p : points) add(p);
}

Divisor Divisor::single(const Point& p, long mult) {
    Divisor d;
    d.add(p, mult);
    return d;
}

Divisor Divisor::of_points(const std::vector<Point>& points) {
    Divisor d;
    for (const auto& p : points) d.add(p);
    return d;
}

void Divisor::add(const Point& p, long mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(p, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& kv : terms_) d += kv.second;
    return d;
}

Point Divisor::sum() const {
    Point s;
    for (const auto& [p, m] : terms_) s += Rational(m) * p;
    return s;
}

Divisor Divisor::translated(const Point& t, long k) const {
    Divisor out;
    for (const auto& [p, m] : terms_) out.add(translate(p, t, k), m);
    return out;
}

std::vector<Point> Divisor::points() const {
    std::vector<Point> out;
    for (const auto& [p, m] : terms_)
        for (long i = 0; i < (m < 0 ? -m : m); ++i) out.push_back(p);
    return out;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, m] : o.terms_) r.add(p, m);
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r;
    for (const auto& [p, m] : terms_) r.add(p, -m);
    return r;
}

std::string Divisor::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, m] : terms_) {
        if (!first) out += m < 0 ? " - " : " + ";
        else if (m < 0) out += "-";
        first = false;
        long a = m < 0 ? -m : m;
        if (a != 1) out += std::to_string(a);
        out += "[" + p.str() + "]";
    }
    return out;
}

DivisorStats divisor_stats(const Divisor& d) { return {d.degree(), d.sum()}; }

}  // namespace nckit
