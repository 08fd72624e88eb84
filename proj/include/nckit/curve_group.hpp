#pragma once

#include <map>
#include <string>
#include <vector>

#include "nckit/rational.hpp"

namespace nckit {

// A point of the curve group, modelled as a finite rational combination of
// named generators. The zero map is the identity. Zero coefficients are never
// stored, so structural equality is group equality.
class Point {
public:
    using Coeffs = std::map<std::string, Rational>;

    Point() = default;
    explicit Point(Coeffs coeffs);

    static Point generator(const std::string& name, const Rational& c = 1);

    const Coeffs& coeffs() const { return coeffs_; }
    Rational coeff(const std::string& name) const;
    bool is_zero() const { return coeffs_.empty(); }

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;
    Point operator-() const;
    Point& operator+=(const Point& o);
    Point& operator-=(const Point& o);

    bool operator==(const Point& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const;

    // "p + q - 1/3 s"; "0" for the identity.
    std::string str() const;

private:
    Coeffs coeffs_;
};

Point operator*(const Rational& c, const Point& p);

Point add(const Point& p, const Point& q);
Point scale(const Rational& c, const Point& p);
// tau^k(p) = p + k t.
Point translate(const Point& p, const Point& t, long k);

// Formal sum of points with nonzero integer multiplicities.
class Divisor {
public:
    Divisor() = default;
    Divisor(std::initializer_list<Point> points);
    static Divisor single(const Point& p, long mult = 1);
    static Divisor of_points(const std::vector<Point>& points);

    void add(const Point& p, long mult = 1);
    const std::map<Point, long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    long degree() const;
    Point sum() const;
    // Apply tau^k to every point.
    Divisor translated(const Point& t, long k) const;
    std::vector<Point> points() const;  // with repetition

    Divisor operator+(const Divisor& o) const;
    Divisor operator-() const;
    bool operator==(const Divisor& o) const { return terms_ == o.terms_; }
    bool operator!=(const Divisor& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<Point, long> terms_;
};

struct DivisorStats {
    long degree;
    Point sum;
};

DivisorStats divisor_stats(const Divisor& d);

}  // namespace nckit
