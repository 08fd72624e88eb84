#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nckit/picard.hpp"

namespace nckit {

// S/(g) = B(E, L, sigma) for a three-generator Sklyanin algebra S.
struct SklyaninContext {
    SheafClass L;
    Point sigma;

    SklyaninContext(SheafClass l, Point s);

    Point tau() const { return Rational(3) * sigma; }
    SheafClass Lm(long m) const { return twisted_power(L, sigma, m); }
    static long dim_S(long m);  // binom(m+2, 2)
};

enum class Tri { no, yes, unknown };
std::string tri_str(Tri t);

// A point together with a printable name: sigma^power applied to base.
struct LabeledPoint {
    Point value;
    std::string base;
    int power = 0;

    static LabeledPoint named(const SklyaninContext& ctx, const Point& p, const std::string& name,
                              int power = 0);
    LabeledPoint shifted(const SklyaninContext& ctx, int k) const;
    std::string label() const;  // "τq", "σ⁻¹r", "p"
};

struct Atom {
    enum class Kind { full, w, v, line, line_inv };
    Kind kind = Kind::full;
    int m = 0;                       // full: degree of S_m
    std::vector<LabeledPoint> pts;   // w: one point, v: the divisor, line: two defining points
    std::string name;                // line: symbol used in printed words

    int degree() const;
    std::string str() const;
};

// A subspace of S_m known through its dimension (exact or a range), an
// upper-bound vanishing divisor, and whether it is cut out by vanishing
// conditions.
struct SectionSpace {
    int degree = 0;
    long dim_lo = 0;
    long dim_hi = 0;
    std::optional<Divisor> vanishing;
    Tri vdef = Tri::unknown;
    std::vector<Atom> word;
    std::vector<std::string> rules;

    bool exact() const { return dim_lo == dim_hi; }
    long dim() const;  // throws unless exact
    std::string word_str() const;
    std::string str() const;  // "W(τq)·V(σq+σr) [dim 6, vdef=false]"
};

SectionSpace full(const SklyaninContext& ctx, int m);
SectionSpace w(const SklyaninContext& ctx, const LabeledPoint& a);
SectionSpace v(const SklyaninContext& ctx, const std::vector<LabeledPoint>& d);
SectionSpace w(const SklyaninContext& ctx, const Point& a);
SectionSpace v(const SklyaninContext& ctx, const Divisor& d);
// The degree one element vanishing at a, b and the third collinear point.
SectionSpace line_through(const SklyaninContext& ctx, const LabeledPoint& a, const LabeledPoint& b,
                          const std::string& name = "x");
// Its inverse in the graded quotient ring; only used as a word factor.
SectionSpace line_inverse(const SklyaninContext& ctx, const LabeledPoint& a, const LabeledPoint& b,
                          const std::string& name = "x");
Point third_point(const SklyaninContext& ctx, const Point& a, const Point& b);

SectionSpace mul(const SklyaninContext& ctx, const SectionSpace& x, const SectionSpace& y);
SectionSpace rewrite_commute(const SklyaninContext& ctx, const SectionSpace& x);

// Both spaces are cut out by the same vanishing data in the same degree.
bool provably_equal(const SectionSpace& x, const SectionSpace& y);

// Upper bound for the dimension of a subspace of S_m whose image mod g
// vanishes on d.
long vanishing_bound(const SklyaninContext& ctx, int m, const Divisor& d);

// A Sklyanin elliptic algebra blown up at two or three named points.
struct BlowupScene {
    SklyaninContext ctx;
    std::vector<Point> points;
    std::vector<std::string> names;
    std::string third_name = "r";  // two-point scenes: the third point on the line

    BlowupScene(SklyaninContext c, std::vector<Point> pts, std::vector<std::string> nm);
    int size() const { return static_cast<int>(points.size()); }
    LabeledPoint labeled(int i, int power = 0) const;
    long dim_R1() const;
};

struct LineRef {
    enum class Kind { exceptional, strict };
    Kind kind = Kind::exceptional;
    int index = 0;

    static LineRef exc(int i) { return {Kind::exceptional, i}; }
    static LineRef str(int i) { return {Kind::strict, i}; }
    bool operator==(const LineRef&) const = default;
};

std::string line_id(const BlowupScene& scene, LineRef ref);
Point line_divisor(const BlowupScene& scene, LineRef ref);
std::vector<LineRef> scene_lines(const BlowupScene& scene);

SectionSpace cremona_line_ideal_degree1(const BlowupScene& scene, LineRef ref);

struct HomWitness {
    long dim;
    SectionSpace witness;
    std::string rule;
};

HomWitness hom_dim_degree1(const BlowupScene& scene, LineRef a, LineRef b);

}  // namespace nckit
