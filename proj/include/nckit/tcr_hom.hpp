#pragma once

#include <array>
#include <functional>

#include "nckit/hilbert_series.hpp"
#include "nckit/picard.hpp"

namespace nckit {

// B(E, N, tau): sections of N_n in degree n.
struct TcrDescriptor {
    SheafClass sheaf;
    Point tau;

    TcrDescriptor(SheafClass n, Point t);
    bool operator==(const TcrDescriptor& o) const { return sheaf == o.sheaf && tau == o.tau; }
};

// The graded module with piece H^0(G (x) N_n) in degree n >= start_degree.
struct SectionModule {
    SheafClass twist;
    long start_degree = 0;
    TcrDescriptor host;
};

long section_dim(const SectionModule& m, long n);
HilbertSeries section_series(const SectionModule& m);

// Hilbert series of sum_{n >= start} h0(cls(n)) s^n, where deg cls(n) is
// affine in n with positive slope. The prefix before the degree turns
// positive is summed exactly and the linear tail in closed form.
HilbertSeries series_of_class_sequence(const std::function<SheafClass(long)>& cls, long start);

// Hom between section modules over the same ring. The degree n piece is the
// sections of (G_j^{tau^n})^{-1} (x) G_i (x) N_n, so the twist depends on n.
class HomModule {
public:
    HomModule(SectionModule from, SectionModule to);

    SheafClass class_at(long n) const;
    long dim(long n) const;
    long start_degree() const { return start_; }
    HilbertSeries series() const;

private:
    SectionModule from_;
    SectionModule to_;
    long start_;
};

HomModule hom_section_module(const SectionModule& nj, const SectionModule& ni);

// h/(1-s): lift from the quotient by a central degree one element.
HilbertSeries lift_g_divisible(const HilbertSeries& h);

using SeriesMatrix = std::array<std::array<HilbertSeries, 3>, 3>;

struct EndomorphismModules {
    TcrDescriptor host;
    std::array<SectionModule, 3> modules;  // twists O(-a-b-c), O, O(d+e+f)
};

EndomorphismModules three_module_setup(const Point& a, const Point& b, const Point& c,
                                       const Point& d, const Point& e, const Point& f,
                                       const SheafClass& n, const Point& t);

// entry(i, j) = series of Hom(N_j, N_i) before lifting.
SeriesMatrix hilb_matrix_bar(const Point& a, const Point& b, const Point& c, const Point& d,
                             const Point& e, const Point& f, const SheafClass& n, const Point& t);
// The lifted matrix: each entry divided by (1-s).
SeriesMatrix hilb_matrix(const Point& a, const Point& b, const Point& c, const Point& d,
                         const Point& e, const Point& f, const SheafClass& n, const Point& t);

// The point module of p shifted by n and truncated is the point module of tau^n p.
Point point_module_shift(const Point& p, const Point& t, long n);

}  // namespace nckit
