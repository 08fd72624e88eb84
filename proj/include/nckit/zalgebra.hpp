#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nckit/picard.hpp"
#include "nckit/tcr_hom.hpp"

namespace nckit {

// Degree one piece A_{n+1,n} = H^0(E, V) t^d.
struct ZGenerator {
    SheafClass V;
    long d = 0;
    bool operator==(const ZGenerator&) const = default;
};

// A standard Z-algebra stored by its adjacent generators on a finite window.
struct StandardZAlgebra {
    Point base_tau;
    std::map<long, ZGenerator> gens;

    const ZGenerator& at(long n) const;  // throws outside the window
    bool has(long n) const { return gens.count(n) != 0; }
    long lo() const;
    long hi() const;
};

// Class and exponent of A_{i,j} as the product A_{i,i-1} ... A_{j+1,j}; i >= j.
ZGenerator compose(const StandardZAlgebra& a, long i, long j);

struct Normalization {
    std::map<long, long> e;
    StandardZAlgebra algebra;
};

Normalization normalize(const StandardZAlgebra& a);
StandardZAlgebra veronese(const StandardZAlgebra& a, long d, long m);
bool check_periodic(const StandardZAlgebra& a, long d);
bool binomial_consistency(const std::map<std::pair<long, long>, long>& dims);

// The table of the Z-algebra built from the three modules with twists
// O(-a-b-c), O, O(d+e+f) over B(E, N, t), on generator indices [lo, hi].
StandardZAlgebra sklyanin_table(const Point& a, const Point& b, const Point& c, const Point& d,
                                const Point& e, const Point& f, const SheafClass& n,
                                const Point& t, long lo, long hi);

// dim A_{3m+i, 3n+j} read off the lifted Hom matrix, for block indices in [lo, hi].
std::map<std::pair<long, long>, long> dims_from_matrix(const SeriesMatrix& m, long lo, long hi);

struct SklyaninData {
    Point sigma;
    SheafClass L;
    Point tau() const { return Rational(3) * sigma; }
    bool operator==(const SklyaninData&) const = default;
};

struct SolverResult {
    SklyaninData data;
    std::map<std::string, bool> checks;
    std::vector<long> window;  // n with D_n ~ F_n verified
};

// D_n = D_r^{tau^{-q}} for n = 3q + r.
SheafClass solver_d(const SheafClass& d0, const SheafClass& d1, const SheafClass& d2,
                    const Point& t, long n);

bool need2_holds(const Point& a, const Point& b, const Point& c, const SheafClass& n,
                 const Point& t);
bool need1_holds(const Point& a, const Point& b, const Point& c, const Point& d, const Point& e,
                 const Point& f, const Point& t);
// The sheaf forms of the same two conditions.
bool need2_sheaf_form(const Point& a, const Point& b, const Point& c, const SheafClass& n,
                      const Point& t);
bool need1_sheaf_form(const Point& a, const Point& b, const Point& c, const Point& d,
                      const Point& e, const Point& f, const Point& t);

SolverResult solve_sklyanin(const Point& a, const Point& b, const Point& c, const Point& d,
                            const Point& e, const Point& f, const SheafClass& n, const Point& t,
                            bool smooth = true, long window = 9);

}  // namespace nckit
