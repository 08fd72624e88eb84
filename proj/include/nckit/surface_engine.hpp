#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nckit/hilbert_series.hpp"
#include "nckit/picard.hpp"
#include "nckit/sklyanin_spaces.hpp"
#include "nckit/zalgebra.hpp"

namespace nckit {

struct LineClass {
    std::string id;
    Point div;
    std::optional<long> self_int;
    std::string tag;  // exceptional, strict-transform, ruling, transported
    long serial = 0;
};

struct IdealStep {
    int i = 0;
    std::string contracted;
    HilbertSeries hilb_before;  // hilb K
    HilbertSeries hilb_after;   // hilb of the blown-down ideal
};

// A line ideal that met a contracted line with intersection one.
struct IdealClass {
    std::string id;
    Divisor divisor;
    std::optional<HilbertSeries> deficit;  // hilb R - hilb K
    std::map<std::string, long> origin_entries;
    std::vector<IdealStep> steps;
};

struct LogEntry {
    std::string rule;
    std::string detail;
};

// Binds the lines of an algebra to a blowup scene of a Sklyanin algebra so
// degree one Hom witnesses can be evaluated.
struct SceneBinding {
    BlowupScene scene;
    std::map<std::string, LineRef> refs;
};

struct EllipticAlgebra {
    Point tau;
    SheafClass M;
    bool smooth = true;
    std::vector<LineClass> lines;
    std::vector<IdealClass> ideals;
    std::map<std::pair<std::string, std::string>, long> entries;
    std::map<std::pair<std::string, std::string>, std::string> entry_rules;
    std::vector<LogEntry> log;
    std::optional<SceneBinding> binding;
    long next_serial = 0;

    long degree() const { return M.degree; }
    HilbertSeries hilb() const { return elliptic_algebra_series(static_cast<int>(M.degree)); }
    long dim1() const { return hilb().coefficient(1); }

    bool has_line(const std::string& id) const;
    const LineClass& line(const std::string& id) const;
    LineClass& line(const std::string& id);
    const IdealClass& ideal(const std::string& id) const;
    std::optional<long> entry(const std::string& a, const std::string& b) const;
    std::string entry_rule(const std::string& a, const std::string& b) const;
    // Records a symmetric entry; conflicting values are a verification failure.
    void set_entry(const std::string& a, const std::string& b, long v, const std::string& rule);
    void add_line(LineClass l, const std::string& rule);
    void note(const std::string& rule, const std::string& detail) { log.push_back({rule, detail}); }

    bool same_descriptor(const EllipticAlgebra& o) const {
        return tau == o.tau && M == o.M && smooth == o.smooth;
    }
};

EllipticAlgebra elliptic_algebra(const Point& tau, const SheafClass& m, bool smooth = true);
// T = S^(3) with S/(g) = B(E, L, sigma).
EllipticAlgebra sklyanin_algebra(const SklyaninData& t);

EllipticAlgebra blowup(const EllipticAlgebra& r, const Point& p, const std::string& line_id);
EllipticAlgebra blowdown(const EllipticAlgebra& r, const std::string& line_id);
// Stop tracking every line not in keep.
EllipticAlgebra restrict_lines(const EllipticAlgebra& r, const std::vector<std::string>& keep);

// Attach a scene after checking the algebra's (M, tau) and line divisors against it.
void bind_scene(EllipticAlgebra& r, const BlowupScene& scene,
                const std::map<std::string, LineRef>& refs);

// Self-intersection -1 of a strict transform line: End of its ideal has the
// Hilbert series of R.
long strict_line_self_intersection(EllipticAlgebra& r, const std::string& id);

long derive_intersection(EllipticAlgebra& r, const std::string& a, const std::string& b);

// Records the entry transported from a blowdown where both lines missed the
// contracted line.
void transport_disjoint(EllipticAlgebra& r, const std::string& contracted,
                        const EllipticAlgebra& down, const std::string& a, const std::string& b);

bool check_needneed(const EllipticAlgebra& r, const Point& p, const Point& q, const Point& r_pt);
// M(tau^-1 p + tau^-1 q) = O(tau^-1 p + tau^-1 q + tau^-1 r)^3.
bool check_need_sheaf_form(const EllipticAlgebra& r, const Point& p, const Point& q,
                           const Point& r_pt);

long intersection_additivity(std::optional<long> first, std::optional<long> second);

// The deficit of an ideal whose quotient mod g is the structure sheaf of a
// degree k divisor.
HilbertSeries ideal_deficit_for_divisor_degree(long k);

struct RecognitionResult {
    SklyaninData sklyanin;
    std::vector<Point> blowup_points;  // tau^-1 p, tau^-1 q
    EllipticAlgebra after_first;
    EllipticAlgebra final_algebra;
    std::vector<long> degrees;
    SolverResult solver;
    std::map<std::string, bool> hypotheses;
    std::string ideal_id;
};

RecognitionResult recognize_deg7(const EllipticAlgebra& r, const std::string& lp,
                                 const std::string& lq, const std::string& lr);

// Bl_{p,q} T with its exceptional lines, the strict line through p and q,
// and every intersection entry derived from degree one witnesses.
EllipticAlgebra two_point_blowup(const SklyaninData& t, const Point& p, const Point& q,
                                 const std::vector<std::string>& names = {"p", "q"},
                                 const std::string& third = "r");

struct CremonaResult {
    EllipticAlgebra blown_up;  // degree 6 with the hexagon
    std::vector<std::string> hexagon_ids;
    std::vector<std::vector<long>> hexagon;
    EllipticAlgebra after_first;  // degree 7
    RecognitionResult recognition;
    SklyaninData t_prime;
    std::vector<Point> new_points;  // p1, q1, r1
    Point iso_witness;
    bool iso_witness_ok = false;
    std::vector<long> degrees_forward;
    std::vector<long> degrees_backward;
    bool strong_genericity = false;
    bool six_distinct = false;
    std::vector<std::string> witnesses;
};

bool strongly_generic(const SklyaninContext& ctx, const std::vector<Point>& pts);

// Hexagon adjacency: diag -1, (x, y') = 1 for x != y, others 0.
std::vector<std::vector<long>> hexagon_pattern();

CremonaResult cremona(const SklyaninData& t, const std::vector<Point>& pts,
                      const std::vector<std::string>& names = {"p", "q", "r"});

struct QuadricData {
    Point alpha;
    SheafClass A;
    Point z;
    Point z_prime;
};

struct QuadricResult {
    EllipticAlgebra t_prime;
    EllipticAlgebra blown_up;
    RecognitionResult recognition;
    std::vector<long> degrees;
    Point expected_sigma;
    std::vector<std::string> witnesses;
};

// Cited constant: dim (K_y^*)_0 for the ruling ideals of a smooth quadric.
constexpr long kRulingDualDegreeZero = 2;

QuadricResult quadric_to_plane(const QuadricData& q, const Point& t);

}  // namespace nckit
