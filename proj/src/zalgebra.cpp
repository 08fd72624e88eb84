#include "nckit/zalgebra.hpp"

#include "nckit/error.hpp"
#include "nckit/sklyanin_spaces.hpp"

namespace nckit {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace

const ZGenerator& StandardZAlgebra::at(long n) const {
    auto it = gens.find(n);
    if (it == gens.end())
        throw input_error("outside-window", "no generator A_{" + std::to_string(n + 1) + "," +
                                                std::to_string(n) + "} in the table");
    return it->second;
}

long StandardZAlgebra::lo() const {
    if (gens.empty()) throw input_error("empty-table", "Z-algebra table is empty");
    return gens.begin()->first;
}

long StandardZAlgebra::hi() const {
    if (gens.empty()) throw input_error("empty-table", "Z-algebra table is empty");
    return gens.rbegin()->first;
}

ZGenerator compose(const StandardZAlgebra& a, long i, long j) {
    if (i < j) throw input_error("bad-index", "A_{i,j} needs i >= j");
    ZGenerator acc{SheafClass::trivial(), 0};
    // (u t^d)(v t^d') = u tau^d(v) t^(d+d'), accumulated from the left.
    for (long k = i - 1; k >= j; --k) {
        const ZGenerator& g = a.at(k);
        acc.V = tensor(acc.V, pullback(g.V, a.base_tau, acc.d));
        acc.d += g.d;
    }
    return acc;
}

Normalization normalize(const StandardZAlgebra& a) {
    Normalization out;
    out.algebra.base_tau = a.base_tau;
    const long lo = a.lo(), hi = a.hi();
    if (lo > 0 || hi < 1)
        throw input_error("bad-window", "normalization needs generators at indices 0 and 1");
    out.e[1] = 0;
    for (long n = 2; n <= hi + 1; ++n) out.e[n] = out.e[n - 1] - a.at(n - 1).d;
    long acc = 0;
    for (long n = 0; n >= lo; --n) {
        acc += a.at(n).d;
        out.e[n] = acc;
    }
    for (long n = lo; n <= hi; ++n)
        out.algebra.gens[n] = ZGenerator{pullback(a.at(n).V, a.base_tau, out.e.at(n + 1)), 0};
    return out;
}

StandardZAlgebra veronese(const StandardZAlgebra& a, long d, long m) {
    if (d < 1) throw input_error("bad-veronese", "Veronese step must be positive");
    StandardZAlgebra out;
    out.base_tau = a.base_tau;
    for (long n = floor_div(a.lo() - m + d - 1, d); m + d * (n + 1) - 1 <= a.hi(); ++n)
        out.gens[n] = compose(a, m + d * (n + 1), m + d * n);
    return out;
}

bool check_periodic(const StandardZAlgebra& a, long d) {
    if (d == 0) return true;
    for (const auto& [n, g] : a.gens) {
        auto it = a.gens.find(n + d);
        if (it != a.gens.end() && !(it->second == g)) return false;
    }
    return true;
}

bool binomial_consistency(const std::map<std::pair<long, long>, long>& dims) {
    for (const auto& [ij, dim] : dims)
        if (dim != SklyaninContext::dim_S(ij.first - ij.second)) return false;
    return true;
}

StandardZAlgebra sklyanin_table(const Point& a, const Point& b, const Point& c, const Point& d,
                                const Point& e, const Point& f, const SheafClass& n,
                                const Point& t, long lo, long hi) {
    if (n.degree != 9) throw input_error("wrong-degree", "N must have degree 9");
    Divisor shifted_def{translate(d, t, -1), translate(e, t, -1), translate(f, t, -1)};
    const SheafClass g0 = twist(twist(n, shifted_def, -1), Divisor{a, b, c}, -1);
    const SheafClass g1 = SheafClass::of_divisor(Divisor{a, b, c});
    const SheafClass g2 = SheafClass::of_divisor(Divisor{d, e, f});
    StandardZAlgebra out;
    out.base_tau = t;
    for (long k = lo; k <= hi; ++k) {
        switch (floor_mod(k, 3)) {
            case 0: out.gens[k] = {g0, 1}; break;
            case 1: out.gens[k] = {g1, 0}; break;
            default: out.gens[k] = {g2, 0}; break;
        }
    }
    return out;
}

std::map<std::pair<long, long>, long> dims_from_matrix(const SeriesMatrix& m, long lo, long hi) {
    std::map<std::pair<long, long>, long> out;
    for (long mm = lo; mm <= hi; ++mm)
        for (long nn = lo; nn <= hi; ++nn)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out[{3 * mm + i, 3 * nn + j}] = m[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                                        .coefficient(mm - nn);
    return out;
}

SheafClass solver_d(const SheafClass& d0, const SheafClass& d1, const SheafClass& d2,
                    const Point& t, long n) {
    const long q = floor_div(n, 3);
    const long r = n - 3 * q;
    const SheafClass& base = r == 0 ? d0 : (r == 1 ? d1 : d2);
    return pullback(base, t, -q);
}

bool need2_holds(const Point& a, const Point& b, const Point& c, const SheafClass& n,
                 const Point& t) {
    return n.degree == 9 && n.sum + Rational(3) * t == Rational(3) * (a + b + c);
}

bool need1_holds(const Point& a, const Point& b, const Point& c, const Point& d, const Point& e,
                 const Point& f, const Point& t) {
    return a + b + c + t == d + e + f;
}

bool need2_sheaf_form(const Point& a, const Point& b, const Point& c, const SheafClass& n,
                      const Point& t) {
    SheafClass base = SheafClass::of_divisor(Divisor{translate(a, t, -1), b, c});
    return is_isomorphic(n, tensor(base, tensor(base, base)));
}

bool need1_sheaf_form(const Point& a, const Point& b, const Point& c, const Point& d,
                      const Point& e, const Point& f, const Point& t) {
    return is_isomorphic(SheafClass::of_divisor(Divisor{translate(a, t, 1), b, c}),
                         SheafClass::of_divisor(Divisor{d, e, f}));
}

SolverResult solve_sklyanin(const Point& a, const Point& b, const Point& c, const Point& d,
                            const Point& e, const Point& f, const SheafClass& n, const Point& t,
                            bool smooth, long window) {
    if (n.degree != 9)
        throw Error("wrong-degree", "sklyanin-solver",
                    "N has degree " + std::to_string(n.degree) + ", expected 9",
                    ErrorKind::input);
    if (!smooth)
        throw Error("polynomial-extension-branch", "sklyanin-solver",
                    "the algebra is not smooth; only the degenerate B[z] branch remains");
    SolverResult out;
    out.checks["need2"] = need2_holds(a, b, c, n, t);
    if (!out.checks["need2"])
        throw Error("need2-failed", "sklyanin-solver",
                    "sum N + 3t = " + (n.sum + Rational(3) * t).str() + " but 3(a+b+c) = " +
                        (Rational(3) * (a + b + c)).str());
    out.checks["need1"] = need1_holds(a, b, c, d, e, f, t);
    if (!out.checks["need1"])
        throw Error("need1-failed", "sklyanin-solver",
                    "a+b+c+t = " + (a + b + c + t).str() + " but d+e+f = " + (d + e + f).str());

    const Point s = Rational(1, 3) * t;
    Divisor shifted_def{translate(d, t, -1), translate(e, t, -1), translate(f, t, -1)};
    const SheafClass L = twist(twist(n, shifted_def, -1), Divisor{a, b, c}, -1);
    const SheafClass d1 = SheafClass::of_divisor(Divisor{a, b, c});
    const SheafClass d2 = SheafClass::of_divisor(Divisor{d, e, f});
    out.checks["sigma-cubed"] = Rational(3) * s == t;
    out.checks["L-sigma-1"] = is_isomorphic(pullback(L, s, -1), d1);
    out.checks["L-sigma-2"] = is_isomorphic(pullback(L, s, -2), d2);
    bool window_ok = true;
    for (long k = -window; k <= window; ++k) {
        if (!is_isomorphic(solver_d(L, d1, d2, t, k), pullback(L, s, -k))) window_ok = false;
        out.window.push_back(k);
    }
    out.checks["D-equals-F-window"] = window_ok;
    for (const auto& [name, ok] : out.checks)
        if (!ok)
            throw Error("verification-failed", "sklyanin-solver", "check " + name + " failed");
    out.data = SklyaninData{s, L};
    return out;
}

}  // namespace nckit
