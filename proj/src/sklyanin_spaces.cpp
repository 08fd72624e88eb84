#include "nckit/sklyanin_spaces.hpp"

#include <algorithm>

#include "nckit/error.hpp"
#include "nckit/hilbert_series.hpp"

namespace nckit {

SklyaninContext::SklyaninContext(SheafClass l, Point s) : L(std::move(l)), sigma(std::move(s)) {
    if (L.degree != 3)
        throw input_error("invalid-sheaf-degree",
                          "a Sklyanin context needs a degree 3 class, got degree " +
                              std::to_string(L.degree));
}

long SklyaninContext::dim_S(long m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

std::string tri_str(Tri t) {
    switch (t) {
        case Tri::no: return "false";
        case Tri::yes: return "true";
        case Tri::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out = k < 0 ? "⁻" : "";
    std::string dec = std::to_string(k < 0 ? -k : k);
    for (char c : dec) out += digits[c - '0'];
    return out;
}

std::string subscript(int k) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(k)) out += c == '-' ? "₋" : digits[c - '0'];
    return out;
}

std::string power_prefix(int k) {
    if (k == 0) return "";
    if (k == 1) return "σ";
    if (k == 3) return "τ";
    if (k == -3) return "τ⁻¹";
    return "σ" + superscript(k);
}

Divisor divisor_of(const std::vector<LabeledPoint>& pts) {
    Divisor d;
    for (const auto& p : pts) d.add(p.value);
    return d;
}

bool is_full(const SectionSpace& x, int m) {
    return x.degree == m && x.vdef == Tri::yes && x.vanishing && x.vanishing->empty();
}

std::optional<Point> as_w(const SectionSpace& x) {
    if (x.degree == 1 && x.vdef == Tri::yes && x.vanishing && x.vanishing->degree() == 1 &&
        x.vanishing->terms().size() == 1)
        return x.vanishing->terms().begin()->first;
    return std::nullopt;
}

std::optional<Divisor> as_v(const SectionSpace& x) {
    if (x.degree == 2 && x.vdef == Tri::yes && x.vanishing && x.vanishing->degree() >= 0 &&
        x.vanishing->degree() <= 5) {
        for (const auto& kv : x.vanishing->terms())
            if (kv.second < 0) return std::nullopt;
        return *x.vanishing;
    }
    return std::nullopt;
}

bool is_scalar(const SectionSpace& x) {
    return x.word.size() == 1 &&
           (x.word[0].kind == Atom::Kind::line || x.word[0].kind == Atom::Kind::line_inv);
}

SectionSpace exact(SectionSpace s, long dim, Tri vdef, std::string rule) {
    s.dim_lo = s.dim_hi = dim;
    s.vdef = vdef;
    s.rules.push_back(std::move(rule));
    return s;
}

}  // namespace

LabeledPoint LabeledPoint::named(const SklyaninContext& ctx, const Point& p,
                                 const std::string& name, int power) {
    return {translate(p, ctx.sigma, power), name, power};
}

LabeledPoint LabeledPoint::shifted(const SklyaninContext& ctx, int k) const {
    return {translate(value, ctx.sigma, k), base, power + k};
}

std::string LabeledPoint::label() const { return power_prefix(power) + base; }

int Atom::degree() const {
    switch (kind) {
        case Kind::full: return m;
        case Kind::w: return 1;
        case Kind::v: return 2;
        case Kind::line: return 1;
        case Kind::line_inv: return -1;
    }
    return 0;
}

std::string Atom::str() const {
    auto join = [&]() {
        std::string s;
        for (size_t i = 0; i < pts.size(); ++i) s += (i ? "+" : "") + pts[i].label();
        return s;
    };
    switch (kind) {
        case Kind::full: return "S" + subscript(m);
        case Kind::w: return "W(" + join() + ")";
        case Kind::v: return "V(" + join() + ")";
        case Kind::line: return name;
        case Kind::line_inv: return name + "⁻¹";
    }
    return "?";
}

long SectionSpace::dim() const {
    if (!exact())
        throw input_error("inexact-dimension", "dimension of " + word_str() + " is only bounded");
    return dim_lo;
}

std::string SectionSpace::word_str() const {
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) s += (i ? "·" : "") + word[i].str();
    return s;
}

std::string SectionSpace::str() const {
    std::string d = exact() ? std::to_string(dim_lo)
                            : std::to_string(dim_lo) + ".." + std::to_string(dim_hi);
    return word_str() + " [dim " + d + ", vdef=" + tri_str(vdef) + "]";
}

long vanishing_bound(const SklyaninContext& ctx, int m, const Divisor& d) {
    return h0(twist(ctx.Lm(m), d, -1)) + SklyaninContext::dim_S(m - 3);
}

SectionSpace full(const SklyaninContext&, int m) {
    SectionSpace s;
    s.degree = m;
    s.dim_lo = s.dim_hi = SklyaninContext::dim_S(m);
    s.vanishing = Divisor();
    s.vdef = Tri::yes;
    s.word.push_back(Atom{Atom::Kind::full, m, {}, ""});
    return s;
}

SectionSpace w(const SklyaninContext&, const LabeledPoint& a) {
    SectionSpace s;
    s.degree = 1;
    s.dim_lo = s.dim_hi = 2;
    s.vanishing = Divisor::single(a.value);
    s.vdef = Tri::yes;
    s.word.push_back(Atom{Atom::Kind::w, 0, {a}, ""});
    return s;
}

SectionSpace v(const SklyaninContext&, const std::vector<LabeledPoint>& d) {
    if (d.size() >= 6)
        throw input_error("divisor-too-large",
                          "V(D) needs deg D <= 5, got " + std::to_string(d.size()));
    SectionSpace s;
    s.degree = 2;
    s.dim_lo = s.dim_hi = 6 - static_cast<long>(d.size());
    s.vanishing = divisor_of(d);
    s.vdef = Tri::yes;
    s.word.push_back(Atom{Atom::Kind::v, 0, d, ""});
    return s;
}

SectionSpace w(const SklyaninContext& ctx, const Point& a) {
    return w(ctx, LabeledPoint{a, "[" + a.str() + "]", 0});
}

SectionSpace v(const SklyaninContext& ctx, const Divisor& d) {
    for (const auto& kv : d.terms())
        if (kv.second < 0)
            throw input_error("bad-divisor", "V(D) needs an effective divisor");
    std::vector<LabeledPoint> pts;
    for (const auto& p : d.points()) pts.push_back(LabeledPoint{p, "[" + p.str() + "]", 0});
    return v(ctx, pts);
}

Point third_point(const SklyaninContext& ctx, const Point& a, const Point& b) {
    return ctx.L.sum - a - b;
}

SectionSpace line_through(const SklyaninContext& ctx, const LabeledPoint& a,
                          const LabeledPoint& b, const std::string& name) {
    SectionSpace s;
    s.degree = 1;
    s.dim_lo = s.dim_hi = 1;
    s.vanishing = Divisor{a.value, b.value, third_point(ctx, a.value, b.value)};
    s.vdef = Tri::yes;
    s.word.push_back(Atom{Atom::Kind::line, 0, {a, b}, name});
    return s;
}

SectionSpace line_inverse(const SklyaninContext&, const LabeledPoint& a, const LabeledPoint& b,
                          const std::string& name) {
    SectionSpace s;
    s.degree = -1;
    s.dim_lo = s.dim_hi = 1;
    s.vdef = Tri::no;
    s.word.push_back(Atom{Atom::Kind::line_inv, 0, {a, b}, name});
    return s;
}

SectionSpace mul(const SklyaninContext& ctx, const SectionSpace& x, const SectionSpace& y) {
    SectionSpace r;
    r.degree = x.degree + y.degree;
    r.word = x.word;
    r.word.insert(r.word.end(), y.word.begin(), y.word.end());
    if (x.vanishing && y.vanishing)
        r.vanishing = *x.vanishing + y.vanishing->translated(ctx.sigma, -x.degree);
    const int m = r.degree;
    auto sig = [&](const Point& p, long k) { return translate(p, ctx.sigma, k); };

    // Multiplying by a single nonzero element of the graded quotient ring is injective.
    if (is_scalar(x) || is_scalar(y)) {
        const SectionSpace& other = is_scalar(x) ? y : x;
        r.dim_lo = other.dim_lo;
        r.dim_hi = other.dim_hi;
        r.vdef = Tri::unknown;
        r.rules.push_back("domain-injective");
        return r;
    }
    if (x.vdef == Tri::yes && y.vdef == Tri::yes && x.vanishing && y.vanishing &&
        x.vanishing->empty() && y.vanishing->empty() && x.degree >= 0 && y.degree >= 0)
        return exact(r, SklyaninContext::dim_S(m), Tri::yes, "graded-generation");

    auto wx = as_w(x), wy = as_w(y);
    if (wx && wy) {
        const Point& b = *wx;
        const Point& c = *wy;
        if (c != sig(b, -2)) return exact(r, 4, Tri::yes, "product-ww");
        return exact(r, 3, Tri::no, "product-ww");
    }
    if (x.word.size() == 2 && x.word[0].kind == Atom::Kind::w &&
        x.word[1].kind == Atom::Kind::w && is_full(y, 1)) {
        const Point& b = x.word[0].pts[0].value;
        const Point& c = x.word[1].pts[0].value;
        if (c != sig(b, -2)) return exact(r, 8, Tri::yes, "product-ww");
        return exact(r, 7, Tri::no, "product-ww");
    }
    auto vx = as_v(x), vy = as_v(y);
    if (vx && is_full(y, 1) && (vx->degree() == 2 || vx->degree() == 3)) {
        if (vx->degree() == 2) return exact(r, 8, Tri::yes, "product-vs");
        auto p = vx->points();
        if (collinear_wrt(ctx.L, p[0], p[1], p[2])) return exact(r, 6, Tri::no, "product-vs");
        return exact(r, 7, Tri::yes, "product-vs");
    }
    if (vy && is_full(x, 1) && (vy->degree() == 2 || vy->degree() == 3)) {
        if (vy->degree() == 2) return exact(r, 8, Tri::yes, "product-vs");
        auto p = vy->points();
        if (collinear_wrt(ctx.L, sig(p[0], 1), sig(p[1], 1), sig(p[2], 1)))
            return exact(r, 6, Tri::no, "product-vs");
        return exact(r, 7, Tri::yes, "product-vs");
    }
    if (wx && vy && vy->degree() == 2) {
        auto p = vy->points();
        Point a2 = sig(*wx, -2);
        if (a2 == p[0] || a2 == p[1]) return exact(r, 6, Tri::no, "product-wv");
        return exact(r, 7, Tri::yes, "product-wv");
    }
    if (vx && wy && vx->degree() == 2) {
        auto p = vx->points();
        Point c1 = sig(*wy, 1);
        if (c1 == p[0] || c1 == p[1]) return exact(r, 6, Tri::no, "product-wv");
        return exact(r, 7, Tri::yes, "product-wv");
    }
    // W(a)S_1 contains W(a)W(c) = V(a + σ⁻¹c) for every c != σ⁻²a; two such
    // 4-dimensional spaces with different divisors span the 5-dimensional bound.
    if ((wx && is_full(y, 1)) || (wy && is_full(x, 1)))
        return exact(r, 5, Tri::yes, "product-ws");

    r.vdef = Tri::unknown;
    r.dim_lo = std::max(x.dim_lo, y.dim_lo);
    long hi = x.dim_hi * y.dim_hi;
    if (m >= 0) hi = std::min(hi, SklyaninContext::dim_S(m));
    if (r.vanishing && m >= 0) hi = std::min(hi, vanishing_bound(ctx, m, *r.vanishing));
    r.dim_hi = std::max(hi, r.dim_lo);
    r.rules.push_back("vanishing-bound");
    return r;
}

SectionSpace rewrite_commute(const SklyaninContext& ctx, const SectionSpace& x) {
    auto fail = [&]() {
        return input_error("no-rule-applies", "no commutation rule matches " + x.word_str());
    };
    if (x.word.size() != 2) throw fail();
    const Atom& a0 = x.word[0];
    const Atom& a1 = x.word[1];
    auto shift_all = [&](Atom a, int k) {
        for (auto& p : a.pts) p = p.shifted(ctx, k);
        return a;
    };
    SectionSpace r = x;
    bool s0 = a0.kind == Atom::Kind::full && a0.m == 1;
    bool s1 = a1.kind == Atom::Kind::full && a1.m == 1;
    if (s0 && a1.kind == Atom::Kind::w) {
        r.word = {shift_all(a1, -1), a0};
    } else if (a0.kind == Atom::Kind::w && s1) {
        r.word = {a1, shift_all(a0, 1)};
    } else if (a0.kind == Atom::Kind::v && a0.pts.size() == 2 && s1) {
        r.word = {a1, shift_all(a0, 1)};
    } else if (s0 && a1.kind == Atom::Kind::v && a1.pts.size() == 2) {
        r.word = {shift_all(a1, -1), a0};
    } else {
        throw fail();
    }
    r.rules.push_back("commute-s1");
    return r;
}

bool provably_equal(const SectionSpace& x, const SectionSpace& y) {
    return x.degree == y.degree && x.vdef == Tri::yes && y.vdef == Tri::yes && x.vanishing &&
           y.vanishing && *x.vanishing == *y.vanishing;
}

BlowupScene::BlowupScene(SklyaninContext c, std::vector<Point> pts, std::vector<std::string> nm)
    : ctx(std::move(c)), points(std::move(pts)), names(std::move(nm)) {
    if (points.size() != names.size() || points.size() < 2 || points.size() > 3)
        throw input_error("bad-scene", "a blowup scene has two or three named points");
}

LabeledPoint BlowupScene::labeled(int i, int power) const {
    return LabeledPoint::named(ctx, points.at(static_cast<size_t>(i)), names.at(static_cast<size_t>(i)),
                               power);
}

long BlowupScene::dim_R1() const {
    return elliptic_algebra_series(9 - size()).coefficient(1);
}

std::string line_id(const BlowupScene& scene, LineRef ref) {
    if (ref.kind == LineRef::Kind::exceptional) return "L_" + scene.names.at(static_cast<size_t>(ref.index));
    if (scene.size() == 2) return "L_" + scene.third_name;
    return "L_" + scene.names.at(static_cast<size_t>(ref.index)) + "'";
}

namespace {

void check_ref(const BlowupScene& scene, LineRef ref) {
    bool ok = ref.index >= 0 && ref.index < 3;
    if (ref.kind == LineRef::Kind::exceptional) ok = ok && ref.index < scene.size();
    if (ref.kind == LineRef::Kind::strict && scene.size() == 2) ok = ok && ref.index == 2;
    if (!ok) throw input_error("bad-line", "no such line in this scene");
}

// Indices of the scene points other than i.
std::pair<int, int> others(int i) {
    if (i == 0) return {1, 2};
    if (i == 1) return {0, 2};
    return {0, 1};
}

}  // namespace

Point line_divisor(const BlowupScene& scene, LineRef ref) {
    check_ref(scene, ref);
    if (ref.kind == LineRef::Kind::exceptional)
        return translate(scene.points[static_cast<size_t>(ref.index)], scene.ctx.tau(), 1);
    auto [j, k] = others(ref.index);
    return third_point(scene.ctx, scene.points[static_cast<size_t>(j)], scene.points[static_cast<size_t>(k)]);
}

std::vector<LineRef> scene_lines(const BlowupScene& scene) {
    if (scene.size() == 2) return {LineRef::exc(0), LineRef::exc(1), LineRef::str(2)};
    return {LineRef::exc(0), LineRef::exc(1), LineRef::exc(2),
            LineRef::str(0), LineRef::str(1), LineRef::str(2)};
}

namespace {

std::string line_symbol(const BlowupScene& scene, int j, int k) {
    return "x_{" + scene.names[static_cast<size_t>(j)] + scene.names[static_cast<size_t>(k)] + "}";
}

SectionSpace settle_line_ideal(const BlowupScene& scene, SectionSpace s) {
    long expected = scene.dim_R1() - 2;
    if (expected < s.dim_lo || expected > s.dim_hi)
        throw Error("verification-failed", "line-ideal-codimension",
                    "generator space " + s.str() + " cannot have dimension " +
                        std::to_string(expected));
    if (!s.exact()) {
        s.dim_lo = s.dim_hi = expected;
        s.rules.push_back("line-ideal-codimension");
    }
    return s;
}

}  // namespace

SectionSpace cremona_line_ideal_degree1(const BlowupScene& scene, LineRef ref) {
    check_ref(scene, ref);
    const auto& ctx = scene.ctx;
    if (ref.kind == LineRef::Kind::exceptional) {
        int i = ref.index;
        std::vector<LabeledPoint> d;
        for (int j = 0; j < scene.size(); ++j) d.push_back(scene.labeled(j, 1));
        if (scene.size() == 2) {
            // the point itself comes first, matching the printed generator
            if (i == 1) std::swap(d[0], d[1]);
        } else {
            std::rotate(d.begin(), d.begin() + i, d.end());
        }
        return settle_line_ideal(scene, mul(ctx, w(ctx, scene.labeled(i, 3)), v(ctx, d)));
    }
    if (scene.size() == 2) {
        auto x = line_through(ctx, scene.labeled(0), scene.labeled(1), line_symbol(scene, 0, 1));
        return settle_line_ideal(scene, mul(ctx, x, full(ctx, 2)));
    }
    auto [j, k] = others(ref.index);
    auto x = line_through(ctx, scene.labeled(j), scene.labeled(k), line_symbol(scene, j, k));
    auto ws = mul(ctx, w(ctx, scene.labeled(ref.index, 1)), full(ctx, 1));
    return settle_line_ideal(scene, mul(ctx, x, ws));
}

HomWitness hom_dim_degree1(const BlowupScene& scene, LineRef a, LineRef b) {
    check_ref(scene, a);
    check_ref(scene, b);
    const auto& ctx = scene.ctx;
    auto unsupported = [&]() {
        return Error("unsupported-pair", "hom-dimension-criterion",
                     "no degree one Hom witness for (" + line_id(scene, a) + ", " +
                         line_id(scene, b) + ")");
    };
    if (a == b) throw unsupported();
    using K = LineRef::Kind;
    SectionSpace wit;
    std::string rule;
    if (scene.size() == 3) {
        if (a.kind == K::exceptional && b.kind == K::exceptional) {
            int j = b.index;
            int k = 3 - a.index - b.index;
            wit = mul(ctx, w(ctx, scene.labeled(j, 3)),
                      v(ctx, {scene.labeled(j, 1), scene.labeled(k, 1)}));
            rule = "witness-exceptional-pair";
        } else if (a.kind == K::exceptional && b.kind == K::strict && a.index == b.index) {
            auto [j, k] = others(a.index);
            wit = mul(ctx,
                      line_through(ctx, scene.labeled(j), scene.labeled(k), line_symbol(scene, j, k)),
                      full(ctx, 2));
            rule = "witness-exceptional-strict";
        } else if (a.kind == K::strict && b.kind == K::strict) {
            int i = a.index, j = b.index, k = 3 - a.index - b.index;
            auto [xi, xk] = others(j);
            auto [yj, yk] = others(i);
            auto y = line_through(ctx, scene.labeled(xi), scene.labeled(xk), line_symbol(scene, xi, xk));
            auto xinv = line_inverse(ctx, scene.labeled(yj), scene.labeled(yk), line_symbol(scene, yj, yk));
            auto core = mul(ctx, w(ctx, scene.labeled(j, 1)),
                            v(ctx, {scene.labeled(j, -1), scene.labeled(k, -1)}));
            wit = mul(ctx, y, mul(ctx, core, xinv));
            rule = "witness-strict-pair";
        } else {
            throw unsupported();
        }
    } else {
        if (a.kind == K::exceptional && b.kind == K::exceptional) {
            int j = b.index;
            wit = mul(ctx, mul(ctx, w(ctx, scene.labeled(j, 3)), w(ctx, scene.labeled(j, 1))),
                      full(ctx, 1));
            rule = "witness-exceptional-pair";
        } else if (a.kind == K::exceptional && b.kind == K::strict) {
            wit = mul(ctx,
                      line_through(ctx, scene.labeled(0), scene.labeled(1), line_symbol(scene, 0, 1)),
                      full(ctx, 2));
            rule = "witness-exceptional-line";
        } else {
            throw unsupported();
        }
    }
    return {wit.dim(), wit, rule};
}

}  // namespace nckit
