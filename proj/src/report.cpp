#include "nckit/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

#include "nckit/error.hpp"
#include "nckit/rational.hpp"
#include "nckit/sklyanin_spaces.hpp"

namespace nckit {

// ---------------------------------------------------------------- JSON

Json to_json(const Point& p) {
    Json j = Json::object();
    for (const auto& [g, c] : p.coeffs()) j[g] = rational_str(c);
    return j;
}

Json to_json(const Divisor& d) {
    Json j = Json::array();
    for (const auto& [p, m] : d.terms()) j.push_back({{"point", to_json(p)}, {"multiplicity", m}});
    return j;
}

Json to_json(const SheafClass& l) { return {{"degree", l.degree}, {"sum", to_json(l.sum)}}; }

Json to_json(const HilbertSeries& h, long terms) {
    Json c = Json::array();
    for (long long v : h.coefficients(terms)) c.push_back(v);
    return {{"series", h.str()}, {"coefficients", c}};
}

namespace {

Json opt_json(std::optional<long> v) { return v ? Json(*v) : Json("unknown"); }

Json ideal_json(const IdealClass& k) {
    Json steps = Json::array();
    for (const auto& s : k.steps)
        steps.push_back({{"i", s.i},
                         {"contracted", s.contracted},
                         {"hilb_before", s.hilb_before.str()},
                         {"hilb_after", s.hilb_after.str()},
                         {"increment", (s.hilb_after - s.hilb_before).str()}});
    return {{"id", k.id},
            {"divisor", to_json(k.divisor)},
            {"divisor_text", k.divisor.str()},
            {"deficit", k.deficit ? Json(k.deficit->str()) : Json("unknown")},
            {"steps", steps}};
}

}  // namespace

Json to_json(const LineClass& l) {
    return {{"id", l.id}, {"div", to_json(l.div)}, {"div_text", l.div.str()},
            {"self_int", opt_json(l.self_int)}, {"tag", l.tag}};
}

Json to_json(const EllipticAlgebra& r) {
    Json lines = Json::array();
    for (const auto& l : r.lines) lines.push_back(to_json(l));
    Json inter = Json::array();
    for (const auto& [k, v] : r.entries)
        inter.push_back({{"a", k.first}, {"b", k.second}, {"value", v}, {"rule", r.entry_rule(k.first, k.second)}});
    Json ideals = Json::array();
    for (const auto& k : r.ideals) ideals.push_back(ideal_json(k));
    return {{"degree", r.degree()}, {"tau", to_json(r.tau)},   {"M", to_json(r.M)},
            {"smooth", r.smooth},   {"hilb", r.hilb().str()}, {"lines", lines},
            {"intersections", inter}, {"ideals", ideals}};
}

Json to_json(const SklyaninData& s) {
    return {{"sigma_point", to_json(s.sigma)}, {"sigma_text", s.sigma.str()}, {"L", to_json(s.L)}};
}

Json to_json(const SolverResult& s) {
    return {{"sigma_point", to_json(s.data.sigma)},
            {"L", to_json(s.data.L)},
            {"checks", s.checks},
            {"window", {s.window.front(), s.window.back()}}};
}

Json to_json(const StandardZAlgebra& a) {
    Json rows = Json::array();
    for (const auto& [n, g] : a.gens) rows.push_back({{"n", n}, {"V", to_json(g.V)}, {"d", g.d}});
    return rows;
}

// ---------------------------------------------------------------- scene

namespace {

class SceneReader {
public:
    SceneReader(toml::table tbl, std::string source) : tbl_(std::move(tbl)), source_(std::move(source)) {
        read_generators();
        read_points();
    }

    const toml::table& table() const { return tbl_; }

    [[noreturn]] void fail(const std::string& field, const toml::node* node,
                           const std::string& msg) const {
        std::string where = source_;
        if (node && node->source().begin.line > 0)
            where += ":" + std::to_string(node->source().begin.line) + ":" +
                     std::to_string(node->source().begin.column);
        throw input_error("bad-scene-field", where + ": field '" + field + "': " + msg);
    }

    const toml::table* section(const std::string& name) const { return tbl_[name].as_table(); }

    const toml::table& require_section(const std::string& name) const {
        if (auto* t = section(name)) return *t;
        fail(name, nullptr, "missing section");
    }

    std::optional<std::string> opt_string(const toml::table& t, const std::string& key,
                                          const std::string& path) const {
        const toml::node* n = t.get(key);
        if (!n) return std::nullopt;
        if (auto s = n->value<std::string>()) return *s;
        fail(path + "." + key, n, "expected a string");
    }

    std::optional<long> opt_int(const toml::table& t, const std::string& key,
                                const std::string& path) const {
        const toml::node* n = t.get(key);
        if (!n) return std::nullopt;
        if (auto v = n->value<int64_t>()) return static_cast<long>(*v);
        fail(path + "." + key, n, "expected an integer");
    }

    std::optional<bool> opt_bool(const toml::table& t, const std::string& key,
                                 const std::string& path) const {
        const toml::node* n = t.get(key);
        if (!n) return std::nullopt;
        if (auto v = n->value<bool>()) return *v;
        fail(path + "." + key, n, "expected a boolean");
    }

    Point point(const toml::table& t, const std::string& key, const std::string& path) const {
        const toml::node* n = t.get(key);
        if (!n) fail(path + "." + key, nullptr, "missing point");
        return point_of(*n, path + "." + key);
    }

    Point point_or(const toml::table& t, const std::string& key, const std::string& path,
                   const Point& dflt) const {
        return t.get(key) ? point(t, key, path) : dflt;
    }

    std::vector<Point> point_list(const toml::table& t, const std::string& key,
                                  const std::string& path, std::vector<std::string>* names) const {
        const toml::node* n = t.get(key);
        if (!n || !n->is_array()) fail(path + "." + key, n, "expected an array of point names");
        std::vector<Point> out;
        const auto& arr = *n->as_array();
        for (size_t i = 0; i < arr.size(); ++i) {
            const std::string sub = path + "." + key + "[" + std::to_string(i) + "]";
            auto s = arr[i].value<std::string>();
            if (!s) fail(sub, &arr[i], "expected a point name");
            if (names) names->push_back(*s);
            out.push_back(point_of(arr[i], sub));
        }
        return out;
    }

    SheafClass sheaf(const toml::table& t, const std::string& key, const std::string& path,
                     long default_degree) const {
        const toml::node* n = t.get(key);
        if (!n) fail(path + "." + key, nullptr, "missing sheaf class");
        const auto* st = n->as_table();
        if (!st) fail(path + "." + key, n, "expected {degree = .., sum = ..}");
        SheafClass out;
        out.degree = opt_int(*st, "degree", path + "." + key).value_or(default_degree);
        out.sum = point_or(*st, "sum", path + "." + key, Point());
        return out;
    }

    Point point_of(const toml::node& n, const std::string& path) const {
        if (auto s = n.value<std::string>()) return expression(*s, &n, path);
        if (auto* t = n.as_table()) {
            Point::Coeffs c;
            for (const auto& [k, v] : *t) {
                const std::string g(k.str());
                if (!generators_.count(g)) fail(path + "." + g, &v, "undeclared generator");
                if (auto iv = v.value<int64_t>())
                    c[g] = Rational(*iv);
                else if (auto sv = v.value<std::string>()) {
                    try {
                        c[g] = parse_rational(*sv);
                    } catch (const Error& e) {
                        fail(path + "." + g, &v, e.detail());
                    }
                } else
                    fail(path + "." + g, &v, "expected \"num/den\"");
            }
            return Point(c);
        }
        fail(path, &n, "expected a point name, expression, or coefficient table");
    }

    // Linear expression over point names and generators: "A + 2*a - z", "-1/3*t".
    Point expression(const std::string& text, const toml::node* n, const std::string& path) const {
        Point out;
        size_t i = 0;
        auto skip = [&]() {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        bool first = true;
        while (true) {
            skip();
            if (i >= text.size()) break;
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip();
            } else if (!first) {
                fail(path, n, "expected '+' or '-' in '" + text + "'");
            }
            first = false;
            Rational coef = 1;
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                    ++j;
                coef = parse_rational(text.substr(i, j - i));
                i = j;
                skip();
                if (i < text.size() && text[i] == '*') {
                    ++i;
                    skip();
                } else {
                    fail(path, n, "bare constant in '" + text + "'");
                }
            }
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_' || text[j] == '\''))
                ++j;
            if (j == i) fail(path, n, "expected a name in '" + text + "'");
            const std::string name = text.substr(i, j - i);
            i = j;
            out += Rational(sign) * coef * lookup(name, n, path);
        }
        if (first) fail(path, n, "empty expression");
        return out;
    }

private:
    Point lookup(const std::string& name, const toml::node* n, const std::string& path) const {
        if (name == "0") return Point();
        if (auto it = points_.find(name); it != points_.end()) return it->second;
        if (resolving_.count(name)) fail(path, n, "cyclic point reference '" + name + "'");
        if (const auto* pts = tbl_["points"].as_table())
            if (const toml::node* def = pts->get(name)) {
                resolving_.insert(name);
                Point p = point_of(*def, "points." + name);
                resolving_.erase(name);
                points_[name] = p;
                return p;
            }
        if (generators_.count(name)) return Point::generator(name);
        fail(path, n, "unknown point '" + name + "'");
    }

    void read_generators() {
        const toml::node* n = tbl_.get("generators");
        if (!n) return;
        const auto* arr = n->as_array();
        if (!arr) fail("generators", n, "expected an array of names");
        for (const auto& g : *arr) {
            auto s = g.value<std::string>();
            if (!s || s->empty()) fail("generators", &g, "expected a generator name");
            if (!generators_.insert(*s).second) fail("generators", &g, "duplicate generator " + *s);
        }
    }

    void read_points() {
        if (const toml::node* norm = tbl_.get("normalization")) {
            auto s = norm->value<std::string>();
            if (!s || *s != "sum_L_zero") fail("normalization", norm, "only \"sum_L_zero\" is supported");
        }
        if (const auto* pts = tbl_["points"].as_table())
            for (const auto& [k, v] : *pts) lookup(std::string(k.str()), &v, "points");
    }

    toml::table tbl_;
    std::string source_;
    std::set<std::string> generators_;
    mutable std::map<std::string, Point> points_;
    mutable std::set<std::string> resolving_;
};

// ---------------------------------------------------------------- commands

SklyaninData sklyanin_from(const SceneReader& sc) {
    const auto& alg = sc.require_section("algebra");
    auto kind = sc.opt_string(alg, "kind", "algebra");
    if (kind != "sklyanin") sc.fail("algebra.kind", alg.get("kind"), "expected \"sklyanin\"");
    // sum L = 0 normalization: three collinear points sum to zero
    return SklyaninData{sc.point(alg, "sigma", "algebra"), SheafClass{3, Point()}};
}

Json series_matrix_json(const SeriesMatrix& m, long terms) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& h : row) r.push_back(to_json(h, terms));
        rows.push_back(r);
    }
    return rows;
}

const char* kReferenceMatrix[3][3] = {
    {"(1+7s+s^2)/(1-s)^3", "(6s+3s^2)/(1-s)^3", "(3s+6s^2)/(1-s)^3"},
    {"(3+6s)/(1-s)^3", "(1+7s+s^2)/(1-s)^3", "(6s+3s^2)/(1-s)^3"},
    {"(6+3s)/(1-s)^3", "(3+6s)/(1-s)^3", "(1+7s+s^2)/(1-s)^3"}};

struct SixPoints {
    Point a, b, c, d, e, f, t;
    SheafClass N;
};

SixPoints six_points(const SceneReader& sc, const toml::table& t, const std::string& path) {
    SixPoints s;
    s.a = sc.point(t, "a", path);
    s.b = sc.point(t, "b", path);
    s.c = sc.point(t, "c", path);
    s.d = sc.point(t, "d", path);
    s.e = sc.point(t, "e", path);
    s.f = sc.point(t, "f", path);
    s.t = sc.point(t, "t", path);
    s.N = sc.sheaf(t, "N", path, 9);
    return s;
}

Json cmd_hilbmatrix(const SceneReader& sc, long terms) {
    const auto& sec = sc.require_section("hilbmatrix");
    SixPoints s = six_points(sc, sec, "hilbmatrix");
    SeriesMatrix bar = hilb_matrix_bar(s.a, s.b, s.c, s.d, s.e, s.f, s.N, s.t);
    SeriesMatrix lifted = hilb_matrix(s.a, s.b, s.c, s.d, s.e, s.f, s.N, s.t);
    bool match = true;
    Json ref = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) {
            row.push_back(kReferenceMatrix[i][j]);
            if (lifted[i][j] != HilbertSeries::parse(kReferenceMatrix[i][j])) match = false;
        }
        ref.push_back(row);
    }
    return {{"matrix", series_matrix_json(lifted, terms)},
            {"matrix_bar", series_matrix_json(bar, terms)},
            {"orientation", "entry (i, j) is Hom(N_j, N_i); twists O(-a-b-c), O, O(d+e+f)"},
            {"reference", ref},
            {"reference_match", match},
            {"verdict", "ok"}};
}

Json hexagon_json(const CremonaResult& c) {
    return {{"ids", c.hexagon_ids},
            {"matrix", c.hexagon},
            {"pattern_match", c.hexagon == hexagon_pattern()}};
}

Json cmd_cremona(const SceneReader& sc, bool full) {
    SklyaninData T = sklyanin_from(sc);
    const auto& sec = sc.require_section("blowup");
    std::vector<std::string> names;
    auto pts = sc.point_list(sec, "points", "blowup", &names);
    if (pts.size() != 3) sc.fail("blowup.points", sec.get("points"), "expected three points");
    CremonaResult c = cremona(T, pts, names);
    Json out = {{"hexagon", hexagon_json(c)}, {"witnesses", c.witnesses}, {"verdict", "ok"}};
    out["R"] = to_json(c.blown_up);
    if (!full) return out;
    Json np = Json::object();
    for (int i = 0; i < 3; ++i) np[names[i] + "1"] = to_json(c.new_points[i]);
    Json np_text = Json::object();
    for (int i = 0; i < 3; ++i) np_text[names[i] + "1"] = c.new_points[i].str();
    out["degrees"] = {{"forward", c.degrees_forward}, {"backward", c.degrees_backward}};
    out["T"] = to_json(T);
    out["T_prime"] = to_json(c.t_prime);
    out["tau_preserved"] = c.t_prime.tau() == T.tau();
    out["new_points"] = np;
    out["new_points_text"] = np_text;
    out["iso_witness"] = {{"e", to_json(c.iso_witness)}, {"e_text", c.iso_witness.str()},
                          {"holds", c.iso_witness_ok}};
    out["strong_genericity"] = c.strong_genericity;
    out["six_points_distinct"] = c.six_distinct;
    out["recognition_hypotheses"] = c.recognition.hypotheses;
    return out;
}

Json recognition_json(const RecognitionResult& r) {
    Json bp = Json::array();
    for (const auto& p : r.blowup_points) bp.push_back(to_json(p));
    return {{"hypotheses", r.hypotheses},
            {"degrees", r.degrees},
            {"sklyanin", to_json(r.sklyanin)},
            {"blowup_points", bp},
            {"ideal", ideal_json(r.final_algebra.ideal(r.ideal_id))},
            {"solver", to_json(r.solver)}};
}

EllipticAlgebra explicit_algebra(const SceneReader& sc) {
    const auto& alg = sc.require_section("algebra");
    EllipticAlgebra R = elliptic_algebra(sc.point(alg, "tau", "algebra"), sc.sheaf(alg, "M", "algebra", 7),
                                         sc.opt_bool(alg, "smooth", "algebra").value_or(true));
    if (const auto* arr = sc.table()["lines"].as_array()) {
        for (size_t i = 0; i < arr->size(); ++i) {
            const std::string path = "lines[" + std::to_string(i) + "]";
            const auto* t = (*arr)[i].as_table();
            if (!t) sc.fail(path, &(*arr)[i], "expected a table");
            LineClass l;
            auto id = sc.opt_string(*t, "id", path);
            if (!id) sc.fail(path + ".id", nullptr, "missing line id");
            l.id = *id;
            l.div = sc.point(*t, "div", path);
            l.self_int = sc.opt_int(*t, "self_int", path);
            l.tag = sc.opt_string(*t, "tag", path).value_or("transported");
            try {
                R.add_line(std::move(l), "scene-input");
            } catch (const Error& e) {
                sc.fail(path + ".id", t->get("id"), e.detail());
            }
        }
    }
    if (const auto* arr = sc.table()["intersections"].as_array()) {
        for (size_t i = 0; i < arr->size(); ++i) {
            const std::string path = "intersections[" + std::to_string(i) + "]";
            const auto* t = (*arr)[i].as_table();
            if (!t) sc.fail(path, &(*arr)[i], "expected a table");
            auto a = sc.opt_string(*t, "a", path), b = sc.opt_string(*t, "b", path);
            auto v = sc.opt_int(*t, "value", path);
            if (!a || !b || !v) sc.fail(path, &(*arr)[i], "needs a, b and value");
            try {
                R.set_entry(*a, *b, *v, "scene-input");
            } catch (const Error& e) {
                sc.fail(path, &(*arr)[i], e.detail());
            }
        }
    }
    return R;
}

Json cmd_recognize(const SceneReader& sc) {
    const auto& alg = sc.require_section("algebra");
    auto kind = sc.opt_string(alg, "kind", "algebra").value_or("");
    EllipticAlgebra R;
    std::vector<std::string> ids;
    if (kind == "sklyanin") {
        SklyaninData T = sklyanin_from(sc);
        const auto& sec = sc.require_section("blowup");
        std::vector<std::string> names;
        auto pts = sc.point_list(sec, "points", "blowup", &names);
        if (pts.size() != 2) sc.fail("blowup.points", sec.get("points"), "expected two points");
        const std::string third = sc.opt_string(sec, "third", "blowup").value_or("r");
        R = two_point_blowup(T, pts[0], pts[1], names, third);
        ids = {"L_" + names[0], "L_" + names[1], "L_" + third};
    } else if (kind == "elliptic") {
        R = explicit_algebra(sc);
        const auto& sec = sc.require_section("recognize");
        const toml::node* n = sec.get("lines");
        const auto* arr = n ? n->as_array() : nullptr;
        if (!arr || arr->size() != 3) sc.fail("recognize.lines", n, "expected three line ids");
        for (const auto& x : *arr) {
            auto s = x.value<std::string>();
            if (!s) sc.fail("recognize.lines", &x, "expected a line id");
            ids.push_back(*s);
        }
    } else {
        sc.fail("algebra.kind", alg.get("kind"), "recognize needs kind sklyanin or elliptic");
    }
    Json out = {{"R", to_json(R)}, {"lines", ids}};
    out.update(recognition_json(recognize_deg7(R, ids[0], ids[1], ids[2])));
    out["needneed"] = true;
    out["verdict"] = "ok";
    return out;
}

Json cmd_quadric(const SceneReader& sc) {
    const auto& alg = sc.require_section("algebra");
    if (sc.opt_string(alg, "kind", "algebra") != "quadric")
        sc.fail("algebra.kind", alg.get("kind"), "expected \"quadric\"");
    QuadricData q{sc.point(alg, "alpha", "algebra"), sc.sheaf(alg, "A", "algebra", 4),
                  sc.point(alg, "z", "algebra"), sc.point(alg, "z_prime", "algebra")};
    const auto& sec = sc.require_section("quadric");
    QuadricResult r = quadric_to_plane(q, sc.point(sec, "t", "quadric"));
    Json out = recognition_json(r.recognition);
    out["degrees"] = r.degrees;
    out["T_prime"] = to_json(r.t_prime);
    out["R"] = to_json(r.blown_up);
    out["expected_sigma"] = to_json(r.expected_sigma);
    out["sigma_matches"] = r.recognition.sklyanin.sigma == r.expected_sigma;
    out["witnesses"] = r.witnesses;
    out["cited_constants"] = {{"dim (K_y^*)_0", kRulingDualDegreeZero}};
    out["verdict"] = "ok";
    return out;
}

StandardZAlgebra zalg_table(const SceneReader& sc, const toml::table& sec, const std::string& path,
                            std::optional<SixPoints>* six) {
    const std::string source = sc.opt_string(sec, "source", path).value_or("sklyanin");
    const long lo = sc.opt_int(sec, "lo", path).value_or(-6);
    const long hi = sc.opt_int(sec, "hi", path).value_or(6);
    if (lo > hi) sc.fail(path + ".lo", sec.get("lo"), "empty window");
    if (source == "sklyanin") {
        SixPoints s = six_points(sc, sec, path);
        if (six) *six = s;
        return sklyanin_table(s.a, s.b, s.c, s.d, s.e, s.f, s.N, s.t, lo, hi);
    }
    if (source != "explicit") sc.fail(path + ".source", sec.get("source"), "expected sklyanin or explicit");
    StandardZAlgebra a;
    a.base_tau = sc.point(sec, "tau", path);
    const toml::node* n = sec.get("gens");
    const auto* arr = n ? n->as_array() : nullptr;
    if (!arr) sc.fail(path + ".gens", n, "expected an array of {n, V, d}");
    for (size_t i = 0; i < arr->size(); ++i) {
        const std::string p = path + ".gens[" + std::to_string(i) + "]";
        const auto* t = (*arr)[i].as_table();
        if (!t) sc.fail(p, &(*arr)[i], "expected a table");
        auto idx = sc.opt_int(*t, "n", p);
        if (!idx) sc.fail(p + ".n", nullptr, "missing index");
        a.gens[*idx] = ZGenerator{sc.sheaf(*t, "V", p, 3), sc.opt_int(*t, "d", p).value_or(0)};
    }
    return a;
}

Json cmd_zalg_normalize(const SceneReader& sc) {
    const auto& sec = sc.require_section("zalgebra");
    std::optional<SixPoints> six;
    StandardZAlgebra a = zalg_table(sc, sec, "zalgebra", &six);
    Normalization nm = normalize(a);
    Normalization again = normalize(nm.algebra);
    bool idempotent = again.algebra.gens == nm.algebra.gens;
    for (const auto& [k, v] : again.e) idempotent = idempotent && v == 0;
    Json e = Json::array();
    for (const auto& [k, v] : nm.e) e.push_back({{"n", k}, {"e", v}});
    const long vd = sc.opt_int(sec, "veronese_d", "zalgebra").value_or(3);
    const long vm = sc.opt_int(sec, "veronese_m", "zalgebra").value_or(2);
    StandardZAlgebra ver = veronese(a, vd, vm);
    Json out = {{"table", to_json(a)},
                {"e", e},
                {"normalized", to_json(nm.algebra)},
                {"normalize_idempotent", idempotent},
                {"periodic", {{"1", check_periodic(a, 1)}, {"3", check_periodic(a, 3)}}},
                {"veronese", {{"d", vd}, {"m", vm}, {"table", to_json(ver)},
                              {"principal", check_periodic(ver, 1)}}},
                {"verdict", "ok"}};
    if (six) {
        SeriesMatrix m = hilb_matrix(six->a, six->b, six->c, six->d, six->e, six->f, six->N, six->t);
        auto dims = dims_from_matrix(m, -2, 2);
        out["binomial_consistency"] = binomial_consistency(dims);
    }
    return out;
}

Json cmd_zalg_solve(const SceneReader& sc) {
    const auto& sec = sc.require_section("solve");
    if (sec.get("from_blowup")) {
        SklyaninData T = sklyanin_from(sc);
        std::vector<std::string> names;
        auto pts = sc.point_list(sec, "from_blowup", "solve", &names);
        if (pts.size() != 2) sc.fail("solve.from_blowup", sec.get("from_blowup"), "expected two points");
        EllipticAlgebra R = two_point_blowup(T, pts[0], pts[1], names, "r");
        RecognitionResult rec = recognize_deg7(R, "L_" + names[0], "L_" + names[1], "L_r");
        const Point t = R.tau;
        const Point p = R.line("L_" + names[0]).div, q = R.line("L_" + names[1]).div,
                    r = R.line("L_r").div;
        Json in = {{"a", to_json(r)}, {"b", to_json(translate(p, t, -1))},
                   {"c", to_json(translate(q, t, -1))}, {"d", to_json(translate(r, t, -1))},
                   {"e", to_json(p)}, {"f", to_json(q)}, {"t", to_json(t)},
                   {"N", to_json(rec.final_algebra.M)}};
        return {{"inputs", in},
                {"solver", to_json(rec.solver)},
                {"sigma_is_t_over_3", rec.solver.data.sigma == Rational(1, 3) * t},
                {"verdict", "ok"}};
    }
    SixPoints s = six_points(sc, sec, "solve");
    const bool smooth = sc.opt_bool(sec, "smooth", "solve").value_or(true);
    const long window = sc.opt_int(sec, "window", "solve").value_or(9);
    SolverResult r = solve_sklyanin(s.a, s.b, s.c, s.d, s.e, s.f, s.N, s.t, smooth, window);
    return {{"solver", to_json(r)},
            {"sigma_is_t_over_3", r.data.sigma == Rational(1, 3) * s.t},
            {"verdict", "ok"}};
}

Json cmd_product_table(const SceneReader& sc) {
    SklyaninData T = sklyanin_from(sc);
    SklyaninContext ctx(T.L, T.sigma);
    const toml::table empty;
    const auto* secp = sc.section("product_table");
    const auto& sec = secp ? *secp : empty;
    const Point a = sc.point_or(sec, "a", "product_table", Point::generator("p"));
    const Point b = sc.point_or(sec, "b", "product_table", Point::generator("q"));
    const Point c = sc.point_or(sec, "c", "product_table", Point::generator("r"));
    auto sg = [&](const Point& x, long k) { return translate(x, ctx.sigma, k); };
    auto L = [&](const Point& x, const std::string& n, int pw = 0) {
        return LabeledPoint{x, n, pw};
    };
    struct Row {
        std::string name;
        SectionSpace generic, degenerate;
        long want_generic, want_degenerate;
        std::string toggle;
    };
    std::vector<Row> rows;
    const auto S1 = full(ctx, 1);
    // W(b)W(c): degenerate at c = σ⁻²b
    rows.push_back({"W(b)W(c)", mul(ctx, w(ctx, L(b, "b")), w(ctx, L(c, "c"))),
                    mul(ctx, w(ctx, L(b, "b")), w(ctx, L(sg(b, -2), "b", -2))), 4, 3, "c -> σ⁻²b"});
    rows.push_back({"W(b)W(c)S1", mul(ctx, mul(ctx, w(ctx, L(b, "b")), w(ctx, L(c, "c"))), S1),
                    mul(ctx, mul(ctx, w(ctx, L(b, "b")), w(ctx, L(sg(b, -2), "b", -2))), S1), 8, 7,
                    "c -> σ⁻²b"});
    const Point c_col = third_point(ctx, a, b);
    rows.push_back({"V(a+b+c)S1", mul(ctx, v(ctx, {L(a, "a"), L(b, "b"), L(c, "c")}), S1),
                    mul(ctx, v(ctx, {L(a, "a"), L(b, "b"), L(c_col, "c*")}), S1), 7, 6,
                    "c -> ⊖a⊖b (collinear)"});
    const Point c_scol = sg(third_point(ctx, sg(a, 1), sg(b, 1)), -1);
    rows.push_back({"S1V(a+b+c)", mul(ctx, S1, v(ctx, {L(a, "a"), L(b, "b"), L(c, "c")})),
                    mul(ctx, S1, v(ctx, {L(a, "a"), L(b, "b"), L(c_scol, "c*")})), 7, 6,
                    "c -> σ⁻¹(⊖σa⊖σb) (σa, σb, σc collinear)"});
    rows.push_back({"W(a)V(b+c)", mul(ctx, w(ctx, L(a, "a")), v(ctx, {L(b, "b"), L(c, "c")})),
                    mul(ctx, w(ctx, L(a, "a")), v(ctx, {L(sg(a, -2), "a", -2), L(c, "c")})), 7, 6,
                    "b -> σ⁻²a"});
    rows.push_back({"V(a+b)W(c)", mul(ctx, v(ctx, {L(a, "a"), L(b, "b")}), w(ctx, L(c, "c"))),
                    mul(ctx, v(ctx, {L(a, "a"), L(b, "b")}), w(ctx, L(sg(a, -1), "a", -1))), 7, 6,
                    "c -> σ⁻¹a"});
    Json out_rows = Json::array();
    bool all = true;
    for (const auto& r : rows) {
        const bool ok = r.generic.exact() && r.degenerate.exact() &&
                        r.generic.dim() == r.want_generic && r.degenerate.dim() == r.want_degenerate;
        all = all && ok;
        out_rows.push_back({{"product", r.name},
                            {"generic", r.generic.str()},
                            {"degenerate", r.degenerate.str()},
                            {"generic_dim", r.generic.dim_lo},
                            {"degenerate_dim", r.degenerate.dim_lo},
                            {"expected", {r.want_generic, r.want_degenerate}},
                            {"toggle", r.toggle},
                            {"ok", ok}});
    }
    if (!all) throw Error("verification-failed", "product-dimensions", "a product dimension differs");
    return {{"rows", out_rows}, {"verdict", "ok"}};
}

Json dispatch(const std::string& command, const SceneReader& sc, long terms) {
    if (command == "hilbmatrix") return cmd_hilbmatrix(sc, terms);
    if (command == "hexagon") return cmd_cremona(sc, false);
    if (command == "cremona") return cmd_cremona(sc, true);
    if (command == "recognize") return cmd_recognize(sc);
    if (command == "quadric") return cmd_quadric(sc);
    if (command == "zalg-normalize") return cmd_zalg_normalize(sc);
    if (command == "zalg-solve") return cmd_zalg_solve(sc);
    if (command == "product-table") return cmd_product_table(sc);
    throw input_error("unknown-command", "unknown command '" + command + "'");
}

Json error_json(const Error& e) {
    return {{"code", e.code()}, {"rule", e.rule()}, {"detail", e.detail()}};
}

// ---------------------------------------------------------------- text

void render(std::ostringstream& os, const Json& j, int indent);

bool is_int_grid(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j.size()) return false;
        for (const auto& v : row)
            if (!v.is_number_integer()) return false;
    }
    return true;
}

std::string scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !is_int_grid(v) &&
                                  (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            } else if (is_int_grid(v)) {
                os << pad << k << ":\n";
                for (const auto& row : v) {
                    os << pad << "  ";
                    for (const auto& x : row) {
                        std::string s = x.dump();
                        os << std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') << s;
                    }
                    os << "\n";
                }
            } else if (v.is_array()) {
                os << pad << k << ": [";
                for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
                os << "]\n";
            } else {
                os << pad << k << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) {
            if (j[i].is_object()) {
                os << pad << "- #" << i << "\n";
                render(os, j[i], indent + 2);
            } else if (j[i].is_array()) {
                os << pad << "- ";
                for (size_t k = 0; k < j[i].size(); ++k)
                    os << (k ? " | " : "") << (j[i][k].is_object() && j[i][k].contains("series")
                                                   ? j[i][k]["series"].get<std::string>()
                                                   : scalar(j[i][k]));
                os << "\n";
            } else {
                os << pad << "- " << scalar(j[i]) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

}  // namespace

Outcome run_scene_text(std::string_view toml_text, const std::string& source,
                       const std::string& command, const RunOptions& opts) {
    Outcome out;
    out.format = opts.format.value_or("json");
    out.report = {{"command", command}, {"scene", source}};
    try {
        if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands))
            throw input_error("unknown-command", "unknown command '" + command + "'");
        toml::table tbl;
        try {
            tbl = toml::parse(toml_text, source);
        } catch (const toml::parse_error& e) {
            throw input_error("scene-parse", source + ":" + std::to_string(e.source().begin.line) + ":" +
                                                 std::to_string(e.source().begin.column) + ": " +
                                                 std::string(e.description()));
        }
        SceneReader sc(std::move(tbl), source);
        long terms = 12;
        if (const auto* o = sc.section("options")) {
            if (auto f = sc.opt_string(*o, "report_format", "options")) {
                if (*f != "json" && *f != "text")
                    sc.fail("options.report_format", o->get("report_format"), "expected json or text");
                if (!opts.format) out.format = *f;
            }
            if (auto t = sc.opt_int(*o, "series_terms", "options")) terms = *t;
        }
        if (opts.series_terms) terms = *opts.series_terms;
        if (terms < 1 || terms > 1000) throw input_error("bad-option", "series_terms must be in [1, 1000]");
        if (auto c = sc.opt_string(sc.table(), "command", "")) {
            if (*c != command)
                sc.fail("command", sc.table().get("command"),
                        "scene is for '" + *c + "', not '" + command + "'");
        }
        out.report.update(dispatch(command, sc, terms));
        out.report["series_terms"] = terms;
        out.exit_code = 0;
    } catch (const Error& e) {
        out.exit_code = e.kind() == ErrorKind::input ? 1 : 2;
        out.report["verdict"] = e.kind() == ErrorKind::input ? "input-error" : "failed";
        out.report["error"] = error_json(e);
    }
    if (out.format != "json" && out.format != "text") out.format = "json";
    return out;
}

Outcome run_scene_file(const std::string& path, const std::string& command, const RunOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        Outcome out;
        out.format = opts.format.value_or("json");
        out.exit_code = 1;
        out.report = {{"command", command},
                      {"scene", path},
                      {"verdict", "input-error"},
                      {"error", {{"code", "scene-unreadable"}, {"rule", "input"}, {"detail", "cannot open " + path}}}};
        return out;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return run_scene_text(ss.str(), path, command, opts);
}

std::string emit_report(const Outcome& outcome) {
    if (outcome.format == "text") {
        std::ostringstream os;
        const Json& r = outcome.report;
        os << "nckit " << r.value("command", "") << ": " << r.value("verdict", "") << "\n";
        if (r.contains("error"))
            os << "first failed check: " << r["error"]["code"].get<std::string>() << " ["
               << r["error"]["rule"].get<std::string>() << "] " << r["error"]["detail"].get<std::string>()
               << "\n";
        Json rest = r;
        rest.erase("command");
        rest.erase("verdict");
        rest.erase("error");
        render(os, rest, 0);
        return os.str();
    }
    return outcome.report.dump(2) + "\n";
}

}  // namespace nckit
