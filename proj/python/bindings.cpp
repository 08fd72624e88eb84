#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nckit/error.hpp"
#include "nckit/report.hpp"

namespace py = pybind11;
using namespace nckit;

namespace {

// Points cross the boundary as JSON objects {"gen": "num/den"}.
Point point_from(const std::string& text) {
    Json j = Json::parse(text);
    Point::Coeffs c;
    for (const auto& [g, v] : j.items())
        c[g] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>());
    return Point(c);
}

std::string run(const std::string& fn, const std::function<Json()>& body) {
    try {
        return body().dump();
    } catch (const Error& e) {
        Json err = {{"code", e.code()}, {"rule", e.rule()}, {"detail", e.detail()},
                    {"kind", e.kind() == ErrorKind::input ? "input" : "verdict"}};
        throw py::value_error(fn + ": " + err.dump());
    }
}

}  // namespace

PYBIND11_MODULE(_nckit, m) {
    m.doc() = "Exact divisor, Hilbert series and intersection calculus for elliptic algebras";
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, (e.code() + ": " + e.detail()).c_str());
        }
    });

    m.def(
        "run_scene",
        [](const std::string& text, const std::string& command, const std::string& source,
           std::optional<std::string> format, std::optional<long> terms) {
            RunOptions o;
            o.format = format;
            o.series_terms = terms;
            Outcome out = run_scene_text(text, source, command, o);
            return py::make_tuple(out.exit_code, emit_report(out));
        },
        py::arg("text"), py::arg("command"), py::arg("source") = "<scene>",
        py::arg("format") = py::none(), py::arg("series_terms") = py::none());

    m.def("elliptic_algebra_series", [](int d) {
        return run("elliptic_algebra_series", [&] { return Json(elliptic_algebra_series(d).str()); });
    });
    m.def("tcr_series", [](int d) {
        return run("tcr_series", [&] { return Json(tcr_series(d).str()); });
    });
    m.def("series_coefficients", [](const std::string& s, long n) {
        return HilbertSeries::parse(s).coefficients(n);
    });
    m.def("series_arith", [](const std::string& a, const std::string& b, const std::string& op) {
        SeriesOp o = op == "add" ? SeriesOp::add : op == "sub" ? SeriesOp::sub : SeriesOp::mul;
        if (op != "add" && op != "sub" && op != "mul") throw py::value_error("op must be add, sub or mul");
        return series_arith(HilbertSeries::parse(a), HilbertSeries::parse(b), o).str();
    });
    m.def("hilb_matrix", [](const std::vector<std::string>& six, const std::string& n_sum,
                            const std::string& t) {
        return run("hilb_matrix", [&] {
            if (six.size() != 6) throw input_error("bad-arguments", "six points a..f expected");
            std::vector<Point> p;
            for (const auto& s : six) p.push_back(point_from(s));
            SeriesMatrix mat = hilb_matrix(p[0], p[1], p[2], p[3], p[4], p[5],
                                           SheafClass{9, point_from(n_sum)}, point_from(t));
            Json out = Json::array();
            for (const auto& row : mat) {
                Json r = Json::array();
                for (const auto& h : row) r.push_back(h.str());
                out.push_back(r);
            }
            return out;
        });
    });
    m.def("cremona", [](const std::string& sigma, const std::vector<std::string>& pts) {
        return run("cremona", [&] {
            std::vector<Point> p;
            for (const auto& s : pts) p.push_back(point_from(s));
            CremonaResult c = cremona(SklyaninData{point_from(sigma), SheafClass{3, Point()}}, p);
            Json np = Json::array();
            for (const auto& x : c.new_points) np.push_back(to_json(x));
            return Json{{"hexagon", c.hexagon},
                        {"degrees_forward", c.degrees_forward},
                        {"degrees_backward", c.degrees_backward},
                        {"new_points", np},
                        {"iso_witness", to_json(c.iso_witness)},
                        {"T_prime", to_json(c.t_prime)},
                        {"six_distinct", c.six_distinct}};
        });
    });
    m.def("solve_sklyanin", [](const std::vector<std::string>& six, const std::string& n_sum,
                               const std::string& t) {
        return run("solve_sklyanin", [&] {
            if (six.size() != 6) throw input_error("bad-arguments", "six points a..f expected");
            std::vector<Point> p;
            for (const auto& s : six) p.push_back(point_from(s));
            return to_json(solve_sklyanin(p[0], p[1], p[2], p[3], p[4], p[5],
                                          SheafClass{9, point_from(n_sum)}, point_from(t)));
        });
    });
}
