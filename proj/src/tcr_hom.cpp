#include "nckit/tcr_hom.hpp"

#include "nckit/error.hpp"

namespace nckit {

TcrDescriptor::TcrDescriptor(SheafClass n, Point t) : sheaf(std::move(n)), tau(std::move(t)) {
    if (sheaf.degree < 1)
        throw input_error("invalid-sheaf-degree", "a coordinate ring needs a sheaf of degree >= 1");
}

long section_dim(const SectionModule& m, long n) {
    if (n < m.start_degree) return 0;
    return h0(tensor(m.twist, twisted_power(m.host.sheaf, m.host.tau, n)));
}

HilbertSeries series_of_class_sequence(const std::function<SheafClass(long)>& cls, long start) {
    long beta = cls(0).degree;
    long alpha = cls(1).degree - beta;
    if (alpha <= 0)
        throw input_error("bad-sequence", "class degrees must grow with n");
    // first n with alpha n + beta >= 1, i.e. ceil((1 - beta) / alpha)
    long num = 1 - beta;
    long n0 = num / alpha;
    if (num % alpha != 0 && num > 0) ++n0;
    if (n0 < start) n0 = start;

    HilbertSeries out;
    for (long n = start; n < n0; ++n) {
        long d = h0(cls(n));
        if (d != 0) out = out + HilbertSeries::monomial(d, static_cast<int>(n), 0);
    }
    int e = static_cast<int>(n0);
    HilbertSeries geometric = HilbertSeries::monomial(1, e, 1);
    HilbertSeries weighted({n0, -(n0 - 1)}, e, 2);
    return out + HilbertSeries::monomial(alpha, 0, 0) * weighted +
           HilbertSeries::monomial(beta, 0, 0) * geometric;
}

HilbertSeries section_series(const SectionModule& m) {
    return series_of_class_sequence(
        [&](long n) { return tensor(m.twist, twisted_power(m.host.sheaf, m.host.tau, n)); },
        m.start_degree);
}

HomModule::HomModule(SectionModule from, SectionModule to)
    : from_(std::move(from)), to_(std::move(to)) {
    if (!(from_.host == to_.host))
        throw input_error("incompatible-base", "section modules live over different rings");
    start_ = to_.start_degree - from_.start_degree;
    if (start_ < 0) start_ = 0;
}

SheafClass HomModule::class_at(long n) const {
    const auto& host = from_.host;
    return tensor(pullback(from_.twist, host.tau, n).dual(),
                  tensor(to_.twist, twisted_power(host.sheaf, host.tau, n)));
}

long HomModule::dim(long n) const {
    if (n < start_) return 0;
    return h0(class_at(n));
}

HilbertSeries HomModule::series() const {
    return series_of_class_sequence([this](long n) { return class_at(n); }, start_);
}

HomModule hom_section_module(const SectionModule& nj, const SectionModule& ni) {
    return HomModule(nj, ni);
}

HilbertSeries lift_g_divisible(const HilbertSeries& h) { return h.divide_by_one_minus_s(); }

EndomorphismModules three_module_setup(const Point& a, const Point& b, const Point& c,
                                       const Point& d, const Point& e, const Point& f,
                                       const SheafClass& n, const Point& t) {
    if (n.degree != 9)
        throw input_error("wrong-degree",
                          "the three-module matrix needs a degree 9 sheaf, got " +
                              std::to_string(n.degree));
    TcrDescriptor host(n, t);
    SheafClass g1 = SheafClass::of_divisor(Divisor{a, b, c}).dual();
    SheafClass g3 = SheafClass::of_divisor(Divisor{d, e, f});
    return {host,
            {SectionModule{g1, 0, host}, SectionModule{SheafClass::trivial(), 0, host},
             SectionModule{g3, 0, host}}};
}

SeriesMatrix hilb_matrix_bar(const Point& a, const Point& b, const Point& c, const Point& d,
                             const Point& e, const Point& f, const SheafClass& n, const Point& t) {
    auto setup = three_module_setup(a, b, c, d, e, f, n, t);
    SeriesMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = hom_section_module(setup.modules[j], setup.modules[i]).series();
    return m;
}

SeriesMatrix hilb_matrix(const Point& a, const Point& b, const Point& c, const Point& d,
                         const Point& e, const Point& f, const SheafClass& n, const Point& t) {
    SeriesMatrix m = hilb_matrix_bar(a, b, c, d, e, f, n, t);
    for (auto& row : m)
        for (auto& x : row) x = lift_g_divisible(x);
    return m;
}

Point point_module_shift(const Point& p, const Point& t, long n) { return translate(p, t, n); }

}  // namespace nckit
