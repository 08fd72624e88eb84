#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nckit {

// s^shift * P(s) / (1-s)^pole with integer P. Canonical form: P has nonzero
// constant and leading terms, and (1-s) does not divide P unless pole == 0.
class HilbertSeries {
public:
    HilbertSeries() = default;  // zero
    HilbertSeries(std::vector<long long> numerator, int shift, int pole);

    static HilbertSeries monomial(long long c, int exponent, int pole);
    static HilbertSeries parse(std::string_view text);

    const std::vector<long long>& numerator() const { return num_; }
    int shift() const { return shift_; }
    int pole_order() const { return pole_; }
    bool is_zero() const { return num_.empty(); }

    long long coefficient(long n) const;
    std::vector<long long> coefficients(long count, long start = 0) const;

    HilbertSeries operator+(const HilbertSeries& o) const;
    HilbertSeries operator-(const HilbertSeries& o) const;
    HilbertSeries operator*(const HilbertSeries& o) const;
    HilbertSeries operator-() const;
    bool operator==(const HilbertSeries& o) const {
        return num_ == o.num_ && shift_ == o.shift_ && pole_ == o.pole_;
    }
    bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

    HilbertSeries divide_by_one_minus_s() const;
    HilbertSeries times_one_minus_s() const;

    // Expanded numerator over the stored pole, e.g. "(1+7s+s^2)/(1-s)^3".
    std::string str() const;

private:
    void canonicalize();

    std::vector<long long> num_;
    int shift_ = 0;
    int pole_ = 0;
};

enum class SeriesOp { add, sub, mul };
HilbertSeries series_arith(const HilbertSeries& a, const HilbertSeries& b, SeriesOp op);

// (1 + (d-2)s + s^2)/(1-s)^3, the series of a degree d elliptic algebra.
HilbertSeries elliptic_algebra_series(int d);
// (1 + (d-2)s + s^2)/(1-s)^2, the series of the twisted homogeneous
// coordinate ring of a degree d sheaf.
HilbertSeries tcr_series(int d);
// s^shift/(1-s)^2.
HilbertSeries line_series(int shift);
long long coefficient(const HilbertSeries& h, long n);

struct LineCohomology {
    long h0, h1, h2, r_dot_l, l_dot_r;
    bool operator==(const LineCohomology&) const = default;
};
// Cohomology of a shifted line module L[n] and its intersection numbers with
// the structure sheaf.
LineCohomology line_cohomology_table(long n);

}  // namespace nckit
