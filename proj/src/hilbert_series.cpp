#include "nckit/hilbert_series.hpp"

#include <algorithm>
#include <cctype>

#include "nckit/error.hpp"

namespace nckit {

namespace {

std::vector<long long> mul_poly(const std::vector<long long>& a, const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<long long> one_minus_s_power(int k) {
    std::vector<long long> r{1};
    for (int i = 0; i < k; ++i) r = mul_poly(r, {1, -1});
    return r;
}

// Multisets of size m from k kinds: C(m + k - 1, k - 1).
long long multiset_count(long m, int k) {
    if (m < 0) return 0;
    if (k == 0) return m == 0 ? 1 : 0;
    long long c = 1;
    for (int i = 1; i < k; ++i) c = c * (m + i) / i;
    return c;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<long long> numerator, int shift, int pole)
    : num_(std::move(numerator)), shift_(shift), pole_(pole) {
    if (pole < 0) throw input_error("bad-series", "negative pole order");
    canonicalize();
}

HilbertSeries HilbertSeries::monomial(long long c, int exponent, int pole) {
    return HilbertSeries({c}, exponent, pole);
}

void HilbertSeries::canonicalize() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
    size_t lead = 0;
    while (lead < num_.size() && num_[lead] == 0) ++lead;
    if (lead == num_.size()) {
        num_.clear();
        shift_ = 0;
        pole_ = 0;
        return;
    }
    num_.erase(num_.begin(), num_.begin() + static_cast<long>(lead));
    shift_ += static_cast<int>(lead);
    while (pole_ > 0) {
        long long total = 0;
        for (auto c : num_) total += c;
        if (total != 0) break;
        std::vector<long long> q(num_.size() - 1);
        long long acc = 0;
        for (size_t i = 0; i + 1 < num_.size(); ++i) {
            acc += num_[i];
            q[i] = acc;
        }
        num_ = std::move(q);
        --pole_;
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
    }
}

long long HilbertSeries::coefficient(long n) const {
    long j = n - shift_;
    long long total = 0;
    for (size_t i = 0; i < num_.size() && static_cast<long>(i) <= j; ++i)
        total += num_[i] * multiset_count(j - static_cast<long>(i), pole_);
    return total;
}

std::vector<long long> HilbertSeries::coefficients(long count, long start) const {
    std::vector<long long> out;
    for (long i = 0; i < count; ++i) out.push_back(coefficient(start + i));
    return out;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int pole = std::max(pole_, o.pole_);
    auto a = mul_poly(num_, one_minus_s_power(pole - pole_));
    auto b = mul_poly(o.num_, one_minus_s_power(pole - o.pole_));
    int shift = std::min(shift_, o.shift_);
    std::vector<long long> r;
    auto place = [&](const std::vector<long long>& p, int sh) {
        size_t off = static_cast<size_t>(sh - shift);
        if (r.size() < off + p.size()) r.resize(off + p.size(), 0);
        for (size_t i = 0; i < p.size(); ++i) r[off + i] += p[i];
    };
    place(a, shift_);
    place(b, o.shift_);
    return HilbertSeries(std::move(r), shift, pole);
}

HilbertSeries HilbertSeries::operator-() const {
    HilbertSeries r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const { return *this + (-o); }

HilbertSeries HilbertSeries::operator*(const HilbertSeries& o) const {
    if (is_zero() || o.is_zero()) return {};
    return HilbertSeries(mul_poly(num_, o.num_), shift_ + o.shift_, pole_ + o.pole_);
}

HilbertSeries HilbertSeries::divide_by_one_minus_s() const {
    if (is_zero()) return {};
    return HilbertSeries(num_, shift_, pole_ + 1);
}

HilbertSeries HilbertSeries::times_one_minus_s() const {
    if (is_zero()) return {};
    if (pole_ > 0) return HilbertSeries(num_, shift_, pole_ - 1);
    return HilbertSeries(mul_poly(num_, {1, -1}), shift_, 0);
}

std::string HilbertSeries::str() const {
    if (num_.empty()) return "0";
    std::string p;
    int terms = 0;
    for (size_t i = 0; i < num_.size(); ++i) {
        long long c = num_[i];
        if (c == 0) continue;
        int e = shift_ + static_cast<int>(i);
        if (terms > 0 && c > 0) p += "+";
        if (e == 0) {
            p += std::to_string(c);
        } else {
            if (c == -1)
                p += "-";
            else if (c != 1)
                p += std::to_string(c);
            p += "s";
            if (e != 1) p += "^" + std::to_string(e);
        }
        ++terms;
    }
    if (pole_ == 0) return p;
    if (terms > 1) p = "(" + p + ")";
    return p + "/(1-s)^" + std::to_string(pole_);
}

HilbertSeries HilbertSeries::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&]() {
        return input_error("bad-series", "cannot parse series '" + std::string(text) + "'");
    };
    int pole = 0;
    auto den = s.find("/(1-s)");
    std::string numer = s.substr(0, den);
    if (den != std::string::npos) {
        std::string rest = s.substr(den + 6);
        if (rest.empty()) {
            pole = 1;
        } else if (rest[0] == '^') {
            try {
                size_t used = 0;
                pole = std::stoi(rest.substr(1), &used);
                if (used + 1 != rest.size() || pole < 0) throw fail();
            } catch (const std::logic_error&) {
                throw fail();
            }
        } else {
            throw fail();
        }
    }
    if (numer.size() >= 2 && numer.front() == '(' && numer.back() == ')')
        numer = numer.substr(1, numer.size() - 2);
    if (numer.empty()) throw fail();
    HilbertSeries out;
    size_t i = 0;
    while (i < numer.size()) {
        long long sign = 1;
        if (numer[i] == '+' || numer[i] == '-') {
            sign = numer[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw fail();
        }
        size_t start = i;
        while (i < numer.size() && std::isdigit(static_cast<unsigned char>(numer[i]))) ++i;
        long long c = start == i ? 1 : std::stoll(numer.substr(start, i - start));
        int e = 0;
        if (i < numer.size() && numer[i] == 's') {
            ++i;
            e = 1;
            if (i < numer.size() && numer[i] == '^') {
                ++i;
                size_t es = i;
                if (i < numer.size() && numer[i] == '-') ++i;
                while (i < numer.size() && std::isdigit(static_cast<unsigned char>(numer[i]))) ++i;
                if (es == i) throw fail();
                e = std::stoi(numer.substr(es, i - es));
            }
        } else if (start == i) {
            throw fail();
        }
        out = out + monomial(sign * c, e, 0);
    }
    HilbertSeries r = out;
    r.pole_ = pole;
    r.canonicalize();
    return r;
}

HilbertSeries series_arith(const HilbertSeries& a, const HilbertSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return a + b;
        case SeriesOp::sub: return a - b;
        case SeriesOp::mul: return a * b;
    }
    return {};
}

HilbertSeries elliptic_algebra_series(int d) {
    if (d < 2)
        throw input_error("degree-too-small",
                          "elliptic algebras have degree >= 2, got " + std::to_string(d));
    return HilbertSeries({1, d - 2, 1}, 0, 3);
}

HilbertSeries tcr_series(int d) {
    if (d < 1)
        throw input_error("degree-too-small",
                          "a coordinate ring needs a sheaf of degree >= 1, got " + std::to_string(d));
    return HilbertSeries({1, d - 2, 1}, 0, 2);
}

HilbertSeries line_series(int shift) { return HilbertSeries::monomial(1, shift, 2); }

long long coefficient(const HilbertSeries& h, long n) { return h.coefficient(n); }

LineCohomology line_cohomology_table(long n) {
    return {std::max(n + 1, 0L), std::max(-n - 1, 0L), 0, -n - 1, -n};
}

}  // namespace nckit
