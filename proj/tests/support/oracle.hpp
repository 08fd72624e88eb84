#pragma once

// Independent reference computations used to freeze expected values. Uses
// boost::rational<long long> and explicit loops, sharing no code with the engine.

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Q = boost::rational<long long>;
using Vec = std::map<std::string, Q>;

inline Vec clean(Vec v) {
    for (auto it = v.begin(); it != v.end();) it = it->second.numerator() == 0 ? v.erase(it) : std::next(it);
    return v;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (const auto& [k, x] : b) out[k] += x;
    return clean(out);
}

inline Vec scale(Q c, const Vec& a) {
    Vec out;
    for (const auto& [k, x] : a) out[k] = c * x;
    return clean(out);
}

inline Vec gen(const std::string& g, Q c = 1) { return clean(Vec{{g, c}}); }

// (degree, sum) pairs
struct Cls {
    long deg;
    Vec sum;
};

inline Cls tensor(const Cls& a, const Cls& b) { return {a.deg + b.deg, add(a.sum, b.sum)}; }
inline Cls dual(const Cls& a) { return {-a.deg, scale(-1, a.sum)}; }

// Pull back along translation by k t, one step at a time: each step moves
// every point of the divisor by -t.
inline Cls pullback_steps(Cls a, const Vec& t, long k) {
    const long steps = k < 0 ? -k : k;
    for (long i = 0; i < steps; ++i) a.sum = add(a.sum, scale(Q(k < 0 ? a.deg : -a.deg), t));
    return a;
}

inline Cls twisted_power(const Cls& l, const Vec& t, long n) {
    Cls acc{0, {}};
    for (long i = 0; i < n; ++i) acc = tensor(acc, pullback_steps(l, t, i));
    return acc;
}

inline long h0(const Cls& c) {
    if (c.deg > 0) return c.deg;
    if (c.deg < 0) return 0;
    return c.sum.empty() ? 1 : 0;
}

inline long long binom(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// n-th coefficient of s^shift * P(s) / (1-s)^pole.
inline long long series_coeff(const std::vector<long long>& num, int shift, int pole, long n) {
    long long total = 0;
    for (size_t i = 0; i < num.size(); ++i) {
        long m = n - shift - static_cast<long>(i);
        if (m < 0) continue;
        total += num[i] * (pole == 0 ? (m == 0 ? 1 : 0) : binom(m + pole - 1, pole - 1));
    }
    return total;
}

// Degree n piece of Hom between section modules of twists gj -> gi over B(E, N, t).
inline long hom_dim(const Cls& gi, const Cls& gj, const Cls& N, const Vec& t, long n) {
    return h0(tensor(dual(pullback_steps(gj, t, n)), tensor(gi, twisted_power(N, t, n))));
}

}  // namespace oracle
