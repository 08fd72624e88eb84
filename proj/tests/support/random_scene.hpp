#pragma once

// Seeded generators for random scenes. Every suite uses fixed seeds.

#include <random>
#include <string>
#include <vector>

#include "nckit/curve_group.hpp"
#include "nckit/picard.hpp"

namespace scenes {

inline const std::vector<std::string> kGens = {"g0", "g1", "g2", "g3", "g4", "g5"};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    nckit::Rational rational() {
        long den = integer(1, 6);
        return nckit::Rational(integer(-9, 9), den);
    }

    nckit::Point point(size_t gens = 4) {
        nckit::Point::Coeffs c;
        for (size_t i = 0; i < gens; ++i)
            if (integer(0, 2) != 0) c[kGens[i]] = rational();
        return nckit::Point(c);
    }

    nckit::SheafClass sheaf(long lo = -4, long hi = 9) { return {integer(lo, hi), point()}; }

    // A fresh independent point: one new generator with a nonzero coefficient.
    nckit::Point fresh(const std::string& name) {
        nckit::Rational r = rational();
        if (r == 0) r = 1;
        return nckit::Point::generator(name, r);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Generic triple: independent generators plus a random rational offset of s.
struct SklyaninScene {
    nckit::Point s, p, q, r;
};

inline SklyaninScene generic_scene(Gen& g) {
    SklyaninScene sc;
    sc.s = g.fresh("s");
    sc.p = g.fresh("p") + nckit::Rational(g.integer(-3, 3)) * sc.s;
    sc.q = g.fresh("q") + g.fresh("p");
    sc.r = g.fresh("r") + nckit::Rational(g.integer(-3, 3), 2) * sc.s;
    if (sc.q == sc.p) sc.q = sc.q + nckit::Point::generator("q");
    return sc;
}

}  // namespace scenes
