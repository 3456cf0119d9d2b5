#pragma once

#include <cstdint>
#include <vector>

#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/rational.hpp"

namespace dimerlab {

// splitmix64; fixed algorithm so seeded runs are reproducible across
// platforms and standard library versions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // small nonzero rational with numerator in [-9,-1] u [1,9], denominator in [1,9]
    Rat rat_nonzero() {
        long num = 1 + static_cast<long>(below(9));
        long den = 1 + static_cast<long>(below(9));
        if (below(2)) num = -num;
        return Rat(num, den);
    }

    // small positive rational
    Rat rat_positive() {
        long num = 1 + static_cast<long>(below(9));
        long den = 1 + static_cast<long>(below(9));
        return Rat(num, den);
    }
};

inline Weighting random_weighting(const TorusGraph& g, Rng& rng) {
    Weighting w;
    w.values.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) w.values.push_back(rng.rat_nonzero());
    return w;
}

inline std::vector<Rat> random_units(int n, Rng& rng) {
    std::vector<Rat> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(rng.rat_nonzero());
    return v;
}

inline std::vector<Vec2> random_offset_gauge(int n, Rng& rng) {
    std::vector<Vec2> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = Vec2{static_cast<long long>(rng.below(5)) - 2,
                    static_cast<long long>(rng.below(5)) - 2};
    return v;
}

}  // namespace dimerlab
