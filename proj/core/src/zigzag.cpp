#include "dimerlab/zigzag.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace dimerlab {

std::string ConsistencyWitness::str() const {
    switch (kind) {
        case WitnessKind::TrivialClass:
            return "TrivialClass zz" + std::to_string(strand_a);
        case WitnessKind::SelfCrossing:
            return "SelfCrossing zz" + std::to_string(strand_a) + " e" + std::to_string(edge_a);
        case WitnessKind::ParallelBigon:
            return "ParallelBigon e" + std::to_string(edge_a) + "/e" + std::to_string(edge_b);
    }
    return "?";
}

std::vector<ZigZag> extract_zigzags(const TorusGraph& g) {
    const int E = g.edge_count();
    std::vector<char> seen(2 * E, 0);
    std::vector<ZigZag> out;
    for (int key = 0; key < 2 * E; ++key) {
        if (seen[key]) continue;
        Dart start{key / 2, key % 2 ? Dir::WB : Dir::BW};
        ZigZag z;
        Dart d = start;
        Vec2 t{0, 0};
        do {
            seen[dart_key(d)] = 1;
            z.passes.push_back(d);
            z.lifts.push_back(t);
            Dart n = g.strand_next(d);
            // An up-pass ends at the white lift t + offset, which must equal
            // the white end t' + offset' of the next down-pass; a down-pass
            // ends at the black lift t, where the next up-pass starts.
            if (d.dir == Dir::BW) t += g.edge(d.edge).offset - g.edge(n.edge).offset;
            d = n;
        } while (d != start);
        z.cls = t;
        out.push_back(std::move(z));
    }
    return out;
}

namespace {

// Is v an integer multiple of c (c != 0)?
bool multiple_of(Vec2 v, Vec2 c) {
    if (cross(v, c) != 0) return false;
    if (c.x != 0) return v.x % c.x == 0;
    return v.y % c.y == 0;
}

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

struct CrossingEvent {
    long long p1;  // position along the first lift (pass index + period * length)
    long long p2;  // position along the second lift
    int edge;

    bool operator<(const CrossingEvent& o) const { return p1 < o.p1; }
};

// Scan a crossing list shared by two lifts for a parallel bigon: a pair of
// crossings adjacent along both lifts whose connecting arcs run in the same
// direction. `trusted` marks events far from the enumeration window boundary.
std::optional<std::pair<int, int>> find_parallel_bigon(std::vector<CrossingEvent> ev,
                                                       const std::vector<char>& trusted) {
    std::vector<std::size_t> order(ev.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ev[a].p1 < ev[b].p1;
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const CrossingEvent& a = ev[order[k]];
        const CrossingEvent& b = ev[order[k + 1]];
        if (!trusted[order[k]] || !trusted[order[k + 1]]) continue;
        long long lo = std::min(a.p2, b.p2), hi = std::max(a.p2, b.p2);
        bool adjacent2 = true;
        for (const CrossingEvent& e : ev)
            if (e.p2 > lo && e.p2 < hi) {
                adjacent2 = false;
                break;
            }
        if (!adjacent2) continue;
        if (b.p2 > a.p2) return std::make_pair(a.edge, b.edge);  // both arcs a -> b
    }
    return std::nullopt;
}

// Canonical representative of v modulo the rank-2 lattice Z*c1 + Z*c2.
Vec2 reduce_mod_lattice(Vec2 v, Vec2 c1, Vec2 c2) {
    long long det = cross(c1, c2);
    long long m = floor_div(cross(v, c2), det);
    long long n = floor_div(cross(c1, v), det);
    return v - m * c1 - n * c2;
}

}  // namespace

ConsistencyResult check_consistency(const TorusGraph& g) {
    std::vector<ZigZag> zz = extract_zigzags(g);
    ConsistencyResult res;

    // (a) trivial homology class
    for (std::size_t k = 0; k < zz.size(); ++k) {
        if (zz[k].cls.is_zero()) {
            res.witness = ConsistencyWitness{WitnessKind::TrivialClass, static_cast<int>(k), -1,
                                             -1, -1};
            return res;
        }
    }

    // (b) self-crossing of a single lift: two passes of the same edge whose
    // lift translates differ by a multiple of the class.
    for (std::size_t k = 0; k < zz.size(); ++k) {
        const ZigZag& z = zz[k];
        std::map<int, std::vector<int>> by_edge;
        for (std::size_t i = 0; i < z.passes.size(); ++i)
            by_edge[z.passes[i].edge].push_back(static_cast<int>(i));
        for (const auto& [e, idx] : by_edge) {
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                    if (multiple_of(z.lifts[idx[a]] - z.lifts[idx[b]], z.cls)) {
                        res.witness = ConsistencyWitness{WitnessKind::SelfCrossing,
                                                         static_cast<int>(k), -1, e, -1};
                        return res;
                    }
        }
    }

    // (c) parallel bigons between lift pairs. Lift one strand at translate 0,
    // the other at translate t; only finitely many t classes admit crossings.
    for (std::size_t i = 0; i < zz.size(); ++i) {
        for (std::size_t j = i; j < zz.size(); ++j) {
            const ZigZag& z1 = zz[i];
            const ZigZag& z2 = zz[j];
            const long long L1 = static_cast<long long>(z1.passes.size());
            const long long L2 = static_cast<long long>(z2.passes.size());
            std::vector<std::pair<int, int>> shared;
            for (std::size_t a = 0; a < z1.passes.size(); ++a)
                for (std::size_t b = 0; b < z2.passes.size(); ++b)
                    if (z1.passes[a].edge == z2.passes[b].edge &&
                        z1.passes[a].dir != z2.passes[b].dir)
                        shared.emplace_back(static_cast<int>(a), static_cast<int>(b));
            if (shared.empty()) continue;

            if (cross(z1.cls, z2.cls) != 0) {
                // Independent classes: finitely many crossings per lift pair.
                const long long det = cross(z1.cls, z2.cls);
                std::set<Vec2> residues;
                for (auto [a, b] : shared)
                    residues.insert(reduce_mod_lattice(z1.lifts[a] - z2.lifts[b], z1.cls,
                                                       z2.cls));
                for (Vec2 t : residues) {
                    std::vector<CrossingEvent> ev;
                    for (auto [a, b] : shared) {
                        Vec2 D = z2.lifts[b] - z1.lifts[a] + t;
                        // m*c1 - n*c2 = D  =>  m = cross(D,c2)/det, n = -cross(c1,D)/det
                        long long mn = cross(D, z2.cls), nn = -cross(z1.cls, D);
                        if (mn % det != 0 || nn % det != 0) continue;
                        long long m = mn / det, n = nn / det;
                        ev.push_back(CrossingEvent{a + m * L1, b + n * L2,
                                                   z1.passes[a].edge});
                    }
                    std::vector<char> trusted(ev.size(), 1);
                    if (auto hit = find_parallel_bigon(std::move(ev), trusted)) {
                        res.witness = ConsistencyWitness{WitnessKind::ParallelBigon,
                                                         static_cast<int>(i),
                                                         static_cast<int>(j), hit->first,
                                                         hit->second};
                        return res;
                    }
                }
            } else {
                // Parallel classes: crossings repeat periodically along both
                // lifts; enumerate a window of super-periods and trust the
                // interior.
                Vec2 d = primitive(z1.cls);
                long long alpha = (d.x != 0) ? z1.cls.x / d.x : z1.cls.y / d.y;
                long long beta = (d.x != 0) ? z2.cls.x / d.x : z2.cls.y / d.y;
                long long gg = gcdll(alpha, beta);
                long long denom = dot(z2.cls, d);  // beta * |d|^2, nonzero
                std::set<Vec2> residues;
                for (auto [a, b] : shared) {
                    for (long long k = 0; k < std::max<long long>(1, llabs(beta) / gg); ++k) {
                        Vec2 t = z1.lifts[a] - z2.lifts[b] + k * (gg * d);
                        t = t - floor_div(dot(t, d), denom) * z2.cls;
                        if (i == j && multiple_of(t, z1.cls)) continue;  // same lift
                        residues.insert(t);
                    }
                }
                const long long U = 3;
                for (Vec2 t : residues) {
                    std::vector<CrossingEvent> ev;
                    std::vector<char> trusted;
                    for (auto [a, b] : shared) {
                        Vec2 D = z2.lifts[b] - z1.lifts[a] + t;
                        if (cross(D, d) != 0) continue;
                        long long s = (d.x != 0) ? D.x / d.x : D.y / d.y;
                        if (s % gg != 0) continue;
                        // m*alpha - n*beta = s; particular solution by
                        // extended gcd, family shifts (beta/g, alpha/g).
                        long long x0 = 0, y0 = 0;
                        {
                            long long r0 = alpha, r1 = -beta;
                            long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                            while (r1 != 0) {
                                long long q = r0 / r1;
                                long long r2 = r0 - q * r1;
                                long long s2 = s0 - q * s1;
                                long long t2 = t0 - q * t1;
                                r0 = r1; r1 = r2;
                                s0 = s1; s1 = s2;
                                t0 = t1; t1 = t2;
                            }
                            // r0 = gcd(alpha, -beta) up to sign
                            if (s % r0 != 0) continue;
                            long long scale = s / r0;
                            x0 = s0 * scale;
                            y0 = t0 * scale;
                        }
                        for (long long u = -U; u <= U; ++u) {
                            long long m = x0 + (beta / gg) * u;
                            long long n = y0 + (alpha / gg) * u;
                            ev.push_back(CrossingEvent{a + m * L1, b + n * L2,
                                                       z1.passes[a].edge});
                            trusted.push_back(llabs(u) <= U - 2 ? 1 : 0);
                        }
                    }
                    if (auto hit = find_parallel_bigon(std::move(ev), trusted)) {
                        res.witness = ConsistencyWitness{WitnessKind::ParallelBigon,
                                                         static_cast<int>(i),
                                                         static_cast<int>(j), hit->first,
                                                         hit->second};
                        return res;
                    }
                }
            }
        }
    }

    res.consistent = true;
    return res;
}

std::vector<Vec2> newton_polygon(const std::vector<Vec2>& classes) {
    if (classes.empty()) throw Error("NonClosing", "no classes given");
    Vec2 sum{0, 0};
    for (Vec2 c : classes) {
        if (c.is_zero() || content(c) != 1)
            throw Error("NonPrimitiveClass", "class " + c.str() + " is zero or imprimitive");
        sum += c;
    }
    if (!sum.is_zero()) throw Error("NonClosing", "classes sum to " + sum.str());

    std::vector<Vec2> sorted = classes;
    std::sort(sorted.begin(), sorted.end(), angle_less);
    std::vector<Vec2> verts;
    Vec2 p{0, 0};
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k == 0 || angle_less(sorted[k - 1], sorted[k]) || angle_less(sorted[k], sorted[k - 1]))
            verts.push_back(p);  // direction changed: p is a vertex
        p += sorted[k];
    }
    Vec2 least = *std::min_element(verts.begin(), verts.end());
    for (Vec2& v : verts) v -= least;
    auto it = std::find(verts.begin(), verts.end(), Vec2{0, 0});
    std::rotate(verts.begin(), it, verts.end());
    return verts;
}

StackyFan stacky_fan(const std::vector<Vec2>& polygon) {
    if (polygon.size() < 3)
        throw Error("DegeneratePolygon", "fan of a polygon with fewer than 3 vertices");
    StackyFan fan;
    fan.polygon = polygon;
    const std::size_t n = polygon.size();
    for (std::size_t k = 0; k < n; ++k) {
        Vec2 v = polygon[(k + 1) % n] - polygon[k];
        long long len = content(v);
        Vec2 p = primitive(v);
        fan.rays.push_back(StackyRay{Vec2{-p.y, p.x}, len});
    }
    return fan;
}

std::vector<FrontGeodesic> front_arrangement(const StackyFan& fan, const Rat& t) {
    if (t < Rat(0) || t > Rat(1)) throw Error("BadParameter", "front parameter outside [0,1]");
    std::vector<FrontGeodesic> out;
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
        const StackyRay& ray = fan.rays[r];
        for (long long n = 0; n < ray.multiplicity; ++n) {
            FrontGeodesic geo;
            geo.normal = ray.generator;
            geo.level = Rat(n) * t / Rat(ray.multiplicity);
            geo.ray = static_cast<int>(r);
            geo.index = static_cast<int>(n);
            out.push_back(geo);
        }
    }
    return out;
}

}  // namespace dimerlab
