#include "dimerlab/lattice.hpp"

#include <algorithm>

namespace dimerlab {

long long gcdll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long content(Vec2 v) { return gcdll(v.x, v.y); }

Vec2 primitive(Vec2 v) {
    long long g = content(v);
    if (g == 0) throw Error("ZeroVector", "primitive part of (0,0)");
    return {v.x / g, v.y / g};
}

namespace {
// 0 for the positive x-axis, 1 for the open upper half plane, 2 for the
// negative x-axis, 3 for the open lower half plane.
int angle_band(Vec2 v) {
    if (v.y > 0) return 1;
    if (v.y < 0) return 3;
    return v.x > 0 ? 0 : 2;
}
}  // namespace

bool angle_less(Vec2 a, Vec2 b) {
    int ba = angle_band(a), bb = angle_band(b);
    if (ba != bb) return ba < bb;
    return cross(a, b) > 0;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto build = [&](auto begin, auto end) {
        std::vector<Vec2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], *it - chain.back()) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Vec2> lower = build(pts.begin(), pts.end());
    std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() == 2 && lower[0] == lower[1]) lower.pop_back();
    return lower;  // starts at the lex-least point by construction
}

PolygonPoints lattice_points(const std::vector<Vec2>& polygon) {
    PolygonPoints out;
    if (polygon.empty()) return out;
    long long xmin = polygon[0].x, xmax = xmin, ymin = polygon[0].y, ymax = ymin;
    for (Vec2 v : polygon) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    const int n = static_cast<int>(polygon.size());
    for (long long x = xmin; x <= xmax; ++x) {
        for (long long y = ymin; y <= ymax; ++y) {
            Vec2 p{x, y};
            bool on_boundary = false, inside = true;
            for (int k = 0; k < n && inside; ++k) {
                Vec2 a = polygon[k], b = polygon[(k + 1) % n];
                long long s = cross(b - a, p - a);
                if (s < 0) inside = false;
                if (s == 0 && dot(p - a, p - b) <= 0) on_boundary = true;
            }
            if (n == 1) {
                inside = (p == polygon[0]);
                on_boundary = inside;
            }
            if (n == 2) {
                on_boundary = on_boundary && cross(polygon[1] - polygon[0], p - polygon[0]) == 0;
                inside = on_boundary;
            }
            if (!inside) continue;
            if (on_boundary)
                out.boundary.push_back(p);
            else
                out.interior.push_back(p);
        }
    }
    return out;
}

}  // namespace dimerlab
