#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dimerlab/error.hpp"

namespace dimerlab {

// Point / vector in the Z^2 lattice (homology classes, exponents, offsets).
struct Vec2 {
    long long x = 0;
    long long y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator*(long long k, Vec2 v) { return {k * v.x, k * v.y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
    // Lexicographic (x, then y); this is the order behind "lexicographically
    // least" everywhere in the library.
    friend auto operator<=>(Vec2 a, Vec2 b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline long long cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline long long dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

long long gcdll(long long a, long long b);

// gcd of |x| and |y|; 0 for the zero vector.
long long content(Vec2 v);

// v / content(v); errors on the zero vector.
Vec2 primitive(Vec2 v);

// Counterclockwise angular order starting just above the positive x-axis:
// returns true when a comes strictly before b. Exact integer arithmetic,
// vectors of equal direction compare equal.
bool angle_less(Vec2 a, Vec2 b);

// Convex hull of a nonempty point set: vertices only, counterclockwise,
// starting from the lexicographically least vertex. Collinear input collapses
// to a 1- or 2-point "polygon".
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

// Classification of the lattice points of a convex polygon.
struct PolygonPoints {
    std::vector<Vec2> interior;
    std::vector<Vec2> boundary;  // includes the vertices
};
PolygonPoints lattice_points(const std::vector<Vec2>& polygon);

}  // namespace dimerlab
