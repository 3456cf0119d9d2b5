#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimerlab/lattice.hpp"
#include "dimerlab/rational.hpp"
#include "dimerlab/torus_graph.hpp"

namespace dimerlab {

// A zig-zag strand: cyclic list of directed edge passes with the universal
// cover translate of each pass. lifts[k] is the translate of the edge lift of
// pass k; cls is the homology class (translate gained per period).
struct ZigZag {
    std::vector<Dart> passes;
    std::vector<Vec2> lifts;
    Vec2 cls;
};

// Strand rule: continue along the rotation predecessor at white vertices and
// the rotation successor at black vertices. Every dart lies on exactly one
// strand; every edge is passed exactly twice.
std::vector<ZigZag> extract_zigzags(const TorusGraph& g);

enum class WitnessKind { TrivialClass, SelfCrossing, ParallelBigon };

struct ConsistencyWitness {
    WitnessKind kind;
    int strand_a = -1;
    int strand_b = -1;
    int edge_a = -1;
    int edge_b = -1;
    std::string str() const;
};

struct ConsistencyResult {
    bool consistent = false;
    std::optional<ConsistencyWitness> witness;
};

// Exact decision of the consistency condition via universal-cover lift
// arithmetic: (a) no strand of trivial homology class, (b) no lift
// self-crossing, (c) no parallel bigon between any two lifts.
ConsistencyResult check_consistency(const TorusGraph& g);

// Lattice polygon whose counterclockwise primitive edge vectors are the given
// classes. Vertices counterclockwise, lexicographically least vertex at the
// origin. Errors: NonPrimitiveClass, NonClosing.
std::vector<Vec2> newton_polygon(const std::vector<Vec2>& classes);

struct StackyRay {
    Vec2 generator;    // primitive inward normal of the polygon edge
    long long multiplicity;  // lattice length of the edge
};

struct StackyFan {
    std::vector<StackyRay> rays;
    std::vector<Vec2> polygon;
};

// Inward normal fan of a counterclockwise lattice polygon with per-ray
// multiplicities given by lattice edge lengths. Errors: DegeneratePolygon.
StackyFan stacky_fan(const std::vector<Vec2>& polygon);

// One geodesic of a front arrangement: points x on the torus with
// <normal, x> = level (mod 1), co-oriented along -normal.
struct FrontGeodesic {
    Vec2 normal;
    Rat level;
    int ray = 0;
    int index = 0;  // n in 0..multiplicity-1
};

// The family of geodesic fronts at time t in [0,1]: for each ray, multiplicity
// many parallel geodesics at levels n*t/multiplicity. t=1 is the fully spread
// arrangement, t=0 the collapsed one.
std::vector<FrontGeodesic> front_arrangement(const StackyFan& fan, const Rat& t);

}  // namespace dimerlab
