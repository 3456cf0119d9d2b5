#pragma once

#include <map>
#include <string>
#include <vector>

#include "dimerlab/torus_graph.hpp"

namespace fixtures {

using dimerlab::TorusGraph;
using dimerlab::Vec2;

TorusGraph hex1();  // hexagonal lattice, minimal fundamental domain
TorusGraph sq1();   // diagonal square lattice, minimal fundamental domain
TorusGraph sq2();   // two-cell graph with a square-move-ready quad face

// (nx x ny)-fold cover unrolling the offsets.
TorusGraph cover(const TorusGraph& base, int nx, int ny);

TorusGraph hex2();       // cover(hex1, 2, 1): the stacky double cover
TorusGraph hex4();       // cover(hex1, 2, 2)
TorusGraph square2x2();  // cover(sq1, 2, 2)
TorusGraph square3x2();  // cover(sq1, 3, 2): two interior polygon points

TorusGraph bad_bigon();      // inconsistent: parallel bigon
TorusGraph trivial_class();  // inconsistent: zero-class strand

// Split vertex v so it keeps the rotation-adjacent pair (keepA, keepB) plus a
// bridge through a new degree-2 vertex of the opposite color; a new vertex of
// v's color takes the remaining edges. Faces detour through the bridge.
TorusGraph split_vertex(const TorusGraph& g, dimerlab::Color c, int v, int keepA, int keepB);

// Split all four corners of a quadrilateral face, yielding the trivalent
// corners + pendant whites required by the square move.
TorusGraph make_move_ready(const TorusGraph& g, int face);

// Exact integer drawing of a fixture for the geometric oracle: vertex
// positions in a (period_x x period_y) fundamental domain, plus a transverse
// displacement sign for parallel edge copies.
struct Drawing {
    long long period_x = 0, period_y = 0;
    std::vector<Vec2> black_pos, white_pos;
    std::map<int, int> edge_disp;  // edge id -> -1/+1 midpoint displacement
};

struct Named {
    std::string name;
    TorusGraph graph;
    Drawing drawing;
};

// All fixtures that have golden .tg files and drawings, in canonical order.
std::vector<Named> all_fixtures();

Drawing drawing_for(const std::string& name);

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);

}  // namespace fixtures
