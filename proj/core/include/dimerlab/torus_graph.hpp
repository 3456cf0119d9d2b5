#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimerlab/error.hpp"
#include "dimerlab/lattice.hpp"

namespace dimerlab {

enum class Color : std::uint8_t { Black, White };

// Direction of travel along an edge.
enum class Dir : std::uint8_t { BW = 0, WB = 1 };

inline Dir reversed(Dir d) { return d == Dir::BW ? Dir::WB : Dir::BW; }

struct Dart {
    int edge = -1;
    Dir dir = Dir::BW;

    friend bool operator==(Dart a, Dart b) { return a.edge == b.edge && a.dir == b.dir; }
    friend bool operator!=(Dart a, Dart b) { return !(a == b); }
};

// Total order key; used to canonicalize face boundaries and orderings.
inline int dart_key(Dart d) { return d.edge * 2 + (d.dir == Dir::WB ? 1 : 0); }

struct EdgeRec {
    int black = -1;
    int white = -1;
    // Crossing numbers with the two homology basis curves, edge oriented
    // black -> white. The lift of the edge at translate T joins the black
    // vertex at T to the white vertex at T + offset.
    Vec2 offset;
};

struct Face {
    std::vector<Dart> boundary;  // cyclic, starts at the smallest dart
};

// Bipartite graph embedded in the two-torus as a combinatorial map: vertex
// rotations give the counterclockwise order of incident edges, offsets carry
// the homology crossing data. Immutable after construction; all invariants
// of a cellular genus-one embedding are checked by build()/parse().
class TorusGraph {
public:
    TorusGraph() = default;  // empty placeholder; real graphs come from build()/parse()

    static TorusGraph build(int black_count, int white_count, std::vector<EdgeRec> edges,
                            std::vector<std::vector<int>> rot_black,
                            std::vector<std::vector<int>> rot_white);

    // Text format:
    //   torus-graph v1
    //   black <n>
    //   white <m>
    //   edge <black-id> <white-id> <dx> <dy>     (ids are assigned in order)
    //   rot b<i>: <edge ids ccw>
    //   rot w<j>: <edge ids ccw>
    // '#' starts a comment. parse(serialize()) is the identity.
    static TorusGraph parse(const std::string& text);
    std::string serialize() const;

    int black_count() const { return black_count_; }
    int white_count() const { return white_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeRec& edge(int e) const { return edges_[e]; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const std::vector<int>& rotation(Color c, int v) const {
        return c == Color::Black ? rot_black_[v] : rot_white_[v];
    }
    int degree(Color c, int v) const { return static_cast<int>(rotation(c, v).size()); }

    int vertex(Dart d, bool head) const {
        const EdgeRec& e = edges_[d.edge];
        bool at_white = (d.dir == Dir::BW) == head;
        return at_white ? e.white : e.black;
    }
    Color vertex_color(Dart d, bool head) const {
        return ((d.dir == Dir::BW) == head) ? Color::White : Color::Black;
    }

    int rot_successor(Color c, int v, int e) const { return rot_step(c, v, e, +1); }
    int rot_predecessor(Color c, int v, int e) const { return rot_step(c, v, e, -1); }

    // Face-tracing rule: arrive along d, leave along the rotation successor of
    // d's edge at the arrival vertex.
    Dart face_next(Dart d) const;
    // Zig-zag rule: rotation predecessor at a white vertex, successor at a
    // black vertex.
    Dart strand_next(Dart d) const;

    // All faces, each boundary starting at its smallest dart, faces ordered by
    // that dart. Independent of any starting choice.
    std::vector<Face> faces() const;

    // Signed offset sum around a dart cycle (+offset when traversed BW).
    Vec2 cycle_class(const std::vector<Dart>& cycle) const;

    // Re-gauge offsets: offset'(e) = offset(e) + f(white(e)) - f(black(e)).
    TorusGraph offset_gauge(const std::vector<Vec2>& f_black,
                            const std::vector<Vec2>& f_white) const;

    struct SpanningTree {
        std::vector<int> edges_in_order;   // tree edges, in discovery order
        std::vector<char> in_tree;         // per edge
        std::vector<Vec2> potential_black; // gauge zeroing the tree offsets
        std::vector<Vec2> potential_white;
    };
    // Deterministic BFS spanning tree from black 0, scanning edges by id.
    SpanningTree spanning_tree() const;

    // Gauge all spanning-tree offsets to (0,0); canonical representative of
    // the offset-gauge class.
    TorusGraph normalized_offsets() const;

    // Combinatorial-map isomorphism (colors, rotations) with offsets compared
    // modulo offset gauge.
    bool isomorphic_to(const TorusGraph& other) const;

private:
    int rot_step(Color c, int v, int e, int dir) const;
    void validate() const;

    int black_count_ = 0;
    int white_count_ = 0;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> rot_black_;
    std::vector<std::vector<int>> rot_white_;
};

// face index containing each dart, indexed by dart_key.
std::vector<int> face_index_by_dart(const std::vector<Face>& faces, int edge_count);

}  // namespace dimerlab
