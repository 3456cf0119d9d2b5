#pragma once

#include <string>
#include <vector>

#include "dimerlab/jet.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/torus_graph.hpp"

namespace dimerlab {

// Per-graph combinatorial data behind face coordinates and weight
// reconstruction: faces, the dual quiver, a deterministic spanning tree, a
// homology basis of cycles, and the (unimodular) exponent matrix inverse that
// solves weights from coordinates.
struct ClusterGeometry {
    std::vector<Face> faces;
    std::vector<int> face_of_dart;
    std::vector<std::vector<long long>> eps;  // skew dual-quiver exchange matrix
    TorusGraph::SpanningTree tree;
    std::vector<int> cotree;  // non-tree edges, ascending

    // Net exponent of each edge in each constraint cycle (faces traversed as
    // traced; two homology basis cycles of classes (1,0) and (0,1)).
    std::vector<std::vector<long long>> face_exponents;   // F x E
    std::vector<std::vector<long long>> cycle_exponents;  // 2 x E

    // Integer inverse of the (faces 0..F-2, cycles) x cotree exponent matrix.
    std::vector<std::vector<long long>> inverse;  // m x m, m = E - V + 1
};

ClusterGeometry cluster_geometry(const TorusGraph& g);

// A cluster seed: face coordinates with product 1, the dual-quiver exchange
// matrix, and the two quasimomenta (holonomies along the canonical homology
// basis cycles).
struct ClusterSeed {
    TorusGraph graph;
    std::vector<Rat> X;
    std::vector<std::vector<long long>> eps;
    Rat qx, qy;
};

ClusterSeed face_coordinates(const TorusGraph& g, const Weighting& w);

template <class K>
K holonomy(const std::vector<long long>& exponents, const std::vector<K>& weights) {
    K acc(1);
    for (std::size_t e = 0; e < exponents.size(); ++e) {
        if (exponents[e] == 0) continue;
        acc = acc * weights[e].pow(static_cast<long>(exponents[e]));
    }
    return acc;
}

// Weights realizing the given face coordinates (all but the last face; the
// last is determined by the product-1 relation) and quasimomenta, in the
// spanning-tree gauge (tree edges have weight 1). K is Rat in the main
// pipeline and Jet for derivative evaluation.
template <class K>
std::vector<K> reconstruct_weights_generic(const TorusGraph& g, const ClusterGeometry& geo,
                                           const std::vector<K>& face_values, const K& qx,
                                           const K& qy) {
    const std::size_t m = geo.cotree.size();
    if (face_values.size() != geo.faces.size() - 1)
        throw Error("DimensionMismatch", "expected F-1 face values");
    std::vector<K> rhs;
    rhs.reserve(m);
    for (const K& v : face_values) rhs.push_back(v);
    rhs.push_back(qx);
    rhs.push_back(qy);
    std::vector<K> w(g.edge_count(), K(1));
    for (std::size_t i = 0; i < m; ++i) {
        K acc(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (geo.inverse[i][j] == 0) continue;
            acc = acc * rhs[j].pow(static_cast<long>(geo.inverse[i][j]));
        }
        w[geo.cotree[i]] = acc;
    }
    return w;
}

// Checks the product-1 relation, then solves. Errors: InconsistentSeed.
Weighting reconstruct_weights(const TorusGraph& g, const ClusterSeed& seed);

// Offset gauge making every edge of the given face carry offset (0,0)
// (possible because faces are contractible). Used to prepare square moves.
TorusGraph zero_face_offsets(const TorusGraph& g, int face);

// Square move at a quadrilateral face. Preconditions: the face is a
// quadrilateral with four distinct trivalent corners, its edge offsets are
// zero, and each black corner's external edge ends at a degree-2 white vertex
// (the local picture of the move). Errors: NotQuadrilateral, NotTrivalent,
// NonzeroFaceOffsets, PendantStructure.
struct SquareMoveResult {
    TorusGraph graph;
    std::vector<int> face_map;  // new face index -> old face index
    int new_quad_face = -1;     // index of the quad face in the new graph
};

SquareMoveResult square_move_ex(const TorusGraph& g, int face);
TorusGraph square_move(const TorusGraph& g, int face);

// Weight-and-orientation surgery accompanying the square move: the returned
// pair reproduces the spectral polynomial of (w, kappa) up to a monomial
// factor and a scalar.
struct MovedWeights {
    Weighting weights;
    std::vector<int> kappa;
};

MovedWeights square_move_weights(const TorusGraph& g, const Weighting& w,
                                 const std::vector<int>& kappa, int face);

// Cluster X-transformation at a quadrilateral face: X_M inverts, faces across
// an arrow out of M gain (1+X_M) per shared edge, faces across an arrow into
// M gain (1+X_M^-1)^-1; the exchange matrix mutates. Quasimomenta follow the
// weight surgery. Errors: SingularTransform when X_M = -1.
ClusterSeed x_transform(const ClusterSeed& seed, int face);

struct Hamiltonians {
    std::vector<std::pair<Vec2, Rat>> interior;  // the Hamiltonians
    std::vector<std::pair<Vec2, Rat>> boundary;  // Casimir coefficients
};

// Coefficients of the normalized spectral polynomial at the interior and
// boundary lattice points of its Newton polygon.
Hamiltonians hamiltonians(const TorusGraph& g, const Weighting& w);

// {X_f, X_g} = eps_fg X_f X_g.
Rat poisson_bracket(const ClusterSeed& seed, int f, int g);

// Evaluates all pairwise brackets {H_a, H_b} and {H_a, casimir} at the seed
// point, running the reconstruct -> determinant -> normalize pipeline in jet
// arithmetic over the face variables (quasimomenta fixed).
struct CommutativityReport {
    bool all_zero = false;
    int hamiltonian_count = 0;
    int pairs_checked = 0;
    std::string failure;
};

CommutativityReport commutativity_check(const TorusGraph& g, const ClusterSeed& seed);

// Full square-move invariance bundle: the normalized spectral polynomial is
// unchanged under (square_move, x_transform), the transformed face
// coordinates match the weight surgery, and the double move restores the
// graph and seed.
struct MutationReport {
    bool ok = false;
    bool curve_equal = false;
    bool x_formulas_match = false;
    bool involution_graph = false;
    bool involution_seed = false;
    std::string detail;
};

MutationReport mutation_invariance_check(const TorusGraph& g, int face, const ClusterSeed& seed);

}  // namespace dimerlab
