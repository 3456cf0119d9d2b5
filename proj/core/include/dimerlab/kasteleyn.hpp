#pragma once

#include <string>
#include <vector>

#include "dimerlab/laurent.hpp"
#include "dimerlab/matrix.hpp"
#include "dimerlab/torus_graph.hpp"

namespace dimerlab {

// Nonzero rational weight per edge (a gauge-fixed rank-one local system).
struct Weighting {
    std::vector<Rat> values;
};

Weighting unit_weights(const TorusGraph& g);

// Edge signs kappa with the face rule: the product around a face of boundary
// length 2k is -1 when 2k = 0 mod 4 and +1 when 2k = 2 mod 4. Solved as a
// GF(2) system with the deterministic lowest-variable-first pivot order.
// Throws NoOrientation when infeasible.
std::vector<int> kasteleyn_orientation(const TorusGraph& g);

template <class K>
Mat<LaurentPolynomial<K>> kasteleyn_matrix_generic(const TorusGraph& g,
                                                   const std::vector<K>& weights,
                                                   const std::vector<int>& kappa) {
    Mat<LaurentPolynomial<K>> m(g.white_count(), g.black_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const EdgeRec& r = g.edge(e);
        K c = weights[e];
        if (kappa[e] < 0) c = -c;
        m.at(r.white, r.black).add_term(r.offset, std::move(c));
    }
    return m;
}

struct KasteleynData {
    std::vector<int> kappa;
    Mat<LaurentPoly2> matrix;  // rows = white vertices, columns = black
    LaurentPoly2 det;          // zero polynomial when the matrix is not square
};

KasteleynData kasteleyn_matrix(const TorusGraph& g, const Weighting& w,
                               const std::vector<int>& kappa);

// The raw spectral polynomial det K(x,y); errors with ZeroDeterminant when it
// vanishes identically (or the matrix is not square).
LaurentPoly2 spectral_polynomial(const KasteleynData& kd);

// Canonical representative modulo monomial factors and scalars: shift the
// support so min i = min j = 0, then divide by the coefficient at the
// lexicographically least support point.
template <class K>
LaurentPolynomial<K> normalize_spectral(const LaurentPolynomial<K>& f) {
    if (f.is_zero()) throw Error("ZeroDeterminant", "normalizing the zero polynomial");
    long long mi = 0, mj = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            mi = e.x;
            mj = e.y;
            first = false;
        } else {
            mi = std::min(mi, e.x);
            mj = std::min(mj, e.y);
        }
    }
    LaurentPolynomial<K> shifted = f.shifted({-mi, -mj});
    K lead = shifted.terms().begin()->second;
    return shifted.scaled(lead.inverse());
}

// w'(E) = gauge_white(white(E)) * w(E) / gauge_black(black(E)).
Weighting apply_gauge(const TorusGraph& g, const Weighting& w,
                      const std::vector<Rat>& gauge_black, const std::vector<Rat>& gauge_white);

struct Matching {
    std::vector<int> edges;
    Vec2 cls;
    Rat weight;
};

// Exhaustive backtracking enumeration over black vertices in index order;
// empty when black_count != white_count or no perfect matching exists.
std::vector<Matching> enumerate_matchings(const TorusGraph& g, const Weighting& w);

// Master oracle: every raw determinant coefficient must equal
// +-(class-wise weighted matching sum), with the sign depending only on the
// exponents mod 2.
struct SignReport {
    bool ok = true;
    std::string failure;
    int sign[2][2] = {{0, 0}, {0, 0}};  // 0 = parity class not observed
    std::vector<std::string> lines;
};

SignReport sign_theorem_check(const TorusGraph& g, const Weighting& w);

// Corank of the scalar matrix K(x0, y0) over the rationals.
int evaluate_corank(const KasteleynData& kd, const Rat& x0, const Rat& y0);

}  // namespace dimerlab
