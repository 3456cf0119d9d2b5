#include "dimerlab/kasteleyn.hpp"

#include <algorithm>
#include <map>

#include "dimerlab/gf2.hpp"

namespace dimerlab {

Weighting unit_weights(const TorusGraph& g) {
    Weighting w;
    w.values.assign(g.edge_count(), Rat(1));
    return w;
}

std::vector<int> kasteleyn_orientation(const TorusGraph& g) {
    Gf2System sys;
    sys.nvars = g.edge_count();
    for (const Face& f : g.faces()) {
        std::vector<int> row;
        for (Dart d : f.boundary) row.push_back(d.edge);
        sys.rows.push_back(std::move(row));
        // boundary length 2k: product -1 (bit 1) when 2k = 0 mod 4
        sys.targets.push_back(f.boundary.size() % 4 == 0 ? 1 : 0);
    }
    Gf2Solution sol = gf2_solve(sys);
    if (!sol.feasible)
        throw Error("NoOrientation", "Kasteleyn face conditions are infeasible");
    std::vector<int> kappa(g.edge_count(), 1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (sol.x[e]) kappa[e] = -1;
    return kappa;
}

KasteleynData kasteleyn_matrix(const TorusGraph& g, const Weighting& w,
                               const std::vector<int>& kappa) {
    if (static_cast<int>(w.values.size()) != g.edge_count() ||
        static_cast<int>(kappa.size()) != g.edge_count())
        throw Error("DimensionMismatch", "weighting/kappa size");
    for (const Rat& v : w.values)
        if (v.is_zero()) throw Error("ZeroWeight", "edge weights must be nonzero");
    KasteleynData kd;
    kd.kappa = kappa;
    kd.matrix = kasteleyn_matrix_generic(g, w.values, kappa);
    if (kd.matrix.square()) kd.det = fraction_free_determinant(kd.matrix);
    return kd;
}

LaurentPoly2 spectral_polynomial(const KasteleynData& kd) {
    if (!kd.matrix.square())
        throw Error("ZeroDeterminant", "spectral polynomial of a non-square operator");
    if (kd.det.is_zero()) throw Error("ZeroDeterminant", "determinant vanishes identically");
    return kd.det;
}

Weighting apply_gauge(const TorusGraph& g, const Weighting& w,
                      const std::vector<Rat>& gauge_black, const std::vector<Rat>& gauge_white) {
    if (static_cast<int>(gauge_black.size()) != g.black_count() ||
        static_cast<int>(gauge_white.size()) != g.white_count())
        throw Error("DimensionMismatch", "gauge vector size");
    for (const Rat& v : gauge_black)
        if (v.is_zero()) throw Error("ZeroWeight", "gauge values must be nonzero");
    for (const Rat& v : gauge_white)
        if (v.is_zero()) throw Error("ZeroWeight", "gauge values must be nonzero");
    Weighting out;
    out.values.reserve(w.values.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        const EdgeRec& r = g.edge(e);
        out.values.push_back(gauge_white[r.white] * w.values[e] / gauge_black[r.black]);
    }
    return out;
}

std::vector<Matching> enumerate_matchings(const TorusGraph& g, const Weighting& w) {
    std::vector<Matching> out;
    if (g.black_count() != g.white_count()) return out;
    const int nb = g.black_count();
    std::vector<std::vector<int>> incident(nb);
    for (int e = 0; e < g.edge_count(); ++e) incident[g.edge(e).black].push_back(e);
    std::vector<char> white_used(g.white_count(), 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int b) -> void {
        if (b == nb) {
            Matching m;
            m.edges = chosen;
            m.weight = Rat(1);
            for (int e : chosen) {
                m.cls += g.edge(e).offset;
                m.weight *= w.values[e];
            }
            out.push_back(std::move(m));
            return;
        }
        for (int e : incident[b]) {
            int wv = g.edge(e).white;
            if (white_used[wv]) continue;
            white_used[wv] = 1;
            chosen.push_back(e);
            self(self, b + 1);
            chosen.pop_back();
            white_used[wv] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

SignReport sign_theorem_check(const TorusGraph& g, const Weighting& w) {
    SignReport rep;
    std::vector<int> kappa = kasteleyn_orientation(g);
    KasteleynData kd = kasteleyn_matrix(g, w, kappa);
    if (!kd.matrix.square()) {
        rep.ok = false;
        rep.failure = "operator is not square";
        return rep;
    }
    std::map<Vec2, Rat> sums;
    for (const Matching& m : enumerate_matchings(g, w)) sums[m.cls] += m.weight;
    for (auto it = sums.begin(); it != sums.end();) {
        if (it->second.is_zero())
            it = sums.erase(it);
        else
            ++it;
    }
    std::vector<Vec2> points;
    for (const auto& [e, c] : kd.det.terms()) points.push_back(e);
    for (const auto& [e, s] : sums)
        if (std::find(points.begin(), points.end(), e) == points.end()) points.push_back(e);
    std::sort(points.begin(), points.end());

    for (Vec2 p : points) {
        Rat c = kd.det.coeff(p);
        auto it = sums.find(p);
        Rat s = it == sums.end() ? Rat(0) : it->second;
        if (s.is_zero()) {
            if (!c.is_zero()) {
                rep.ok = false;
                rep.failure = "class " + p.str() + ": determinant coefficient " + c.str() +
                              " but no matchings";
                return rep;
            }
            continue;
        }
        Rat ratio = c / s;
        int sgn = 0;
        if (ratio == Rat(1)) sgn = 1;
        if (ratio == Rat(-1)) sgn = -1;
        if (sgn == 0) {
            rep.ok = false;
            rep.failure = "class " + p.str() + ": coefficient " + c.str() +
                          " is not +-(matching sum " + s.str() + ")";
            return rep;
        }
        int& slot = rep.sign[p.x & 1][p.y & 1];
        if (slot == 0) {
            slot = sgn;
        } else if (slot != sgn) {
            rep.ok = false;
            rep.failure = "class " + p.str() + ": sign conflicts with its parity class";
            return rep;
        }
        rep.lines.push_back("class=" + p.str() + " coeff=" + c.str() + " matching-sum=" +
                            s.str() + " sign=" + (sgn > 0 ? "+1" : "-1"));
    }
    return rep;
}

int evaluate_corank(const KasteleynData& kd, const Rat& x0, const Rat& y0) {
    if (x0.is_zero() || y0.is_zero())
        throw Error("BadPoint", "corank evaluation requires nonzero coordinates");
    Mat<Rat> m(kd.matrix.rows, kd.matrix.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = kd.matrix.at(r, c).evaluate(x0, y0);
    return kd.matrix.rows - rational_rank(std::move(m));
}

}  // namespace dimerlab
