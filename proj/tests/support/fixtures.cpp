#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fixtures {

using dimerlab::EdgeRec;

TorusGraph hex1() {
    return TorusGraph::build(1, 1,
                             {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {0, 0, {0, 1}}},
                             {{0, 1, 2}}, {{0, 1, 2}});
}

TorusGraph sq1() {
    return TorusGraph::build(1, 1,
                             {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {0, 0, {0, 1}}, {0, 0, {1, 1}}},
                             {{0, 1, 3, 2}}, {{0, 1, 3, 2}});
}

TorusGraph sq2() {
    // Quad face b0-w0-b1-w1 in the middle, pendant whites w2/w3 on the black
    // corners, a lower black b2 carrying the white corners' externals, and b3
    // closing the pendant chain around the torus.
    std::vector<EdgeRec> edges = {
        {0, 0, {0, 0}},   // 0: quad SW
        {1, 0, {0, 0}},   // 1: quad SE
        {1, 1, {0, 0}},   // 2: quad NE
        {0, 1, {0, 0}},   // 3: quad NW
        {0, 2, {0, 0}},   // 4: pendant edge at b0
        {1, 3, {0, 0}},   // 5: pendant edge at b1
        {3, 2, {1, 0}},   // 6: pendant outer, wraps in x
        {3, 3, {0, 0}},   // 7: pendant outer
        {2, 0, {0, 0}},   // 8: w0 external
        {2, 1, {0, -1}},  // 9: w1 external, wraps in y
    };
    return TorusGraph::build(4, 4, std::move(edges),
                             {{0, 3, 4}, {1, 5, 2}, {8, 9}, {6, 7}},
                             {{0, 8, 1}, {2, 9, 3}, {4, 6}, {5, 7}});
}

TorusGraph cover(const TorusGraph& base, int nx, int ny) {
    const int cells = nx * ny;
    auto cell = [&](long long i, long long j) {
        long long ci = ((i % nx) + nx) % nx, cj = ((j % ny) + ny) % ny;
        return static_cast<int>(ci + nx * cj);
    };
    const int nb = base.black_count(), nw = base.white_count(), ne = base.edge_count();
    std::vector<EdgeRec> edges(static_cast<std::size_t>(ne) * cells);
    for (int e = 0; e < ne; ++e) {
        const EdgeRec& r = base.edge(e);
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                long long ti = i + r.offset.x, tj = j + r.offset.y;
                long long qx = ti >= 0 ? ti / nx : -(( -ti + nx - 1) / nx);
                long long qy = tj >= 0 ? tj / ny : -(( -tj + ny - 1) / ny);
                edges[e * cells + cell(i, j)] =
                    EdgeRec{r.black * cells + cell(i, j), r.white * cells + cell(ti, tj),
                            Vec2{qx, qy}};
            }
    }
    std::vector<std::vector<int>> rb(nb * cells), rw(nw * cells);
    for (int v = 0; v < nb; ++v)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                for (int e : base.rotation(dimerlab::Color::Black, v))
                    rb[v * cells + cell(i, j)].push_back(e * cells + cell(i, j));
    for (int v = 0; v < nw; ++v)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                for (int e : base.rotation(dimerlab::Color::White, v)) {
                    const EdgeRec& r = base.edge(e);
                    rw[v * cells + cell(i, j)].push_back(
                        e * cells + cell(i - r.offset.x, j - r.offset.y));
                }
    return TorusGraph::build(nb * cells, nw * cells, std::move(edges), std::move(rb),
                             std::move(rw));
}

TorusGraph hex2() { return cover(hex1(), 2, 1); }
TorusGraph hex4() { return cover(hex1(), 2, 2); }
TorusGraph square2x2() { return cover(sq1(), 2, 2); }
TorusGraph square3x2() { return cover(sq1(), 3, 2); }

TorusGraph bad_bigon() {
    // hex1 with its (0,0) edge doubled; the two parallel strands through the
    // doubled pair cross once per period with aligned arcs.
    return TorusGraph::build(1, 1,
                             {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {0, 0, {0, 1}}, {0, 0, {0, 0}}},
                             {{0, 1, 2, 3}}, {{0, 3, 1, 2}});
}

TorusGraph trivial_class() {
    // b0 is joined to each of w0, w1 by a doubled zero-offset pair; the strand
    // through those pairs encircles b0, a contractible loop of class (0,0).
    return TorusGraph::build(2, 2,
                             {{0, 0, {0, 0}},
                              {0, 0, {0, 0}},
                              {0, 1, {0, 0}},
                              {0, 1, {0, 0}},
                              {1, 0, {-1, -1}},
                              {1, 1, {-1, 0}},
                              {1, 0, {0, -1}}},
                             {{0, 1, 2, 3}, {4, 6, 5}}, {{0, 4, 6, 1}, {2, 5, 3}});
}

TorusGraph split_vertex(const TorusGraph& g, dimerlab::Color c, int v, int keepA, int keepB) {
    using dimerlab::Color;
    if (g.rot_successor(c, v, keepA) != keepB)
        throw std::runtime_error("split_vertex: kept edges must be rotation-adjacent");
    std::vector<int> rest;
    for (int e = g.rot_successor(c, v, keepB); e != keepA; e = g.rot_successor(c, v, e))
        rest.push_back(e);

    int nb = g.black_count(), nw = g.white_count(), ne = g.edge_count();
    std::vector<EdgeRec> edges = g.edges();
    std::vector<std::vector<int>> rb(nb), rw(nw);
    for (int i = 0; i < nb; ++i) rb[i] = g.rotation(Color::Black, i);
    for (int i = 0; i < nw; ++i) rw[i] = g.rotation(Color::White, i);

    if (c == Color::Black) {
        int wm = nw, b2 = nb;
        int p1 = ne, p2 = ne + 1;
        for (int e : rest) edges[e].black = b2;
        edges.push_back(EdgeRec{v, wm, {0, 0}});
        edges.push_back(EdgeRec{b2, wm, {0, 0}});
        rb[v] = {keepA, keepB, p1};
        std::vector<int> r2 = rest;
        r2.push_back(p2);
        rb.push_back(r2);
        rw.push_back({p1, p2});
        return TorusGraph::build(nb + 1, nw + 1, std::move(edges), std::move(rb),
                                 std::move(rw));
    }
    int bm = nb, w2 = nw;
    int p1 = ne, p2 = ne + 1;
    for (int e : rest) edges[e].white = w2;
    edges.push_back(EdgeRec{bm, v, {0, 0}});
    edges.push_back(EdgeRec{bm, w2, {0, 0}});
    rw[v] = {keepA, keepB, p1};
    std::vector<int> r2 = rest;
    r2.push_back(p2);
    rw.push_back(r2);
    rb.push_back({p1, p2});
    return TorusGraph::build(nb + 1, nw + 1, std::move(edges), std::move(rb), std::move(rw));
}

TorusGraph make_move_ready(const TorusGraph& g, int face) {
    using dimerlab::Color;
    using dimerlab::Dart;
    using dimerlab::Dir;
    std::vector<dimerlab::Face> fs = g.faces();
    std::vector<Dart> b = fs.at(face).boundary;
    if (b.size() != 4) throw std::runtime_error("make_move_ready: face is not a quad");
    if (b[0].dir == Dir::WB) std::rotate(b.begin(), b.begin() + 1, b.end());
    TorusGraph out = g;
    for (int k = 0; k < 4; ++k) {
        // corner between boundary darts k and k+1: arrive edge, leave edge
        Dart arrive = b[k];
        Dart leave = b[(k + 1) % 4];
        Color c = out.vertex_color(arrive, true);
        int v = out.vertex(arrive, true);
        if (out.degree(c, v) > 3) out = split_vertex(out, c, v, arrive.edge, leave.edge);
    }
    return out;
}

namespace {

Drawing base_hex_drawing() {
    Drawing d;
    d.period_x = d.period_y = 900;
    d.black_pos = {{300, 600}};
    d.white_pos = {{600, 300}};
    return d;
}

Drawing base_sq_drawing() {
    Drawing d;
    d.period_x = d.period_y = 900;
    d.black_pos = {{675, 675}};
    d.white_pos = {{225, 225}};
    return d;
}

Drawing cover_drawing(const Drawing& base, int nx, int ny) {
    Drawing d;
    d.period_x = base.period_x * nx;
    d.period_y = base.period_y * ny;
    // cell order must match cover(): index = i + nx*j appended per base vertex
    d.black_pos.assign(base.black_pos.size() * nx * ny, Vec2{});
    d.white_pos.assign(base.white_pos.size() * nx * ny, Vec2{});
    for (std::size_t v = 0; v < base.black_pos.size(); ++v)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                d.black_pos[v * nx * ny + i + nx * j] =
                    base.black_pos[v] + Vec2{base.period_x * i, base.period_y * j};
    for (std::size_t v = 0; v < base.white_pos.size(); ++v)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                d.white_pos[v * nx * ny + i + nx * j] =
                    base.white_pos[v] + Vec2{base.period_x * i, base.period_y * j};
    return d;
}

Drawing sq2_drawing() {
    Drawing d;
    d.period_x = d.period_y = 900;
    d.black_pos = {{300, 450}, {600, 450}, {450, 30}, {870, 450}};
    d.white_pos = {{450, 300}, {450, 600}, {150, 450}, {750, 450}};
    return d;
}

}  // namespace

Drawing drawing_for(const std::string& name) {
    if (name == "hex1") return base_hex_drawing();
    if (name == "sq1") return base_sq_drawing();
    if (name == "hex2") return cover_drawing(base_hex_drawing(), 2, 1);
    if (name == "hex4") return cover_drawing(base_hex_drawing(), 2, 2);
    if (name == "square2x2") return cover_drawing(base_sq_drawing(), 2, 2);
    if (name == "square3x2") return cover_drawing(base_sq_drawing(), 3, 2);
    if (name == "sq2") return sq2_drawing();
    if (name == "bad-bigon") {
        Drawing d = base_hex_drawing();
        d.edge_disp = {{0, 1}, {3, -1}};
        return d;
    }
    if (name == "trivial-class") {
        Drawing d;
        d.period_x = d.period_y = 900;
        d.black_pos = {{450, 450}, {450, 750}};
        d.white_pos = {{200, 450}, {700, 450}};
        d.edge_disp = {{0, -1}, {1, 1}, {2, -1}, {3, 1}};
        return d;
    }
    throw std::runtime_error("no drawing for fixture '" + name + "'");
}

std::vector<Named> all_fixtures() {
    std::vector<Named> out;
    auto add = [&](const std::string& name, TorusGraph g) {
        out.push_back(Named{name, std::move(g), drawing_for(name)});
    };
    add("hex1", hex1());
    add("sq1", sq1());
    add("hex2", hex2());
    add("sq2", sq2());
    add("hex4", hex4());
    add("square2x2", square2x2());
    add("square3x2", square3x2());
    add("bad-bigon", bad_bigon());
    add("trivial-class", trivial_class());
    return out;
}

std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".tg";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace fixtures
