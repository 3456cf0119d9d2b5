#include "dimerlab/torus_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dimerlab {

namespace {

std::vector<int> canonical_cycle(std::vector<int> rot) {
    if (rot.empty()) return rot;
    auto it = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), it, rot.end());
    return rot;
}

}  // namespace

int TorusGraph::rot_step(Color c, int v, int e, int dir) const {
    const std::vector<int>& rot = rotation(c, v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (rot[i] == e) {
            std::size_t n = rot.size();
            return rot[(i + n + dir) % n];
        }
    }
    throw Error("RotationMismatch", "edge " + std::to_string(e) + " not incident to vertex");
}

Dart TorusGraph::face_next(Dart d) const {
    Color c = vertex_color(d, true);
    int v = vertex(d, true);
    int e = rot_successor(c, v, d.edge);
    return Dart{e, c == Color::White ? Dir::WB : Dir::BW};
}

Dart TorusGraph::strand_next(Dart d) const {
    Color c = vertex_color(d, true);
    int v = vertex(d, true);
    int e = c == Color::White ? rot_predecessor(c, v, d.edge) : rot_successor(c, v, d.edge);
    return Dart{e, c == Color::White ? Dir::WB : Dir::BW};
}

std::vector<Face> TorusGraph::faces() const {
    const int E = edge_count();
    std::vector<char> seen(2 * E, 0);
    std::vector<Face> out;
    for (int key = 0; key < 2 * E; ++key) {
        if (seen[key]) continue;
        Dart start{key / 2, key % 2 ? Dir::WB : Dir::BW};
        Face f;
        Dart d = start;
        do {
            seen[dart_key(d)] = 1;
            f.boundary.push_back(d);
            d = face_next(d);
        } while (d != start);
        out.push_back(std::move(f));
    }
    // boundaries already start at their smallest dart: the orbit scan starts
    // from the smallest unseen dart of each face.
    return out;
}

Vec2 TorusGraph::cycle_class(const std::vector<Dart>& cycle) const {
    Vec2 total;
    for (Dart d : cycle) {
        Vec2 o = edges_[d.edge].offset;
        total += d.dir == Dir::BW ? o : -o;
    }
    return total;
}

TorusGraph TorusGraph::offset_gauge(const std::vector<Vec2>& f_black,
                                    const std::vector<Vec2>& f_white) const {
    if (static_cast<int>(f_black.size()) != black_count_ ||
        static_cast<int>(f_white.size()) != white_count_)
        throw Error("DimensionMismatch", "gauge vector sizes");
    std::vector<EdgeRec> edges = edges_;
    for (EdgeRec& e : edges) e.offset += f_white[e.white] - f_black[e.black];
    return build(black_count_, white_count_, std::move(edges), rot_black_, rot_white_);
}

TorusGraph::SpanningTree TorusGraph::spanning_tree() const {
    SpanningTree t;
    t.in_tree.assign(edge_count(), 0);
    t.potential_black.assign(black_count_, Vec2{});
    t.potential_white.assign(white_count_, Vec2{});
    std::vector<char> seen_b(black_count_, 0), seen_w(white_count_, 0);
    seen_b[0] = 1;
    // BFS over vertices; at each step take the smallest-id edge joining the
    // seen set to a new vertex.
    for (;;) {
        int pick = -1;
        for (int e = 0; e < edge_count(); ++e) {
            const EdgeRec& r = edges_[e];
            if (seen_b[r.black] != seen_w[r.white]) {
                pick = e;
                break;
            }
        }
        if (pick < 0) break;
        const EdgeRec& r = edges_[pick];
        t.in_tree[pick] = 1;
        t.edges_in_order.push_back(pick);
        // Choose potentials so that offset + f(white) - f(black) = 0 on tree
        // edges.
        if (seen_b[r.black]) {
            seen_w[r.white] = 1;
            t.potential_white[r.white] = t.potential_black[r.black] - r.offset;
        } else {
            seen_b[r.black] = 1;
            t.potential_black[r.black] = t.potential_white[r.white] + r.offset;
        }
    }
    for (char s : seen_b)
        if (!s) throw ValidationError("Disconnected", "graph is not connected");
    for (char s : seen_w)
        if (!s) throw ValidationError("Disconnected", "graph is not connected");
    return t;
}

TorusGraph TorusGraph::normalized_offsets() const {
    SpanningTree t = spanning_tree();
    return offset_gauge(t.potential_black, t.potential_white);
}

void TorusGraph::validate() const {
    if (black_count_ <= 0 || white_count_ <= 0)
        throw ValidationError("EmptyGraph", "need at least one vertex of each color");
    std::vector<std::vector<int>> inc_b(black_count_), inc_w(white_count_);
    for (int e = 0; e < edge_count(); ++e) {
        const EdgeRec& r = edges_[e];
        if (r.black < 0 || r.black >= black_count_ || r.white < 0 || r.white >= white_count_)
            throw ValidationError("IdOutOfRange", "edge " + std::to_string(e) +
                                                      " references a missing vertex");
        inc_b[r.black].push_back(e);
        inc_w[r.white].push_back(e);
    }
    auto check_rotations = [&](const std::vector<std::vector<int>>& rot,
                               const std::vector<std::vector<int>>& inc, const char* tag) {
        for (std::size_t v = 0; v < rot.size(); ++v) {
            if (inc[v].size() < 2)
                throw ValidationError("DegreeTooSmall", std::string(tag) + std::to_string(v) +
                                                            " has degree < 2");
            std::vector<int> a = rot[v], b = inc[v];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                throw ValidationError("RotationMismatch",
                                      std::string("rotation at ") + tag + std::to_string(v) +
                                          " is not a permutation of its incident edges");
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw ValidationError("RotationMismatch",
                                      std::string("repeated edge in rotation at ") + tag +
                                          std::to_string(v));
        }
    };
    check_rotations(rot_black_, inc_b, "b");
    check_rotations(rot_white_, inc_w, "w");

    std::vector<Face> fs = faces();
    long long V = black_count_ + white_count_, E = edge_count(),
              F = static_cast<long long>(fs.size());
    if (V - E + F != 0)
        throw ValidationError("EulerCharacteristic",
                              "V - E + F = " + std::to_string(V - E + F) + ", expected 0");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!cycle_class(fs[i].boundary).is_zero())
            throw ValidationError("FaceOffsetNonzero", "face " + std::to_string(i) +
                                                           " has nonzero offset sum");
        if (fs[i].boundary.size() % 2 != 0)
            throw ValidationError("OddFace", "face boundary of odd length");
    }
    SpanningTree t = spanning_tree();  // throws Disconnected
    // Cycle classes must span Z^2: the complement of a cellularly embedded
    // graph has disc faces, so graph cycles surject onto the homology of the
    // torus. Tree-gauged offsets of the non-tree edges are exactly the
    // fundamental cycle classes.
    {
        Vec2 g1{0, 0}, g2{0, 0};
        auto absorb = [&](Vec2 v) {
            // column-reduce {g1, g2, v} to two generators
            while (v.x != 0) {
                if (g1.x == 0) {
                    std::swap(g1, v);
                    continue;
                }
                if (llabs(v.x) < llabs(g1.x)) std::swap(g1, v);
                v -= (v.x / g1.x) * g1;
            }
            while (v.y != 0) {
                if (g2.y == 0) {
                    std::swap(g2, v);
                    continue;
                }
                if (llabs(v.y) < llabs(g2.y)) std::swap(g2, v);
                v -= (v.y / g2.y) * g2;
            }
        };
        for (int e = 0; e < edge_count(); ++e) {
            if (t.in_tree[e]) continue;
            const EdgeRec& r = edges_[e];
            absorb(r.offset + t.potential_white[r.white] - t.potential_black[r.black]);
        }
        if (llabs(g1.x * g2.y) != 1)
            throw ValidationError("HomologyDefect",
                                  "offsets do not span the homology of the torus");
    }
}

TorusGraph TorusGraph::build(int black_count, int white_count, std::vector<EdgeRec> edges,
                             std::vector<std::vector<int>> rot_black,
                             std::vector<std::vector<int>> rot_white) {
    TorusGraph g;
    g.black_count_ = black_count;
    g.white_count_ = white_count;
    g.edges_ = std::move(edges);
    g.rot_black_ = std::move(rot_black);
    g.rot_white_ = std::move(rot_white);
    if (static_cast<int>(g.rot_black_.size()) != black_count ||
        static_cast<int>(g.rot_white_.size()) != white_count)
        throw ValidationError("MissingRotation", "one rotation line per vertex required");
    g.validate();
    return g;
}

TorusGraph TorusGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string s = raw.substr(0, raw.find('#'));
            std::size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t b = s.find_last_not_of(" \t\r");
            out = s.substr(a, b - a + 1);
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line) || line != "torus-graph v1")
        throw ParseError(lineno, "expected header 'torus-graph v1'");

    auto read_count = [&](const char* key) {
        std::string l;
        if (!next_line(l)) throw ParseError(lineno, std::string("expected '") + key + " <n>'");
        std::istringstream ls(l);
        std::string k;
        long n = -1;
        ls >> k >> n;
        if (k != key || n < 0 || !ls.eof())
            throw ParseError(lineno, std::string("expected '") + key + " <n>', got '" + l + "'");
        return static_cast<int>(n);
    };
    int nb = read_count("black");
    int nw = read_count("white");

    std::vector<EdgeRec> edges;
    std::vector<std::vector<int>> rot_b(nb), rot_w(nw);
    std::vector<char> have_b(nb, 0), have_w(nw, 0);
    bool in_rotations = false;
    while (next_line(line)) {
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "edge") {
            if (in_rotations) throw ParseError(lineno, "edge line after rotation lines");
            long b, w;
            long long dx, dy;
            if (!(ls >> b >> w >> dx >> dy))
                throw ParseError(lineno, "expected 'edge <black> <white> <dx> <dy>'");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens on edge line");
            edges.push_back(EdgeRec{static_cast<int>(b), static_cast<int>(w), Vec2{dx, dy}});
        } else if (kind == "rot") {
            in_rotations = true;
            std::string label;
            ls >> label;
            if (label.size() < 3 || label.back() != ':' ||
                (label[0] != 'b' && label[0] != 'w'))
                throw ParseError(lineno, "expected 'rot b<i>:' or 'rot w<j>:'");
            int v;
            try {
                v = std::stoi(label.substr(1, label.size() - 2));
            } catch (...) {
                throw ParseError(lineno, "bad vertex id in '" + label + "'");
            }
            bool is_black = label[0] == 'b';
            if (v < 0 || v >= (is_black ? nb : nw))
                throw ParseError(lineno, "vertex id out of range in '" + label + "'");
            std::vector<int> ids;
            long id;
            while (ls >> id) ids.push_back(static_cast<int>(id));
            if (!ls.eof()) throw ParseError(lineno, "bad edge id on rotation line");
            auto& have = is_black ? have_b : have_w;
            if (have[v]) throw ParseError(lineno, "duplicate rotation for '" + label + "'");
            have[v] = 1;
            (is_black ? rot_b : rot_w)[v] = std::move(ids);
        } else {
            throw ParseError(lineno, "unrecognized line '" + line + "'");
        }
    }
    for (int v = 0; v < nb; ++v)
        if (!have_b[v]) throw ParseError(lineno, "missing rotation for b" + std::to_string(v));
    for (int v = 0; v < nw; ++v)
        if (!have_w[v]) throw ParseError(lineno, "missing rotation for w" + std::to_string(v));
    return build(nb, nw, std::move(edges), std::move(rot_b), std::move(rot_w));
}

std::string TorusGraph::serialize() const {
    std::ostringstream out;
    out << "torus-graph v1\n";
    out << "black " << black_count_ << "\n";
    out << "white " << white_count_ << "\n";
    for (const EdgeRec& e : edges_)
        out << "edge " << e.black << " " << e.white << " " << e.offset.x << " " << e.offset.y
            << "\n";
    auto dump = [&](char tag, const std::vector<std::vector<int>>& rots) {
        for (std::size_t v = 0; v < rots.size(); ++v) {
            out << "rot " << tag << v << ":";
            for (int e : canonical_cycle(rots[v])) out << " " << e;
            out << "\n";
        }
    };
    dump('b', rot_black_);
    dump('w', rot_white_);
    return out.str();
}

bool TorusGraph::isomorphic_to(const TorusGraph& other) const {
    if (black_count_ != other.black_count_ || white_count_ != other.white_count_ ||
        edge_count() != other.edge_count())
        return false;
    const int E = edge_count();
    if (E == 0) return true;
    // A color-preserving map isomorphism is determined by the image of one
    // edge; propagate through rotation successors at both endpoints.
    for (int e0 = 0; e0 < E; ++e0) {
        std::vector<int> edge_map(E, -1), black_map(black_count_, -1),
            white_map(white_count_, -1);
        bool ok = true;
        std::vector<int> stack{0};
        edge_map[0] = e0;
        auto bind_vertex = [&](std::vector<int>& vmap, int a, int b) {
            if (vmap[a] == -1) {
                vmap[a] = b;
                return true;
            }
            return vmap[a] == b;
        };
        const EdgeRec& r0 = edges_[0];
        const EdgeRec& s0 = other.edges_[e0];
        if (!bind_vertex(black_map, r0.black, s0.black) ||
            !bind_vertex(white_map, r0.white, s0.white))
            continue;
        while (ok && !stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            int b = edge_map[a];
            const EdgeRec& ra = edges_[a];
            const EdgeRec& rb = other.edges_[b];
            for (Color c : {Color::Black, Color::White}) {
                int va = c == Color::Black ? ra.black : ra.white;
                int vb = c == Color::Black ? rb.black : rb.white;
                if (degree(c, va) != other.degree(c, vb)) {
                    ok = false;
                    break;
                }
                int na = rot_successor(c, va, a);
                int nb = other.rot_successor(c, vb, b);
                if (edge_map[na] == -1) {
                    edge_map[na] = nb;
                    const EdgeRec& rn = edges_[na];
                    const EdgeRec& sn = other.edges_[nb];
                    if (!bind_vertex(black_map, rn.black, sn.black) ||
                        !bind_vertex(white_map, rn.white, sn.white)) {
                        ok = false;
                        break;
                    }
                    stack.push_back(na);
                } else if (edge_map[na] != nb) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (int e = 0; e < E && ok; ++e)
            if (edge_map[e] == -1) ok = false;  // disconnected would be invalid anyway
        if (!ok) continue;
        // Verify the full rotation structure, then compare offsets modulo
        // gauge by relabeling `other` back and normalizing both.
        for (int v = 0; v < black_count_ && ok; ++v)
            for (int e : rot_black_[v])
                if (other.rot_successor(Color::Black, black_map[v], edge_map[e]) !=
                    edge_map[rot_successor(Color::Black, v, e)])
                    ok = false;
        for (int v = 0; v < white_count_ && ok; ++v)
            for (int e : rot_white_[v])
                if (other.rot_successor(Color::White, white_map[v], edge_map[e]) !=
                    edge_map[rot_successor(Color::White, v, e)])
                    ok = false;
        if (!ok) continue;
        std::vector<EdgeRec> pulled(E);
        std::vector<std::vector<int>> rb(black_count_), rw(white_count_);
        std::vector<int> edge_back(E);
        for (int e = 0; e < E; ++e) edge_back[edge_map[e]] = e;
        for (int e = 0; e < E; ++e) {
            const EdgeRec& s = other.edges_[edge_map[e]];
            pulled[e] = EdgeRec{edges_[e].black, edges_[e].white, s.offset};
        }
        for (int v = 0; v < black_count_; ++v) {
            for (int e : other.rot_black_[black_map[v]]) rb[v].push_back(edge_back[e]);
        }
        for (int v = 0; v < white_count_; ++v) {
            for (int e : other.rot_white_[white_map[v]]) rw[v].push_back(edge_back[e]);
        }
        try {
            TorusGraph back = build(black_count_, white_count_, pulled, rb, rw);
            TorusGraph a = normalized_offsets();
            TorusGraph b = back.normalized_offsets();
            bool same = true;
            for (int e = 0; e < E; ++e)
                if (a.edges_[e].offset != b.edges_[e].offset) same = false;
            if (same) return true;
        } catch (const Error&) {
        }
    }
    return false;
}

std::vector<int> face_index_by_dart(const std::vector<Face>& faces, int edge_count) {
    std::vector<int> idx(2 * edge_count, -1);
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (Dart d : faces[f].boundary) idx[dart_key(d)] = static_cast<int>(f);
    return idx;
}

}  // namespace dimerlab
