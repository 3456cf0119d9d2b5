#include <doctest.h>

#include <algorithm>

#include "dimerlab/cluster.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/random.hpp"
#include "dimerlab/zigzag.hpp"
#include "support/fixtures.hpp"

using namespace dimerlab;

namespace {

LaurentPoly2 normalized_curve(const TorusGraph& g, const Weighting& w) {
    KasteleynData kd = kasteleyn_matrix(g, w, kasteleyn_orientation(g));
    return normalize_spectral(spectral_polynomial(kd));
}

std::vector<Vec2> zz_polygon(const TorusGraph& g) {
    std::vector<Vec2> cls;
    for (const ZigZag& z : extract_zigzags(g)) cls.push_back(z.cls);
    return newton_polygon(cls);
}

// face sign rule, re-verified after the solve
void check_face_rule(const TorusGraph& g, const std::vector<int>& kappa) {
    for (const Face& f : g.faces()) {
        int prod = 1;
        for (Dart d : f.boundary) prod *= kappa[d.edge];
        CHECK(prod == (f.boundary.size() % 4 == 0 ? -1 : 1));
    }
}

}  // namespace

TEST_CASE("hex1 kasteleyn data") {
    TorusGraph g = fixtures::hex1();
    std::vector<int> kappa = kasteleyn_orientation(g);
    CHECK(kappa == std::vector<int>{1, 1, 1});
    KasteleynData kd = kasteleyn_matrix(g, unit_weights(g), kappa);
    REQUIRE(kd.matrix.square());
    CHECK(render(kd.det) == "1 + y + x");
    CHECK(render(normalize_spectral(kd.det)) == "1 + y + x");

    Weighting w = unit_weights(g);
    w.values[1] = Rat(5);
    KasteleynData kd5 = kasteleyn_matrix(g, w, kappa);
    CHECK(render(kd5.det) == "1 + y + 5*x");
}

TEST_CASE("sq1 kasteleyn data matches the hand solve") {
    TorusGraph g = fixtures::sq1();
    std::vector<int> kappa = kasteleyn_orientation(g);
    CHECK(kappa == std::vector<int>{-1, 1, 1, 1});
    KasteleynData kd = kasteleyn_matrix(g, unit_weights(g), kappa);
    CHECK(render(kd.det) == "-1 + y + x + x*y");
    CHECK(render(normalize_spectral(kd.det)) == "1 - y - x - x*y");
}

TEST_CASE("kasteleyn face rule holds on every fixture") {
    for (const auto& fx : fixtures::all_fixtures()) {
        CAPTURE(fx.name);
        check_face_rule(fx.graph, kasteleyn_orientation(fx.graph));
    }
}

TEST_CASE("orientation is infeasible for unbalanced graphs") {
    // valid embedding with 2 black, 1 white: one face of length 8
    TorusGraph g = TorusGraph::build(
        2, 1, {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {1, 0, {0, 0}}, {1, 0, {0, 1}}},
        {{0, 1}, {2, 3}}, {{0, 2, 1, 3}});
    CHECK_THROWS_WITH_AS(kasteleyn_orientation(g), doctest::Contains("NoOrientation"), Error);
    CHECK(enumerate_matchings(g, unit_weights(g)).empty());
}

TEST_CASE("matching enumeration") {
    TorusGraph hex = fixtures::hex1();
    std::vector<Matching> m = enumerate_matchings(hex, unit_weights(hex));
    REQUIRE(m.size() == 3);
    std::vector<Vec2> cls;
    for (const Matching& mm : m) {
        cls.push_back(mm.cls);
        CHECK(mm.weight == Rat(1));
        CHECK(mm.edges.size() == 1);
    }
    std::sort(cls.begin(), cls.end());
    CHECK(cls == std::vector<Vec2>{{0, 0}, {0, 1}, {1, 0}});

    TorusGraph sq = fixtures::sq1();
    CHECK(enumerate_matchings(sq, unit_weights(sq)).size() == 4);

    TorusGraph sq2 = fixtures::sq2();
    std::vector<Matching> m2 = enumerate_matchings(sq2, unit_weights(sq2));
    CHECK(m2.size() == 4);
    for (const Matching& mm : m2) CHECK(mm.edges.size() == 4);
}

TEST_CASE("sign theorem on fixtures with unit and random weights") {
    Rng rng(101);
    for (const auto& fx : fixtures::all_fixtures()) {
        if (fx.name == "bad-bigon" || fx.name == "trivial-class") continue;
        CAPTURE(fx.name);
        SignReport unit = sign_theorem_check(fx.graph, unit_weights(fx.graph));
        CHECK(unit.ok);
        for (int t = 0; t < 5; ++t) {
            SignReport r = sign_theorem_check(fx.graph, random_weighting(fx.graph, rng));
            CHECK(r.ok);
        }
    }
}

TEST_CASE("sq1 sign table has a single minus at the even-even class") {
    SignReport r = sign_theorem_check(fixtures::sq1(), unit_weights(fixtures::sq1()));
    REQUIRE(r.ok);
    CHECK(r.sign[0][0] == -1);
    CHECK(r.sign[1][0] == 1);
    CHECK(r.sign[0][1] == 1);
    CHECK(r.sign[1][1] == 1);
}

TEST_CASE("normalization is invariant under monomial rescaling") {
    Rng rng(55);
    TorusGraph g = fixtures::sq1();
    LaurentPoly2 f = normalized_curve(g, unit_weights(g));
    for (int t = 0; t < 10; ++t) {
        Vec2 shift{static_cast<long long>(rng.below(7)) - 3,
                   static_cast<long long>(rng.below(7)) - 3};
        LaurentPoly2 scaled = f.shifted(shift).scaled(rng.rat_nonzero());
        CHECK(render(normalize_spectral(scaled)) == render(f));
    }
}

TEST_CASE("vertex gauges scale the determinant but not the normalized curve") {
    TorusGraph g = fixtures::hex1();
    Weighting w = unit_weights(g);
    Weighting w3 = apply_gauge(g, w, {Rat(1)}, {Rat(3)});
    KasteleynData kd = kasteleyn_matrix(g, w3, kasteleyn_orientation(g));
    CHECK(render(kd.det) == "3 + 3*y + 3*x");
    CHECK(render(normalize_spectral(kd.det)) == "1 + y + x");

    Rng rng(200);
    TorusGraph s = fixtures::sq2();
    std::string base = render(normalized_curve(s, unit_weights(s)));
    for (int t = 0; t < 10; ++t) {
        Weighting wg = apply_gauge(s, unit_weights(s), random_units(s.black_count(), rng),
                                   random_units(s.white_count(), rng));
        CHECK(render(normalized_curve(s, wg)) == base);
    }
}

TEST_CASE("non-gauge deformations move the normalized curve") {
    // gauges fix the curve; independent cluster-coordinate directions must
    // not, or the canonical rendering would forget weight data
    for (const char* name : {"sq2", "hex2", "square2x2"}) {
        CAPTURE(name);
        TorusGraph g = TorusGraph::parse(fixtures::read_file(fixtures::fixture_path(name)));
        ClusterSeed unit = face_coordinates(g, unit_weights(g));
        auto curve = [&](const ClusterSeed& s) {
            Weighting w = reconstruct_weights(g, s);
            return render(normalized_curve(g, w));
        };
        std::string base = curve(unit);
        if (unit.X.size() >= 2) {
            ClusterSeed p = unit;
            p.X[0] = Rat(2);
            p.X[1] = p.X[1] / Rat(2);
            CHECK(curve(p) != base);
        }
        ClusterSeed px = unit;
        px.qx = Rat(3);
        CHECK(curve(px) != base);
        ClusterSeed py = unit;
        py.qy = Rat(5, 2);
        CHECK(curve(py) != base);
    }
}

TEST_CASE("offset gauges leave the normalized curve unchanged") {
    Rng rng(77);
    for (const auto& fx : fixtures::all_fixtures()) {
        if (fx.name == "bad-bigon" || fx.name == "trivial-class") continue;
        CAPTURE(fx.name);
        std::string base = render(normalized_curve(fx.graph, unit_weights(fx.graph)));
        for (int t = 0; t < 3; ++t) {
            TorusGraph gg =
                fx.graph.offset_gauge(random_offset_gauge(fx.graph.black_count(), rng),
                                      random_offset_gauge(fx.graph.white_count(), rng));
            CHECK(render(normalized_curve(gg, unit_weights(gg))) == base);
        }
    }
}

TEST_CASE("newton polygon of the curve equals the zig-zag polygon up to translation") {
    for (const auto& fx : fixtures::all_fixtures()) {
        if (fx.name == "bad-bigon" || fx.name == "trivial-class") continue;
        CAPTURE(fx.name);
        LaurentPoly2 f = normalized_curve(fx.graph, unit_weights(fx.graph));
        CHECK(newton_polygon_of(f) == zz_polygon(fx.graph));
    }
}

TEST_CASE("parallel edges sum inside one matrix entry") {
    // bad-bigon doubles hex1's (0,0) edge: both copies land on the same
    // monomial of the single matrix entry
    TorusGraph g = fixtures::bad_bigon();
    Weighting w = unit_weights(g);
    w.values[3] = Rat(7);
    std::vector<int> kappa = kasteleyn_orientation(g);
    KasteleynData kd = kasteleyn_matrix(g, w, kappa);
    Rat expect = (kappa[0] < 0 ? Rat(-1) : Rat(1)) + (kappa[3] < 0 ? Rat(-7) : Rat(7));
    CHECK(kd.matrix.at(0, 0).coeff({0, 0}) == expect);
}

TEST_CASE("corank at least one exactly on the vanishing locus") {
    TorusGraph g = fixtures::sq1();
    KasteleynData kd = kasteleyn_matrix(g, unit_weights(g), kasteleyn_orientation(g));
    Rng rng(404);
    for (int t = 0; t < 30; ++t) {
        Rat x0 = rng.rat_nonzero(), y0 = rng.rat_nonzero();
        bool on_curve = kd.det.evaluate(x0, y0).is_zero();
        CHECK((evaluate_corank(kd, x0, y0) >= 1) == on_curve);
    }
}

TEST_CASE("corank evaluation") {
    TorusGraph g = fixtures::hex1();
    KasteleynData kd = kasteleyn_matrix(g, unit_weights(g), kasteleyn_orientation(g));
    CHECK(evaluate_corank(kd, Rat(-1, 2), Rat(-1, 2)) == 1);  // on 1 + x + y = 0
    CHECK(evaluate_corank(kd, Rat(1), Rat(1)) == 0);
    CHECK(evaluate_corank(kd, Rat(2), Rat(5)) == 0);
    CHECK_THROWS_AS(evaluate_corank(kd, Rat(0), Rat(1)), Error);
}
