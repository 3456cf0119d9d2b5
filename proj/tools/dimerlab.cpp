// dimerlab: exact dimer-model pipeline on bipartite torus graphs.
//
// Subcommands take a .tg file and print deterministic text reports; SVG
// output goes to --out. Exit codes: 0 success, 1 validation/check failure,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dimerlab/cluster.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/random.hpp"
#include "dimerlab/svg.hpp"
#include "dimerlab/zigzag.hpp"

using namespace dimerlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    std::uint64_t seed = 0;
    std::string out;
    std::string t = "1";
    int face = -1;
    int width = 480;
    int trials = 20;
    std::string svg;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("Usage", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw Error("Usage", "cannot write '" + opt.out + "'");
    out << text;
}

TorusGraph load(const Options& opt) { return TorusGraph::parse(slurp(opt.input)); }

Weighting weights_for(const TorusGraph& g, const Options& opt) {
    if (opt.seed == 0) return unit_weights(g);
    Rng rng(opt.seed);
    return random_weighting(g, rng);
}

int cmd_validate(const Options& opt) {
    TorusGraph g = load(opt);
    std::ostringstream out;
    out << "ok: black=" << g.black_count() << " white=" << g.white_count()
        << " edges=" << g.edge_count() << " faces=" << g.faces().size() << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_zigzags(const Options& opt) {
    TorusGraph g = load(opt);
    std::ostringstream out;
    std::vector<ZigZag> zz = extract_zigzags(g);
    for (std::size_t k = 0; k < zz.size(); ++k)
        out << "zz" << k << ": class=" << zz[k].cls.str() << " len=" << zz[k].passes.size()
            << "\n";
    ConsistencyResult res = check_consistency(g);
    out << "consistent: " << (res.consistent ? "yes" : "no (" + res.witness->str() + ")")
        << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_consistency(const Options& opt) {
    TorusGraph g = load(opt);
    ConsistencyResult res = check_consistency(g);
    std::ostringstream out;
    out << "consistent: " << (res.consistent ? "yes" : "no (" + res.witness->str() + ")")
        << "\n";
    emit(opt, out.str());
    return res.consistent ? kExitOk : kExitFail;
}

std::vector<Vec2> zigzag_polygon(const TorusGraph& g) {
    std::vector<Vec2> classes;
    for (const ZigZag& z : extract_zigzags(g)) classes.push_back(z.cls);
    return newton_polygon(classes);
}

int cmd_newton(const Options& opt) {
    TorusGraph g = load(opt);
    std::vector<Vec2> poly = zigzag_polygon(g);
    std::ostringstream out;
    for (Vec2 v : poly) out << "vertex " << v.str() << "\n";
    emit(opt, out.str());
    if (!opt.svg.empty()) {
        std::ofstream sf(opt.svg, std::ios::binary);
        if (!sf) throw Error("Usage", "cannot write '" + opt.svg + "'");
        sf << svg_polygon(poly, opt.width);
    }
    return kExitOk;
}

int cmd_fan(const Options& opt) {
    TorusGraph g = load(opt);
    StackyFan fan = stacky_fan(zigzag_polygon(g));
    std::ostringstream out;
    for (const StackyRay& r : fan.rays)
        out << "ray " << r.generator.str() << " x" << r.multiplicity << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_kasteleyn(const Options& opt) {
    TorusGraph g = load(opt);
    std::vector<int> kappa = kasteleyn_orientation(g);
    std::ostringstream out;
    for (std::size_t e = 0; e < kappa.size(); ++e)
        out << "kappa e" << e << " = " << (kappa[e] > 0 ? "+1" : "-1") << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_detcurve(const Options& opt) {
    TorusGraph g = load(opt);
    Weighting w = weights_for(g, opt);
    KasteleynData kd = kasteleyn_matrix(g, w, kasteleyn_orientation(g));
    emit(opt, render(normalize_spectral(spectral_polynomial(kd))) + "\n");
    return kExitOk;
}

int cmd_matchings(const Options& opt) {
    TorusGraph g = load(opt);
    Weighting w = weights_for(g, opt);
    std::map<Vec2, std::pair<long, Rat>> by_class;
    for (const Matching& m : enumerate_matchings(g, w)) {
        auto& slot = by_class[m.cls];
        slot.first += 1;
        slot.second += m.weight;
    }
    std::ostringstream out;
    for (const auto& [cls, cw] : by_class)
        out << "class=" << cls.str() << " count=" << cw.first << " weight-sum=" << cw.second.str()
            << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_check(const Options& opt) {
    TorusGraph g = load(opt);
    std::ostringstream out;
    bool ok = true;

    // sign theorem, unit weights plus seeded random trials
    SignReport unit = sign_theorem_check(g, unit_weights(g));
    ok = ok && unit.ok;
    for (const std::string& l : unit.lines) out << l << "\n";
    if (!unit.ok) out << "sign-check FAILED (unit): " << unit.failure << "\n";
    Rng rng(opt.seed == 0 ? 1 : opt.seed);
    for (int t = 0; t < opt.trials && ok; ++t) {
        SignReport r = sign_theorem_check(g, random_weighting(g, rng));
        if (!r.ok) {
            ok = false;
            out << "sign-check FAILED (trial " << t << "): " << r.failure << "\n";
        }
    }
    const char* names[2][2] = {{"(0,0)", "(0,1)"}, {"(1,0)", "(1,1)"}};
    out << "sign table:";
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (unit.sign[i][j] != 0)
                out << " " << names[i][j] << (unit.sign[i][j] > 0 ? "=+1" : "=-1");
    out << "\n";

    // polygon agreement
    Weighting uw = unit_weights(g);
    KasteleynData kd = kasteleyn_matrix(g, uw, kasteleyn_orientation(g));
    LaurentPoly2 f = normalize_spectral(spectral_polynomial(kd));
    bool poly_ok = newton_polygon_of(f) == zigzag_polygon(g);
    ok = ok && poly_ok;
    out << "polygon agreement: " << (poly_ok ? "ok" : "FAILED") << "\n";

    // gauge and offset-gauge invariance of the normalized curve
    std::string base = render(f);
    bool gauge_ok = true;
    for (int t = 0; t < 50 && gauge_ok; ++t) {
        Weighting wg = apply_gauge(g, uw, random_units(g.black_count(), rng),
                                   random_units(g.white_count(), rng));
        KasteleynData kg = kasteleyn_matrix(g, wg, kasteleyn_orientation(g));
        gauge_ok = render(normalize_spectral(spectral_polynomial(kg))) == base;
    }
    for (int t = 0; t < 20 && gauge_ok; ++t) {
        TorusGraph gg = g.offset_gauge(random_offset_gauge(g.black_count(), rng),
                                       random_offset_gauge(g.white_count(), rng));
        KasteleynData kg = kasteleyn_matrix(gg, uw, kasteleyn_orientation(gg));
        gauge_ok = render(normalize_spectral(spectral_polynomial(kg))) == base;
    }
    ok = ok && gauge_ok;
    out << "gauge invariance: " << (gauge_ok ? "ok" : "FAILED") << "\n";

    out << (ok ? "OK" : "FAILED") << "\n";
    emit(opt, out.str());
    return ok ? kExitOk : kExitFail;
}

int cmd_squaremove(const Options& opt) {
    TorusGraph g = load(opt);
    if (opt.face < 0) throw Error("Usage", "--face <id> is required");
    // Gauge the face's edge offsets to zero first, as square_move requires.
    TorusGraph gz = zero_face_offsets(g, opt.face);
    Weighting w = weights_for(gz, opt);
    ClusterSeed seed = face_coordinates(gz, w);
    ClusterSeed moved = x_transform(seed, opt.face);
    std::ostringstream out;
    out << moved.graph.serialize();
    std::ostringstream rep;
    for (std::size_t f = 0; f < moved.X.size(); ++f)
        rep << "X[" << f << "]=" << moved.X[f].str() << "\n";
    rep << "qx=" << moved.qx.str() << "\n";
    rep << "qy=" << moved.qy.str() << "\n";
    if (opt.out.empty()) {
        std::cout << out.str() << "\n" << rep.str();
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw Error("Usage", "cannot write '" + opt.out + "'");
        f << out.str();
        std::cout << rep.str();
    }
    return kExitOk;
}

int cmd_hamiltonians(const Options& opt) {
    TorusGraph g = load(opt);
    Weighting w = weights_for(g, opt);
    Hamiltonians h = hamiltonians(g, w);
    std::ostringstream out;
    for (const auto& [p, c] : h.interior) out << "interior " << p.str() << ": " << c.str() << "\n";
    for (const auto& [p, c] : h.boundary) out << "casimir " << p.str() << ": " << c.str() << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_commute(const Options& opt) {
    TorusGraph g = load(opt);
    Rng rng(opt.seed == 0 ? 1 : opt.seed);
    std::ostringstream out;
    bool ok = true;
    int points = std::max(1, opt.trials / 4);
    int pairs = 0, hams = 0;
    for (int t = 0; t < points && ok; ++t) {
        ClusterSeed seed = face_coordinates(g, random_weighting(g, rng));
        CommutativityReport rep = commutativity_check(g, seed);
        pairs += rep.pairs_checked;
        hams = rep.hamiltonian_count;
        if (!rep.all_zero) {
            ok = false;
            out << "FAILED at point " << t << ": " << rep.failure << "\n";
        }
    }
    out << "hamiltonians: " << hams << "\n";
    out << "brackets: " << (ok ? "all zero" : "nonzero found") << " (pairs=" << pairs << ")\n";
    emit(opt, out.str());
    return ok ? kExitOk : kExitFail;
}

int cmd_fronts(const Options& opt) {
    TorusGraph g = load(opt);
    StackyFan fan = stacky_fan(zigzag_polygon(g));
    emit(opt, svg_fronts(fan, Rat::parse(opt.t), opt.width));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimer-model pipeline on bipartite torus graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input) sub->add_option("input", opt.input, "input .tg file")->required();
        sub->add_option("--seed", opt.seed, "seed for randomized weights (0 = unit weights)");
        sub->add_option("--out", opt.out, "write the report/file here instead of stdout");
        return sub;
    };

    add_common(app.add_subcommand("validate", "parse and validate a graph"));
    add_common(app.add_subcommand("zigzags", "zig-zag strands and consistency"));
    add_common(app.add_subcommand("consistency", "consistency verdict"));
    auto* newton = add_common(app.add_subcommand("newton", "zig-zag Newton polygon"));
    newton->add_option("--svg", opt.svg, "also write an SVG rendering");
    newton->add_option("--width", opt.width, "SVG width in px");
    add_common(app.add_subcommand("fan", "stacky fan of the Newton polygon"));
    add_common(app.add_subcommand("kasteleyn", "Kasteleyn orientation"));
    add_common(app.add_subcommand("detcurve", "normalized spectral polynomial"));
    add_common(app.add_subcommand("matchings", "perfect matchings by homology class"));
    auto* check = add_common(app.add_subcommand("check", "sign theorem + polygon + gauge checks"));
    check->add_option("--trials", opt.trials, "random weighting trials");
    auto* sq = add_common(app.add_subcommand("squaremove", "square move at a face"));
    sq->add_option("--face", opt.face, "face id")->required();
    add_common(app.add_subcommand("hamiltonians", "normalized determinant coefficients"));
    auto* commute = add_common(app.add_subcommand("commute", "Poisson commutativity check"));
    commute->add_option("--trials", opt.trials, "number of sample points x4");
    auto* fronts = add_common(app.add_subcommand("fronts", "front arrangement as SVG"));
    fronts->add_option("--t", opt.t, "family parameter in [0,1], a rational like 1/2");
    fronts->add_option("--width", opt.width, "SVG width in px");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("validate")) return cmd_validate(opt);
        if (app.got_subcommand("zigzags")) return cmd_zigzags(opt);
        if (app.got_subcommand("consistency")) return cmd_consistency(opt);
        if (app.got_subcommand("newton")) return cmd_newton(opt);
        if (app.got_subcommand("fan")) return cmd_fan(opt);
        if (app.got_subcommand("kasteleyn")) return cmd_kasteleyn(opt);
        if (app.got_subcommand("detcurve")) return cmd_detcurve(opt);
        if (app.got_subcommand("matchings")) return cmd_matchings(opt);
        if (app.got_subcommand("check")) return cmd_check(opt);
        if (app.got_subcommand("squaremove")) return cmd_squaremove(opt);
        if (app.got_subcommand("hamiltonians")) return cmd_hamiltonians(opt);
        if (app.got_subcommand("commute")) return cmd_commute(opt);
        if (app.got_subcommand("fronts")) return cmd_fronts(opt);
    } catch (const Error& e) {
        if (e.code() == "Usage") {
            std::cerr << "usage error: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
