// End-to-end checks of the dimerlab binary: exit codes, report bytes, and
// determinism across runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DIMERLAB_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".tg";
}

}  // namespace

TEST_CASE("validate and detcurve") {
    RunResult v = run("validate " + fixture("hex1"));
    CHECK(v.exit_code == 0);
    CHECK(v.output == "ok: black=1 white=1 edges=3 faces=1\n");

    RunResult d = run("detcurve " + fixture("hex1"));
    CHECK(d.exit_code == 0);
    CHECK(d.output == "1 + y + x\n");

    RunResult s = run("detcurve " + fixture("sq1"));
    CHECK(s.output == "1 - y - x - x*y\n");
}

TEST_CASE("zigzags and consistency reports") {
    RunResult z = run("zigzags " + fixture("hex1"));
    CHECK(z.exit_code == 0);
    CHECK(z.output.find("zz0: class=") != std::string::npos);
    CHECK(z.output.find("consistent: yes") != std::string::npos);

    RunResult bad = run("consistency " + fixture("bad-bigon"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("consistent: no (ParallelBigon") != std::string::npos);

    RunResult triv = run("consistency " + fixture("trivial-class"));
    CHECK(triv.exit_code == 1);
    CHECK(triv.output.find("TrivialClass") != std::string::npos);
}

TEST_CASE("newton, fan, kasteleyn, matchings") {
    RunResult n = run("newton " + fixture("hex1"));
    CHECK(n.exit_code == 0);
    CHECK(n.output == "vertex (0,0)\nvertex (1,0)\nvertex (0,1)\n");

    RunResult f = run("fan " + fixture("hex2"));
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("x2") != std::string::npos);  // one multiplicity-2 ray

    RunResult k = run("kasteleyn " + fixture("sq1"));
    CHECK(k.exit_code == 0);
    CHECK(k.output.find("kappa e0 = -1") != std::string::npos);

    RunResult m = run("matchings " + fixture("sq1"));
    CHECK(m.exit_code == 0);
    CHECK(m.output == "class=(0,0) count=1 weight-sum=1\nclass=(0,1) count=1 weight-sum=1\n"
                      "class=(1,0) count=1 weight-sum=1\nclass=(1,1) count=1 weight-sum=1\n");
}

TEST_CASE("check subcommand") {
    RunResult c = run("check " + fixture("sq1") + " --seed 7 --trials 3");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("OK") != std::string::npos);
    CHECK(c.output.find("sign table:") != std::string::npos);
    for (const char* name : {"hex1", "hex2", "sq2", "hex4", "square2x2"}) {
        RunResult r = run("check " + fixture(name) + " --seed 11 --trials 2");
        CAPTURE(name);
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("hamiltonians and commute subcommands") {
    RunResult h = run("hamiltonians " + fixture("square2x2"));
    CHECK(h.exit_code == 0);
    CHECK(h.output.find("interior (1,1): -12\n") != std::string::npos);
    CHECK(h.output.find("casimir (0,0): 1\n") != std::string::npos);

    RunResult c = run("commute " + fixture("square2x2") + " --trials 4");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("brackets: all zero") != std::string::npos);
}

TEST_CASE("fronts svg output is deterministic") {
    RunResult a = run("fronts " + fixture("hex2") + " --t 1/2");
    RunResult b = run("fronts " + fixture("hex2") + " --t 1/2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("<svg") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("detcurve /nonexistent/file.tg").exit_code == 2);
    CHECK(run("squaremove " + fixture("sq2")).exit_code == 2);  // missing --face
}

TEST_CASE("invalid input exits 1") {
    std::string tmp = std::string(FIXTURE_DIR) + "/../fixtures/hex1.tg";
    (void)tmp;
    // a sphere embedding: rejected with exit 1
    std::string bad = "/tmp/dimerlab_bad_graph.tg";
    FILE* f = fopen(bad.c_str(), "w");
    REQUIRE(f);
    fputs("torus-graph v1\nblack 1\nwhite 1\nedge 0 0 0 0\nedge 0 0 1 0\nedge 0 0 0 1\n"
          "rot b0: 0 1 2\nrot w0: 0 2 1\n",
          f);
    fclose(f);
    RunResult r = run("validate " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("EulerCharacteristic") != std::string::npos);
}

TEST_CASE("squaremove emits the moved graph and seed") {
    RunResult r = run("squaremove " + fixture("sq2") + " --face 0 --out /tmp/dimerlab_moved.tg");
    // face 0 may or may not be the quad; accept either a clean run or the
    // documented precondition failure, but the quad face must work
    bool worked = false;
    for (int face = 0; face < 2 && !worked; ++face) {
        RunResult rr = run("squaremove " + fixture("sq2") + " --face " + std::to_string(face) +
                           " --out /tmp/dimerlab_moved.tg");
        if (rr.exit_code == 0) {
            worked = true;
            CHECK(rr.output.find("X[0]=") != std::string::npos);
            CHECK(rr.output.find("qx=") != std::string::npos);
            RunResult v = run("validate /tmp/dimerlab_moved.tg");
            CHECK(v.exit_code == 0);
        }
    }
    CHECK(worked);
    (void)r;
}
