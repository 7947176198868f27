#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tangency/generators.hpp"
#include "tangency/io.hpp"

using namespace tangency;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tangency");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("tangency_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
    std::string read(const std::string& name) const {
        std::ifstream in(path(name));
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    fs::path dir_;
};

bool same_family(const CurveFamily& x, const CurveFamily& y) {
    if (x.size() != y.size() || x.generator != y.generator || x.seed != y.seed || x.ground != y.ground) return false;
    if (x.window.has_value() != y.window.has_value()) return false;
    if (x.window && (x.window->x_lo != y.window->x_lo || x.window->x_hi != y.window->x_hi)) return false;
    if (x.x_monotone != y.x_monotone || x.bi_infinite != y.bi_infinite) return false;
    if (x.claims_one_intersecting != y.claims_one_intersecting || x.claims_precisely_one != y.claims_precisely_one) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.chains[i].id != y.chains[i].id || x.chains[i].vertices != y.chains[i].vertices) return false;
    }
    return true;
}

}  // namespace

TEST_F(CliTest, VeeFanCountPrintsNMinusOne) {
    ASSERT_EQ(run_cli({"generate", "vee-fan", "--n", "5", "--out", path("f.txt")}).code, 0);
    const auto r = run_cli({"count", "--in", path("f.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "4");
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
    const auto r = run_cli({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"generate", "vee-fan"}).code, 2);
    EXPECT_EQ(run_cli({"generate", "vee-fan", "--n", "1"}).code, 2);
}

TEST_F(CliTest, SaveLoadRoundTripAndByteStable) {
    WiringOptions w;
    w.n = 6;
    w.seed = 11;
    const auto f = gen_random_wiring(w);
    save_family(f, path("a.txt"));
    save_family(f, path("b.txt"));
    EXPECT_EQ(read("a.txt"), read("b.txt"));
    EXPECT_TRUE(same_family(load_family(path("a.txt")), f));
    const auto g = gen_grounded_family(1);
    save_family(g, path("g.txt"));
    EXPECT_TRUE(same_family(load_family(path("g.txt")), g));
}

TEST_F(CliTest, VeeFanFileHasThreeRecords) {
    save_family(gen_vee_fan(3), path("f.txt"));
    const std::string text = read("f.txt");
    std::size_t records = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) records += line.rfind("curve ", 0) == 0 ? 1 : 0;
    EXPECT_EQ(records, 3u);
}

TEST_F(CliTest, EmptyFamilyIsValid) {
    save_family(CurveFamily{}, path("e.txt"));
    EXPECT_EQ(load_family(path("e.txt")).size(), 0u);
}

TEST_F(CliTest, MalformedRationalReportsPosition) {
    write("bad.txt", "tangency-family 1\nflags\ncurves 1\ncurve 0 0,0 1/0,1\n");
    try {
        load_family(path("bad.txt"));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_EQ(e.column(), 13u);
    }
    EXPECT_EQ(run_cli({"count", "--in", path("bad.txt")}).code, 2);
}

TEST_F(CliTest, FlagMismatchNamesTheFlag) {
    write("f.txt",
          "tangency-family 1\nflags x_monotone precisely_one\ncurves 2\n"
          "curve 0 0,0 1,0\ncurve 1 0,1 1,1\n");
    try {
        load_family(path("f.txt"));
        FAIL() << "expected a flag mismatch";
    } catch (const FlagMismatch& e) {
        EXPECT_EQ(e.flag(), "precisely_one");
    }
    const auto r = run_cli({"validate", "--in", path("f.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("precisely_one"), std::string::npos);
}

TEST_F(CliTest, SparseCheckHoldsOnC4FreeGraph) {
    // C6 is K22-free
    write("g.txt", "A 3 B 3\n0 0\n0 1\n1 1\n1 2\n2 2\n2 0\n");
    const auto r = run_cli({"graph", "sparse-check", "--in", path("g.txt"), "--f-q", "1", "--f-e", "1", "--scope", "all"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"verdict\": \"holds\""), std::string::npos);
    const auto k = run_cli({"graph", "k22", "--in", path("g.txt")});
    EXPECT_EQ(k.out, "0\n");
}

TEST_F(CliTest, Bad4ExitsOneOnDenseGraph) {
    std::string text = "A 8 B 8\n";
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) text += std::to_string(a) + " " + std::to_string(b) + "\n";
    write("k88.txt", text);
    EXPECT_EQ(run_cli({"graph", "bad4", "--in", path("k88.txt"), "--q", "1/100"}).code, 1);
    EXPECT_EQ(run_cli({"graph", "bad4", "--in", path("k88.txt"), "--q", "5000"}).code, 0);
    EXPECT_EQ(run_cli({"graph", "bad4", "--in", path("k88.txt"), "--c", "1"}).code, 2);
}

TEST_F(CliTest, GraphTransforms) {
    write("star.txt", "A 1 B 9\n0 0\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n");
    ASSERT_EQ(run_cli({"graph", "regularize", "--in", path("star.txt"), "--d", "3", "--out", path("r.txt")}).code, 0);
    const auto g = load_graph(path("r.txt"));
    EXPECT_EQ(g.vertex_count(), 12);
    ASSERT_EQ(run_cli({"graph", "prune", "--in", path("star.txt"), "--t", "2", "--out", path("p.txt")}).code, 0);
    EXPECT_EQ(load_graph(path("p.txt")).vertex_count(), 0);
    write("e.txt", "A 1 B 1\n0 0\n");
    ASSERT_EQ(run_cli({"graph", "hplus", "--in", path("e.txt"), "--out", path("h.txt")}).code, 0);
    EXPECT_EQ(load_graph(path("h.txt")).edge_count(), 4u);
}

TEST_F(CliTest, ReverseCheck) {
    write("ok.txt", "1 2 3\n3 2 1\n");
    write("bad.txt", "1 2 3\n1 2 3\n");
    EXPECT_EQ(run_cli({"graph", "reverse-check", "--in", path("ok.txt")}).out, "ok\n");
    const auto r = run_cli({"graph", "reverse-check", "--in", path("bad.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "violation lists 0 1 triple 1 2 3\n");
}

TEST_F(CliTest, Deterministic) {
    const std::vector<std::string> g = {"generate", "random-graph", "--n", "20", "--seed", "4"};
    EXPECT_EQ(run_cli(g).out, run_cli(g).out);
    const std::vector<std::string> s = {"scaling-report", "--family", "wiring", "--from", "3", "--to", "6", "--seed", "2"};
    const auto a = run_cli(s);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run_cli(s).out);
    EXPECT_NE(a.out.find("param,n,t,t_over_n43,t_over_n32"), std::string::npos);
}

TEST_F(CliTest, ReportsEchoInvocation) {
    ASSERT_EQ(run_cli({"generate", "doubling", "--k", "3", "--out", path("d.txt")}).code, 0);
    for (const auto& cmd : {"validate", "envelope", "visibility", "partition"}) {
        const auto r = run_cli({cmd, "--in", path("d.txt")});
        EXPECT_EQ(r.code, 0) << cmd << r.err;
        EXPECT_NE(r.out.find("tangency " + std::string(cmd) + " --in"), std::string::npos) << cmd;
    }
}
