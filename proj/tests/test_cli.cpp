#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "rectile/geometry.hpp"
#include "fixtures.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;
std::string g_dir;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string write_tmp(const std::string& name, const std::string& text) {
    std::string path = g_dir + "/" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

} // namespace

TEST_CASE("check: trivial and nontrivial boundary words") {
    std::string sq = write_tmp("square.poly", "0 0\n1 0\n1 1\n0 1\n");
    RunResult r = run("check " + sq);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha=e") != std::string::npos);

    std::string half = write_tmp("half.poly", "0 0\n1/2 0\n1/2 1/2\n0 1/2\n");
    RunResult r2 = run("check " + half);
    CHECK(r2.exit_code == 1);
}

TEST_CASE("tile: exit codes and svg output") {
    std::string half = write_tmp("half2.poly", "0 0\n1/2 0\n1/2 1/2\n0 1/2\n");
    RunResult r = run("tile " + half);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("untileable: null-boundary fails") != std::string::npos);

    std::string fig = write_tmp("fig3.poly",
                                rectile::polygon_to_text(rectile::fixtures::example_polygon()));
    std::string svg_path = g_dir + "/fig3.svg";
    RunResult r2 = run("tile " + fig + " --svg " + svg_path + " --json");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("tiled: 7 tiles") != std::string::npos);
    std::ifstream svg(svg_path);
    REQUIRE(svg.good());
    std::string content((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(content.find("<svg") != std::string::npos);
    CHECK(content.find("<rect") != std::string::npos);
    CHECK(content.find("exact") != std::string::npos);
}

TEST_CASE("heights TSV and json") {
    std::string sq = write_tmp("square3.poly", "0 0\n1 0\n1 1\n0 1\n");
    RunResult r = run("--beta generic heights " + sq);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("generic") != std::string::npos);
    CHECK(r.out.find("max\t1") != std::string::npos);
    CHECK(r.out.find("min\t0") != std::string::npos);
    RunResult rj = run("--beta generic heights " + sq + " --json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.out.find("\"max\": 1") != std::string::npos);
}

TEST_CASE("bad input reports a machine-parsable error") {
    std::string bad = write_tmp("bad.poly", "0 0\n1.5 0\n1 1\n0 1\n");
    RunResult r = run("check " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("ERROR:IrrationalCoordinate:") != std::string::npos);

    std::string diag = write_tmp("diag.poly", "0 0\n2 2\n2 0\n0 2\n");
    RunResult r2 = run("check " + diag);
    CHECK(r2.exit_code == 2);
    CHECK(r2.out.find("ERROR:NotRectilinear:") != std::string::npos);
}

TEST_CASE("pipeline: tile -> normalize -> connect through files") {
    std::string fig = write_tmp("fig3b.poly",
                                rectile::polygon_to_text(rectile::fixtures::example_polygon()));
    RunResult tiled = run("tile " + fig + " --json");
    CHECK(tiled.exit_code == 0);
    std::string json = tiled.out.substr(tiled.out.find('{'));
    std::string tj = write_tmp("fig3.tiling.json", json);

    RunResult norm = run("normalize " + tj);
    CHECK(norm.exit_code == 0);
    CHECK(norm.out.find('[') != std::string::npos);

    RunResult conn = run("connect " + tj + " " + tj);
    CHECK(conn.exit_code == 0);

    RunResult render = run("render " + tj + " --heights --labels --grid");
    CHECK(render.exit_code == 0);
    CHECK(render.out.find("<svg") != std::string::npos);
}

TEST_CASE("bars and oracle subcommands") {
    std::string box = write_tmp("box23.poly", "0 0\n2 0\n2 3\n0 3\n");
    RunResult r = run("bars " + box + " --n 2 --m 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("bars") != std::string::npos);

    std::string odd = write_tmp("sq3.poly", "0 0\n3 0\n3 3\n0 3\n");
    RunResult r2 = run("bars " + odd + " --n 2 --m 2");
    CHECK(r2.exit_code == 1);

    RunResult r3 = run("oracle " + box);
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("tiled") != std::string::npos);

    std::string half = write_tmp("half3.poly", "0 0\n1/2 0\n1/2 1/2\n0 1/2\n");
    RunResult r4 = run("oracle " + half);
    CHECK(r4.out.find("untileable") != std::string::npos);

    RunResult r5 = run("oracle " + box + " --enumerate 5");
    CHECK(r5.exit_code == 0);
    CHECK(r5.out.find("tilings: 5") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <rectile-binary>\n");
        return 2;
    }
    g_binary = argv[1];
    g_dir = "/tmp/rectile_cli_test";
    std::string mk = "mkdir -p " + g_dir;
    if (std::system(mk.c_str()) != 0) return 2;
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
