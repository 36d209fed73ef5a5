// End-to-end coverage of every CLI subcommand, driving the real binary on
// the fixture files under data/.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef FORKLESS_CLI_PATH
#error "FORKLESS_CLI_PATH must be defined by the build"
#endif
#ifndef FORKLESS_DATA_DIR
#error "FORKLESS_DATA_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FORKLESS_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) {
    return std::string(FORKLESS_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify") {
    auto r = run("classify " + data("prefork1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"prefork_triples\": [") != std::string::npos);
    CHECK(r.out.find("\"class\": \"pre-fork\"") != std::string::npos);
}

TEST_CASE("mutate applies and reduces the sequence") {
    auto r = run("mutate " + data("arrow.json") + " --seq 0,0 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 1 1") != std::string::npos);  // unchanged after reduction

    auto named = run("mutate " + data("cycle345.json") + " --seq j --format text");
    CHECK(named.exit_code == 0);
    CHECK(named.out.find("i k 7") != std::string::npos);
}

TEST_CASE("forkless") {
    auto r = run("forkless " + data("forkless14.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Finite: 14 non-forks") != std::string::npos);

    auto empty = run("forkless " + data("cycle345.json"));
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("Empty") != std::string::npos);

    auto budget = run("forkless " + data("path222.json") + " --max-nodes 500");
    CHECK(budget.exit_code == 3);
    CHECK(budget.out.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("preforkless") {
    auto r = run("preforkless " + data("k4key0.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Finite: 8 non-pre-forks") != std::string::npos);

    auto empty = run("preforkless " + data("prefork2.json"));
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("Empty") != std::string::npos);
}

TEST_CASE("finiteness") {
    auto fin = run("finiteness " + data("arrow.json"));
    CHECK(fin.exit_code == 0);
    CHECK(fin.out.find("Finite: labelled class of size 2") != std::string::npos);

    auto inf = run("finiteness " + data("cycle345.json"));
    CHECK(inf.exit_code == 0);
    CHECK(inf.out.find("Infinite") != std::string::npos);

    auto unknown = run("finiteness " + data("cycle2222.json") + " --max-nodes 4");
    CHECK(unknown.exit_code == 3);
}

TEST_CASE("explore with exports") {
    std::string dot = std::string(FORKLESS_DATA_DIR) + "/../tmp_explore.dot";
    std::string js = std::string(FORKLESS_DATA_DIR) + "/../tmp_explore.json";
    auto r = run("explore " + data("two_nonfork.json") + " --expand non-fork --dot " + dot +
                 " --json " + js);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("completed") != std::string::npos);
    std::string dot_text = slurp(dot);
    CHECK(dot_text.find("graph mutation_graph {") == 0);
    CHECK(dot_text.find("dashed") != std::string::npos);
    CHECK(slurp(js).find("\"edges\"") != std::string::npos);
    std::remove(dot.c_str());
    std::remove(js.c_str());

    auto budget = run("explore " + data("path222.json") + " --max-nodes 50");
    CHECK(budget.exit_code == 3);
}

TEST_CASE("export-dot renders the quiver itself") {
    auto r = run("export-dot " + data("forkless14.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph quiver {") == 0);
    CHECK(r.out.find("label=\"1366\"") != std::string::npos);
}

TEST_CASE("verify subcommand with filter") {
    auto r = run("verify --filter finiteness_single_arrow");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS finiteness_single_arrow") != std::string::npos);
}

TEST_CASE("json output is byte-stable across runs") {
    auto a = run("classify " + data("forkless14.json"));
    auto b = run("classify " + data("forkless14.json"));
    CHECK(a.out == b.out);
}

TEST_CASE("workers flag preserves results") {
    auto a = run("forkless " + data("forkless14.json") + " --workers 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("Finite: 14 non-forks") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("forkless").exit_code == 2);  // missing input
    CHECK(run("classify /nonexistent/file.json").exit_code == 2);

    std::string bad = std::string(FORKLESS_DATA_DIR) + "/../tmp_bad.txt";
    {
        std::ofstream out(bad);
        out << "2\n0 0 1\n";  // loop
    }
    auto sem = run("classify " + bad);
    CHECK(sem.exit_code == 2);
    CHECK(sem.out.find("loop") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("env budget override") {
    std::string cmd = std::string("FORKLESS_MAX_NODES=500 ") + FORKLESS_CLI_PATH +
                      " forkless " + data("path222.json") + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
    CHECK(out.find("BudgetExceeded") != std::string::npos);
}
