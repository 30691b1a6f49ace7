#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + TREEPARK_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("poly tree matches the reference row") {
    const RunResult r = run("poly tree --n 2 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q + t + 1\n");
}

TEST_CASE("poly pf and recurrences agree at n=4") {
    const RunResult pf = run("poly pf --n 4 --format text");
    CHECK(pf.exit_code == 0);
    CHECK(pf.out.find("12qt^2") != std::string::npos);
    CHECK(pf.out.find("21qt ") != std::string::npos);

    const RunResult tree = run("poly tree --n 4 --format json");
    const RunResult rec = run("poly recurrence stanley-yin --n 4 --format json");
    CHECK(tree.exit_code == 0);
    CHECK(tree.out == rec.out);

    const RunResult krew = run("poly recurrence kreweras --n 2 --format text");
    CHECK(krew.out == "q + 2\n");
}

TEST_CASE("check subcommands exit 0 when claims hold") {
    CHECK(run("check counts --n 3 --format text").exit_code == 0);
    const RunResult r = run("check theorem1 --n 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"holds\"") != std::string::npos);
    CHECK(run("check conjecture-minus-one --n 4").exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("poly tree").exit_code == 2);          // missing --n
    CHECK(run("poly tree --n 3 --format xml").exit_code == 2);
    CHECK(run("specialize --n 3 < /dev/null").exit_code == 2);  // no --q/--t
}

TEST_CASE("budget refusal exits 3 and the override lifts it") {
    CHECK(run("poly tree --n 5", "TREEPARK_BUDGET=10").exit_code == 3);
    const RunResult lifted =
        run("poly tree --n 3 --budget-override", "TREEPARK_BUDGET=10");
    CHECK(lifted.exit_code == 0);
}

TEST_CASE("thread count does not change serialized output") {
    const RunResult one = run("poly pf --n 6 --threads 1 --format json");
    const RunResult four = run("poly pf --n 6 --threads 4 --shards 8 --format json");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
    // And repeated runs are byte-identical.
    CHECK(run("poly pf --n 6 --threads 1 --format json").out == one.out);
}

TEST_CASE("specialize consumes polynomial JSON") {
    const RunResult r = run("poly tree --n 3 --format json | " +
                            std::string(TREEPARK_CLI_PATH) +
                            " specialize --q -1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t^2 + t\n");
}

TEST_CASE("table minus-one emits CSV rows") {
    const RunResult r = run("table minus-one --max-n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,tree,pf\n"
                   "1,1,1\n"
                   "2,t,t\n"
                   "3,t^2 + t,t^2 + t\n"
                   "4,t^3 + 4t^2,t^3 + 3t^2 + t\n");
}

TEST_CASE("triangles") {
    const RunResult sim = run("triangle simsun --max-n 4 --format text");
    CHECK(sim.exit_code == 0);
    CHECK(sim.out == "1: 1\n2: 1\n3: 1 1\n4: 1 4\n");

    const RunResult zig = run("triangle zigzag --max-n 7 --format csv");
    CHECK(zig.exit_code == 0);
    CHECK(zig.out.find("7,272") != std::string::npos);
}
