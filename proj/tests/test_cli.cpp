// End-to-end checks of the command-line tool, driven through a shell so that
// '-' stdin plumbing and pipelines are exercised the way users run them.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

const std::string kCli = TG_CLI_PATH;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs `command` (which may reference the binary as $TG) under sh.
CliResult run_shell(const std::string& command) {
    std::string full = "TG=" + kCli + "; " + command;
    CliResult result;
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_file(const std::string& contents) {
    static int counter = 0;
    std::string path = "/tmp/tg_cli_test_" + std::to_string(getpid()) + "_" +
                       std::to_string(counter++);
    std::ofstream out(path);
    out << contents;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generator output pipes into the classifier") {
    CliResult r = run_shell("$TG gen xor 3 | $TG classify - 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "streaming_identity yes"));
    CHECK(contains(r.out, "write_once yes"));
}

TEST_CASE("eval prints the function value and succeeds") {
    CliResult r = run_shell("$TG gen xor 3 -o /tmp/tg_cli_x3.tg && "
                            "$TG eval /tmp/tg_cli_x3.tg --input 101");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
    CliResult wo = run_shell("$TG eval /tmp/tg_cli_x3.tg --input 100 --write-once");
    CHECK(wo.exit_code == 0);
    CHECK(wo.out == "1\n");
}

TEST_CASE("stdin behaves like a file argument") {
    CliResult file = run_shell("$TG gen eq 2 -o /tmp/tg_cli_eq.tg && "
                               "$TG enumerate /tmp/tg_cli_eq.tg");
    CliResult piped = run_shell("$TG gen eq 2 | $TG enumerate -");
    CHECK(file.exit_code == 0);
    CHECK(file.out == piped.out);
}

TEST_CASE("transform output is byte-stable for a fixed input") {
    CliResult r = run_shell("$TG gen eq 2 -o /tmp/tg_cli_eq2.tg && "
                            "$TG trim /tmp/tg_cli_eq2.tg | cmp -s - /tmp/tg_cli_eq2.tg "
                            "&& echo same");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "same"));  // generator output is already trimmed
}

TEST_CASE("validate exit codes distinguish failure kinds") {
    std::string good = temp_file("tg 1\nuniverse 1\nvertices 2\ninitial 0\nterminal 1\n"
                                 "edge 0 1 0\n");
    CliResult ok = run_shell("$TG validate " + good);
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "ok"));

    std::string broken = temp_file("tg 1\nuniverse 1\nvertices 2\ninitial 0\nterminal 1\n"
                                   "edge 0 9 -\n");
    CHECK(run_shell("$TG validate " + broken).exit_code == 1);

    std::string garbled = temp_file("tg 1\nuniverse x\n");
    CHECK(run_shell("$TG validate " + garbled + " 2>/dev/null").exit_code == 2);
    CHECK(run_shell("$TG no-such-command 2>/dev/null").exit_code == 2);
    CHECK(run_shell("$TG --help >/dev/null").exit_code == 0);
}

TEST_CASE("closure then structure check passes on the clique indicator") {
    CliResult r = run_shell("$TG gen clique 3 | $TG closure - | "
                            "$TG check-structure --family clique -");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "pass"));

    std::string open_chain = temp_file("tg 1\nuniverse 3\nvertices 3\ninitial 0\n"
                                       "terminal 2\nedge 0 1 0\nedge 1 2 1\n");
    CliResult unclosed = run_shell("$TG check-structure --family p3f " + open_chain);
    CHECK(unclosed.exit_code == 1);
    CHECK(contains(unclosed.out, "not closed"));
}

TEST_CASE("mindc prints its fixed-format table") {
    std::string tt = temp_file("tt 1\nvars 2\n01\n10\n");
    CliResult r = run_shell("$TG mindc --function " + tt +
                            " --max-edges 4 --witness-out /tmp/tg_cli_witness.tg");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "minimal_size 2"));
    CHECK(contains(r.out, "budget_exhausted no"));
    CliResult w = run_shell("$TG enumerate /tmp/tg_cli_witness.tg");
    CHECK(w.out == "tt 1\nvars 2\n01\n10\n");
}

TEST_CASE("verify-uniform agrees with the library") {
    CliResult r = run_shell("$TG gen clique 3 | $TG enumerate - -o /tmp/tg_cli_c3.tt && "
                            "$TG verify-uniform --function /tmp/tg_cli_c3.tt --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "subfamilies 32"));
    CHECK(contains(r.out, "uniformly_hard yes"));
}

TEST_CASE("dimacs input flows through the reduction") {
    std::string cnf = temp_file("c tiny\np cnf 2 2\n1 2 0\n-1 0\n");
    CliResult r = run_shell("$TG gen from-cnf " + cnf + " -o /tmp/tg_cli_red.tg && "
                            "$TG eval /tmp/tg_cli_red.tg --input 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("branching program commands") {
    CliResult r = run_shell("$TG bp gen p3f 3 | $TG bp eval - --input 111");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    std::string nbp = temp_file("nbp 1\nvars 2\nvertices 2\ninitial 0\nterminal 1\n"
                                "edge 0 1 +0\nedge 0 1 +1\n");
    CliResult tg = run_shell("$TG bp to-tg " + nbp + " | $TG enumerate -");
    CHECK(tg.out == "tt 1\nvars 2\n01\n10\n11\n");
}

TEST_CASE("dot export renders both graph kinds") {
    CliResult r = run_shell("$TG gen xor 2 | $TG dot -");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "digraph tg"));
    CliResult bp = run_shell("$TG bp gen p3f 3 | $TG dot -");
    CHECK(contains(bp.out, "digraph nbp"));
    CliResult pairs = run_shell("$TG gen clique 3 | $TG dot - --pairs 3");
    CHECK(contains(pairs.out, "{0-1,0-2,1-2}"));
}

TEST_CASE("report prints rows") {
    CliResult r = run_shell("$TG report xor 10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "xor"));
    CHECK(contains(r.out, "512"));
    CliResult all = run_shell("$TG report all");
    CHECK(all.exit_code == 0);
    CHECK(contains(all.out, "clique"));
}

TEST_CASE("seeded generation is reproducible") {
    CliResult r = run_shell("a=$($TG gen random-tg --seed 42 --cyclic); "
                            "b=$($TG gen random-tg --seed 42 --cyclic); "
                            "[ \"$a\" = \"$b\" ] && echo stable");
    CHECK(contains(r.out, "stable"));
}
