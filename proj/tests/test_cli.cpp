// End-to-end tests for the asjust binary. Each case shells out to the CLI
// (path taken from the ASJUST_BIN environment variable, set by CTest), captures
// stdout+stderr and the exit code, and checks them against frozen output.

#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "testlib.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string output;  // stdout and stderr, interleaved
};

const char* binary_path() {
    const char* bin = std::getenv("ASJUST_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ASJUST_BIN must point at the CLI binary");
    return bin;
}

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(binary_path()) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Writes the program text into a scratch directory and returns the file path.
std::string program_file(const std::string& name, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "asjust_cli_tests";
    fs::create_directories(dir);
    fs::path file = dir / name;
    std::ofstream out(file);
    REQUIRE(out.good());
    out << text;
    out.close();
    return file.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("cli answersets lists answer sets in order") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("answersets " + file);
    CHECK(r.code == 0);
    CHECK(r.output == "S0 = {a, d, e}\nS1 = {-a, e}\n");

    std::string one = program_file("one_route.lp", testlib::kOneRouteProgram);
    RunResult r2 = run_cli("answersets " + one);
    CHECK(r2.code == 0);
    CHECK(r2.output == "S0 = {a, b, q}\n");
}

TEST_CASE("cli answersets rejects inconsistent programs") {
    std::string file = program_file("odd_loop.lp", "a :- not a.\n");
    RunResult r = run_cli("answersets " + file);
    CHECK(r.code == 3);
    CHECK(r.output == "error: program is inconsistent\n");

    std::string clash = program_file("clash.lp", "a.\n-a.\n");
    RunResult r2 = run_cli("answersets " + clash);
    CHECK(r2.code == 3);
    CHECK(r2.output == "error: program is inconsistent\n");
}

TEST_CASE("cli reports parse errors with positions") {
    std::string file = program_file("broken.lp", "a :- b");
    RunResult r = run_cli("answersets " + file);
    CHECK(r.code == 2);
    CHECK(r.output == "error: parse error at 1:7: clause must end with '.'\n");

    std::string file2 = program_file("broken2.lp", "a :- b\n");
    RunResult r2 = run_cli("answersets " + file2);
    CHECK(r2.code == 2);
    CHECK(r2.output == "error: parse error at 2:1: clause must end with '.'\n");
}

TEST_CASE("cli reports unreadable files") {
    std::string missing = (std::filesystem::temp_directory_path() / "no_such_file.lp").string();
    RunResult r = run_cli("answersets " + missing);
    CHECK(r.code == 2);
    CHECK(r.output == "error: cannot open '" + missing + "'\n");
}

TEST_CASE("cli framework prints language, assumptions and rules") {
    std::string file = program_file("one_route.lp", testlib::kOneRouteProgram);
    RunResult r = run_cli("framework " + file);
    CHECK(r.code == 0);
    CHECK(r.output ==
          "language: {a, not a, -a, not -a, b, not b, -b, not -b, "
          "p, not p, -p, not -p, q, not q, -q, not -q}\n"
          "assumptions: {not a, not -a, not b, not -b, not p, not -p, not q, not -q}\n"
          "contrary: not l -> l\n"
          "rules (4):\n"
          "  p :- not a, not b.\n"
          "  q :- not p.\n"
          "  a.\n"
          "  b.\n");
}

TEST_CASE("cli arguments prints one canonical line per argument") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("arguments " + file);
    CHECK(r.code == 0);
    std::vector<std::string> ls = lines_of(r.output);
    REQUIRE(ls.size() == 14);
    CHECK(ls[0] == "A1: ({not a}, {}) |- not a");
    CHECK(ls[8] == "A9: ({not -a}, {}) |- a");
    CHECK(ls[9] == "A10: ({not c, not d, not e}, {}) |- a");
    CHECK(ls[13] == "A14: ({}, {e}) |- e");
}

TEST_CASE("cli extensions prints stable extensions by member id") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("extensions " + file);
    CHECK(r.code == 0);
    CHECK(r.output ==
          "E0 = {A1, A3, A4, A5, A6, A8, A11, A14}\n"
          "E1 = {A2, A3, A4, A6, A8, A9, A13, A14}\n");
}

TEST_CASE("cli extensions rejects programs beyond the search budget") {
    std::string file = program_file("eyecare.lp", testlib::kEyecareProgram);
    RunResult r = run_cli("extensions " + file);
    CHECK(r.code == 1);
    CHECK(r.output == "error: too many assumptions for exhaustive stable-extension search: 26\n");
}

TEST_CASE("cli attack-tree prints the first tree unless --all") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);

    RunResult first = run_cli("attack-tree " + file + " --argument A10 --answer-set 0");
    CHECK(first.code == 0);
    CHECK(first.output ==
          "tree 1/1:\n"
          "A10-\n"
          "  A13+\n"
          "    A11-\n"
          "      A13+ (repeat)\n");

    RunResult all = run_cli("attack-tree " + file + " --argument A10 --answer-set 0 --all");
    CHECK(all.code == 0);
    CHECK(all.output ==
          "tree 1/2:\n"
          "A10-\n"
          "  A13+\n"
          "    A11-\n"
          "      A13+ (repeat)\n"
          "tree 2/2:\n"
          "A10-\n"
          "  A14+\n");

    RunResult other = run_cli("attack-tree " + file + " --argument A10 --answer-set 1");
    CHECK(other.code == 0);
    CHECK(other.output ==
          "tree 1/1:\n"
          "A10-\n"
          "  A14+\n");
}

TEST_CASE("cli attack-tree emits readable dot") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("attack-tree " + file + " --argument A10 --answer-set 1 --format dot");
    CHECK(r.code == 0);
    std::vector<testlib::DotGraph> graphs = testlib::DotReader::read(r.output);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].name == "attack_tree");
    REQUIRE(graphs[0].nodes.count("n0") == 1);
    REQUIRE(graphs[0].nodes.count("n1") == 1);
    CHECK(graphs[0].nodes.at("n0").at("label") == "A10-");
    CHECK(graphs[0].nodes.at("n1").at("label") == "A14+");
    REQUIRE(graphs[0].edges.size() == 1);
    CHECK(graphs[0].edges[0].from == "n0");
    CHECK(graphs[0].edges[0].to == "n1");
}

TEST_CASE("cli attack-tree error paths") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);

    RunResult unknown = run_cli("attack-tree " + file + " --argument A99");
    CHECK(unknown.code == 6);
    CHECK(unknown.output == "error: unknown argument id 'A99'\n");

    RunResult range = run_cli("attack-tree " + file + " --argument A10 --answer-set 7");
    CHECK(range.code == 5);
    CHECK(range.output == "error: answer set index 7 out of range (0..1)\n");

    RunResult missing = run_cli("attack-tree " + file);
    CHECK(missing.code != 0);  // --argument is required
}

TEST_CASE("cli justify explains positive literals") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult babas = run_cli("justify " + file + " --literal e --answer-set 0 --method babas");
    CHECK(babas.code == 0);
    CHECK(babas.output == "justB+(e) = { e }\n");

    std::string routes = program_file("two_route.lp", testlib::kTwoRouteProgram);
    RunResult labas = run_cli("justify " + routes + " --literal q");
    CHECK(labas.code == 0);
    CHECK(labas.output ==
          "justL+(q) = { q+_A13, "
          "supp_rel-(not a-_asm, p-_A11), "
          "supp_rel-(not b-_asm, p-_A12), "
          "supp_rel+(not p+_asm, q+_A13), "
          "att_rel+(a+_fact, not a-_asm), "
          "att_rel+(b+_fact, not b-_asm), "
          "att_rel-(p-_A11, not p+_asm), "
          "att_rel-(p-_A12, not p+_asm) }\n");
}

TEST_CASE("cli justify explains NAF literals") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("justify " + file + " --literal not:c --answer-set 0");
    CHECK(r.code == 0);
    CHECK(r.output ==
          "justL+(not c) = { not c+_asm, "
          "supp_rel-(not e-_asm, c-_A12), "
          "att_rel-(c-_A12, not c+_asm), "
          "att_rel+(e+_fact, not e-_asm) }\n");
}

TEST_CASE("cli justify explains absent literals") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("justify " + file + " --literal=-a --answer-set 0 --method babas");
    CHECK(r.code == 0);
    CHECK(r.output ==
          "justB-(-a) = 1 set(s)\n"
          "  { -a, supp_rel(not -a, d), supp_rel(not c, -a), supp_rel(not d, -a), "
          "att_rel(-a, not -a), att_rel(d, not d) }\n");
}

TEST_CASE("cli justify --all prints every variant") {
    std::string file = program_file("one_route.lp", testlib::kOneRouteProgram);
    RunResult r = run_cli("justify " + file + " --literal q --all");
    CHECK(r.code == 0);
    CHECK(r.output ==
          "justL+(q) = { q+_A12, "
          "supp_rel-(not a-_asm, p-_A11), "
          "supp_rel+(not p+_asm, q+_A12), "
          "att_rel+(a+_fact, not a-_asm), "
          "att_rel-(p-_A11, not p+_asm) }\n"
          "justL+(q) = { q+_A12, "
          "supp_rel-(not b-_asm, p-_A11), "
          "supp_rel+(not p+_asm, q+_A12), "
          "att_rel+(b+_fact, not b-_asm), "
          "att_rel-(p-_A11, not p+_asm) }\n");
}

TEST_CASE("cli justify emits json and honours --out") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    const std::string golden =
        "{\n"
        "  \"subject\": {\n"
        "    \"literal\": \"e\"\n"
        "  },\n"
        "  \"polarity\": \"positive\",\n"
        "  \"variant\": \"basic\",\n"
        "  \"sets\": [\n"
        "    []\n"
        "  ]\n"
        "}\n";

    RunResult json = run_cli("justify " + file + " --literal e --method babas --format json");
    CHECK(json.code == 0);
    CHECK(json.output == golden);

    std::string out_path =
        (std::filesystem::temp_directory_path() / "asjust_cli_tests" / "out.json").string();
    RunResult to_file = run_cli("justify " + file +
                                " --literal e --method babas --format json --out " + out_path);
    CHECK(to_file.code == 0);
    CHECK(to_file.output.empty());
    CHECK(slurp(out_path) == golden);
}

TEST_CASE("cli justify emits one dot graph per set") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);
    RunResult r = run_cli("justify " + file + " --literal a --answer-set 1 --format dot");
    CHECK(r.code == 0);
    std::vector<testlib::DotGraph> graphs = testlib::DotReader::read(r.output);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].name == "justification_set0");
    CHECK(graphs[1].name == "justification_set1");
}

TEST_CASE("cli justify error paths") {
    std::string file = program_file("two_way.lp", testlib::kTwoWayProgram);

    RunResult outside = run_cli("justify " + file + " --literal zz");
    CHECK(outside.code == 4);
    CHECK(outside.output == "error: literal outside the program's language: zz\n");

    RunResult range = run_cli("justify " + file + " --literal a --answer-set 9");
    CHECK(range.code == 5);
    CHECK(range.output == "error: answer set index 9 out of range (0..1)\n");

    std::string odd = program_file("odd_loop.lp", "a :- not a.\n");
    RunResult inconsistent = run_cli("justify " + odd + " --literal a");
    CHECK(inconsistent.code == 3);
    CHECK(inconsistent.output == "error: program is inconsistent\n");

    RunResult bad_format = run_cli("justify " + file + " --literal a --format yaml");
    CHECK(bad_format.code != 0);

    RunResult no_literal = run_cli("justify " + file);
    CHECK(no_literal.code != 0);  // --literal is required

    RunResult no_subcommand = run_cli("");
    CHECK(no_subcommand.code != 0);
}
