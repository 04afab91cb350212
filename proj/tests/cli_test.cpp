#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "numbrix/cli.hpp"
#include "numbrix/errors.hpp"
#include "numbrix/puzzle_io.hpp"

using namespace numbrix;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("numbrix_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("parse puzzle examples") {
    const PuzzleDocument sample = parse_puzzle("3 3\n0 0 0\n0 0 2\n0 6 0\n");
    CHECK(sample.dims == BoardDims(3, 3));
    CHECK(sample.clues() == ClueSet({3, 3}, {{{2, 1}, 6}, {{1, 2}, 2}}));
    CHECK(parse_puzzle("1 1\n1\n").clues() == ClueSet({1, 1}, {{{0, 0}, 1}}));
    CHECK(parse_puzzle("2 2\n0 4\n2 0\n").clues() == ClueSet({2, 2}, {{{1, 0}, 2}, {{0, 1}, 4}}));
    // Comments and blank lines anywhere, trailing whitespace ignored.
    CHECK(parse_puzzle("# two clues\n2 2  \n\n0 4\n# middle\n2 0\t\n") == parse_puzzle("2 2\n0 4\n2 0\n"));
}

TEST_CASE("format puzzle examples") {
    const PuzzleDocument sample = PuzzleDocument::from_clues(ClueSet({3, 3}, {{{2, 1}, 6}, {{1, 2}, 2}}));
    CHECK(format_puzzle(sample) == "3 3\n0 0 0\n0 0 2\n0 6 0\n");
    CHECK(format_puzzle(PuzzleDocument::from_solution(Solution({1, 2}, {1, 2}))) == "1 2\n1 2\n");
    for (const std::string text : {"3 3\n0 0 0\n0 0 2\n0 6 0\n", "2 3\n1 2 3\n6 5 4\n", "1 1\n0\n"}) {
        CHECK(format_puzzle(parse_puzzle(text)) == text);
        const PuzzleDocument doc = parse_puzzle(text);
        CHECK(parse_puzzle(format_puzzle(doc)) == doc);
    }
}

TEST_CASE("parse errors name line and column") {
    auto where = [](const std::string& text) -> std::pair<int, int> {
        try {
            parse_puzzle(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(where("") == std::pair{1, 1});
    CHECK(where("3\n") == std::pair{1, 1});
    CHECK(where("x 3\n") == std::pair{1, 1});
    CHECK(where("0 3\n0 0 0\n").first == 1);
    CHECK(where("2 2\n0 4\n2\n") == std::pair{3, 2});
    CHECK(where("2 2\n0 4\n2 0 1\n") == std::pair{3, 5});
    CHECK(where("2 2\n0 5\n2 0\n") == std::pair{2, 3});
    CHECK(where("2 2\n0 2\n2 0\n") == std::pair{3, 1});
    CHECK(where("2 2\n0 4\n") == std::pair{3, 1});
    CHECK(where("# c\n2 2\n0 -1\n2 0\n") == std::pair{3, 3});
    CHECK(where("2 2\n0 4\n2 0\n7\n") == std::pair{4, 1});
}

TEST_CASE("solve command") {
    const std::string sample = write_temp("sample.txt", "3 3\n0 0 0\n0 0 2\n0 6 0\n");
    const Run r = run({"solve", sample});
    CHECK(r.code == 0);
    CHECK(r.out == "UNIQUE\n\n3 3\n9 4 3\n8 5 2\n7 6 1\n");

    const std::string pair = write_temp("pair.txt", "2 2\n0 4\n2 0\n");
    const Run two = run({"solve", pair, "--retain", "2"});
    CHECK(two.out == "MULTIPLE(2)\n\n2 2\n1 4\n2 3\n\n2 2\n3 4\n2 1\n");

    const std::string empty = write_temp("empty.txt", "3 3\n0 0 0\n0 0 0\n0 0 0\n");
    CHECK(run({"solve", empty, "--cap", "5", "--retain", "0"}).out == "MULTIPLE(≥5)\n");
    CHECK(run({"solve", empty, "--retain", "0", "--threads", "2"}).out == "MULTIPLE(40)\n");

    const std::string none = write_temp("none.txt", "3 3\n2 0 0\n0 0 0\n0 0 0\n");
    CHECK(run({"solve", none}).out == "NONE\n");

    const std::string bad = write_temp("bad.txt", "2 2\n0 5\n2 0\n");
    const Run broken = run({"solve", bad});
    CHECK(broken.code == 2);
    CHECK(broken.err.find("line 2, column 3") != std::string::npos);
    CHECK(run({"solve", "/nonexistent/puzzle.txt"}).code == 2);
}

TEST_CASE("gen command") {
    CHECK(run({"gen", "--rows", "3", "--cols", "4", "--kind", "zigzag", "--corner", "tr"}).out ==
          "3 4\n4 3 2 1\n5 6 7 8\n12 11 10 9\n");
    CHECK(run({"gen", "--rows", "3", "--cols", "4", "--kind", "min-clues"}).out == "3 4\n0 0 0 0\n5 0 0 0\n12 0 0 0\n");
    CHECK(run({"gen", "--rows", "2", "--cols", "2", "--kind", "max-nondef"}).out == "2 2\n0 4\n2 0\n");
    CHECK(run({"gen", "--rows", "2", "--cols", "2", "--kind", "circular"}).out == "2 2\n1 2\n4 3\n");
    CHECK(run({"gen", "--rows", "3", "--cols", "3", "--kind", "circular"}).code == 2);
    CHECK(run({"gen", "--rows", "1", "--cols", "4", "--kind", "max-nondef"}).code == 2);
    CHECK(run({"gen", "--rows", "3", "--cols", "3", "--kind", "spiral"}).code == 2);
}

TEST_CASE("count commands") {
    CHECK(run({"count-paths", "--rows", "4", "--cols", "4"}).out == "552\n");
    CHECK(run({"count-paths", "--rows", "4", "--cols", "4", "--circuits"}).out == "6\n");
    CHECK(run({"count-paths", "--rows", "7", "--cols", "7"}).code == 2);
    CHECK(run({"count-paths", "--rows", "9", "--cols", "9", "--allow-long"}).code == 2);
}

TEST_CASE("min-clues and two-solutions commands") {
    const Run r = run({"min-clues", "--rows", "4", "--cols", "4", "--kmax", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("minimum 2") != std::string::npos);
    const Run pair = run({"two-solutions", "--cols", "7", "--row", "0", "--col", "2", "--value", "11"});
    CHECK(pair.code == 0);
    CHECK(run({"two-solutions", "--cols", "7", "--row", "0", "--col", "2", "--value", "2"}).code == 2);
}

TEST_CASE("verify command and usage errors") {
    const Run ok = run({"verify", "--suite", "lemma2", "--max", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("suite lemma2: PASS") != std::string::npos);
    CHECK(run({"verify", "--suite", "conj-6x6"}).code == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "--rows", "x"}).code == 2);
}

TEST_CASE("output does not depend on threads") {
    const std::string empty = write_temp("empty4.txt", "4 4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    const Run one = run({"solve", empty, "--retain", "20", "--threads", "1"});
    for (const char* t : {"2", "4"}) CHECK(run({"solve", empty, "--retain", "20", "--threads", t}).out == one.out);
}
