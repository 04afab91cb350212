#include "numbrix/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "numbrix/analyze.hpp"
#include "numbrix/construct.hpp"
#include "numbrix/enumerate.hpp"
#include "numbrix/errors.hpp"
#include "numbrix/puzzle_io.hpp"
#include "numbrix/suites.hpp"

namespace numbrix::cli {

namespace {

// Boards at least this large need --allow-long for full enumeration.
constexpr int kLongBoardCells = 49;

unsigned default_threads() {
    if (const char* env = std::getenv("NUMBRIX_THREADS"); env != nullptr) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 0;
}

// A usage problem detected after CLI11 accepted the arguments.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Corner parse_corner(const std::string& s) {
    if (s == "tl") return Corner::TopLeft;
    if (s == "tr") return Corner::TopRight;
    if (s == "bl") return Corner::BottomLeft;
    return Corner::BottomRight;
}

Cell parse_placement(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("placement '" + s + "' must be ROW,COL");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("placement '" + s + "' must be ROW,COL");
    }
}

std::string placement_key(Cell c) {
    return "one at (" + std::to_string(c.row) + "," + std::to_string(c.col) + "):";
}

struct Settings {
    unsigned threads = default_threads();
    bool allow_long = false;

    // solve
    std::string file;
    std::size_t retain = 1;
    std::optional<std::uint64_t> cap;
    // board
    int rows = 0;
    int cols = 0;
    // gen
    std::string kind;
    std::string corner = "tr";
    // count-paths
    bool circuits = false;
    // min-clues
    int kmax = 2;
    std::vector<std::string> with_one;
    std::string checkpoint;
    // verify
    std::string suite;
    std::optional<int> max;
    // two-solutions
    int row = 0;
    int col = 0;
    int value = 0;
};

SearchOptions search_options(const Settings& s, std::ostream& err, bool show_progress) {
    SearchOptions options;
    options.threads = s.threads;
    if (show_progress) {
        options.progress = [&err](std::size_t done, std::size_t total) {
            if (done == total || done % 16 == 0) err << "\rprogress " << done << "/" << total << std::flush;
            if (done == total) err << '\n';
        };
    }
    return options;
}

int cmd_solve(const Settings& s, std::ostream& out, std::ostream& err) {
    if (s.cap && *s.cap < 2) throw UsageError("--cap must be at least 2 to tell unique from multiple");
    const PuzzleDocument doc = parse_puzzle(read_file(s.file));
    const bool long_run = doc.dims.cell_count() >= kLongBoardCells && s.allow_long;
    const SolveOutcome outcome = solve(doc.clues(), s.cap, s.retain, search_options(s, err, long_run));
    if (outcome.count == 0) out << "NONE\n";
    else if (outcome.count == 1 && !outcome.capped) out << "UNIQUE\n";
    else if (outcome.capped) out << "MULTIPLE(≥" << *s.cap << ")\n";
    else out << "MULTIPLE(" << outcome.count << ")\n";
    for (const Solution& sol : outcome.solutions) out << '\n' << format_puzzle(PuzzleDocument::from_solution(sol));
    return kExitOk;
}

int cmd_gen(const Settings& s, std::ostream& out) {
    const BoardDims dims(s.rows, s.cols);
    PuzzleDocument doc;
    if (s.kind == "zigzag") {
        doc = PuzzleDocument::from_solution(zigzag_solution(dims, {parse_corner(s.corner)}));
    } else if (s.kind == "min-clues") {
        doc = PuzzleDocument::from_clues(minimal_clues(dims));
    } else if (s.kind == "max-nondef") {
        doc = PuzzleDocument::from_clues(max_nondefining_clues(dims));
    } else {
        const CyclicPath path = circular_path(dims);
        doc = {dims, std::vector<int>(static_cast<std::size_t>(dims.cell_count()), 0)};
        int v = 1;
        for (const Cell& c : path.cells) doc.entries[static_cast<std::size_t>(cell_index(dims, c))] = v++;
    }
    out << format_puzzle(doc);
    return kExitOk;
}

int cmd_count(const Settings& s, std::ostream& out, std::ostream& err) {
    const BoardDims dims(s.rows, s.cols);
    if (dims.cell_count() >= kLongBoardCells && !s.allow_long) {
        throw UsageError("counting on " + std::to_string(dims.cell_count()) +
                         " cells is a long run; pass --allow-long");
    }
    const SearchOptions options = search_options(s, err, s.allow_long);
    out << (s.circuits ? count_hamiltonian_circuits(dims, options) : count_hamiltonian_paths(dims, options)) << '\n';
    return kExitOk;
}

int cmd_anchored(const Settings& s, std::ostream& out, std::ostream& err) {
    const BoardDims dims(s.rows, s.cols);
    if (dims.cell_count() >= kLongBoardCells && !s.allow_long) {
        throw UsageError("anchored search on " + std::to_string(dims.cell_count()) +
                         " cells is a long run; pass --allow-long");
    }
    std::map<std::string, std::string> done;
    if (!s.checkpoint.empty()) {
        std::ifstream in(s.checkpoint);
        for (std::string line; std::getline(in, line);) {
            if (const auto colon = line.find("):"); colon != std::string::npos) {
                done.emplace(line.substr(0, colon + 2), line);
            }
        }
    }
    out << "board " << dims.rows << "x" << dims.cols << " anchored 3-clue search\n";
    for (const std::string& spec : s.with_one) {
        const Cell cell = parse_placement(spec);
        if (!in_bounds(dims, cell)) throw UsageError("placement '" + spec + "' is outside the board");
        const std::string key = placement_key(cell);
        if (auto it = done.find(key); it != done.end()) {
            out << it->second << '\n';
            continue;
        }
        const auto result = anchored_pair_search(ClueSet(dims, {{cell, 1}}), search_options(s, err, s.allow_long));
        std::string line = key + " solutions=" + std::to_string(result.solutions) +
                           " defining-3-clue-sets=" + std::to_string(result.defining_sets);
        out << line << '\n';
        if (!s.checkpoint.empty()) {
            std::ofstream(s.checkpoint, std::ios::app) << line << '\n';
            done.emplace(key, line);
        }
    }
    return kExitOk;
}

int cmd_min_clues(const Settings& s, std::ostream& out, std::ostream& err) {
    if (!s.with_one.empty()) return cmd_anchored(s, out, err);
    const BoardDims dims(s.rows, s.cols);
    const MinCluesReport report = min_clue_number(dims, s.kmax, search_options(s, err, false));
    out << "board " << dims.rows << "x" << dims.cols << '\n';
    for (std::size_t k = 0; k < report.insufficient.size(); ++k) out << "k=" << k << " insufficient\n";
    if (!report.min_clues) {
        out << "minimum >" << report.searched_up_to << '\n';
        return kExitOk;
    }
    out << "minimum " << *report.min_clues << '\n' << format_puzzle(PuzzleDocument::from_clues(*report.witness));
    return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
    const SuiteInfo* info = find_suite(s.suite);
    if (info == nullptr) {
        std::string names;
        for (const auto& suite : suite_catalog()) names += " " + suite.name;
        throw UsageError("unknown suite '" + s.suite + "'; available:" + names);
    }
    if (info->long_running && !s.allow_long) {
        throw UsageError("suite '" + s.suite + "' is a long run; pass --allow-long");
    }
    return run_suite(s.suite, s.max, search_options(s, err, info->long_running), out) ? kExitOk : kExitViolated;
}

int cmd_two_solutions(const Settings& s, std::ostream& out) {
    const auto [a, b] = two_solutions_single_clue(s.cols, {s.row, s.col}, s.value);
    out << format_puzzle(PuzzleDocument::from_solution(a)) << '\n'
        << format_puzzle(PuzzleDocument::from_solution(b));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Exact search and constructions for Numbrix puzzles", "numbrix"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", s.threads, "worker threads (default: NUMBRIX_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
    };
    auto add_board = [&](CLI::App* sub) {
        sub->add_option("--rows", s.rows, "board rows")->required()->check(CLI::PositiveNumber);
        sub->add_option("--cols", s.cols, "board columns")->required()->check(CLI::PositiveNumber);
    };

    auto* solve_cmd = app.add_subcommand("solve", "count and print the solutions of a puzzle file");
    solve_cmd->add_option("file", s.file, "puzzle file")->required();
    solve_cmd->add_option("--retain", s.retain, "solutions to print, smallest first");
    solve_cmd->add_option("--cap", s.cap, "stop counting after this many solutions");
    solve_cmd->add_flag("--allow-long", s.allow_long, "show progress on large boards");
    add_threads(solve_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "print a constructed board");
    add_board(gen_cmd);
    gen_cmd->add_option("--kind", s.kind, "zigzag | min-clues | max-nondef | circular")
        ->required()
        ->check(CLI::IsMember({"zigzag", "min-clues", "max-nondef", "circular"}));
    gen_cmd->add_option("--corner", s.corner, "zig-zag start corner")->check(CLI::IsMember({"tr", "tl", "br", "bl"}));

    auto* count_cmd = app.add_subcommand("count-paths", "count solutions of the empty board");
    add_board(count_cmd);
    count_cmd->add_flag("--circuits", s.circuits, "count Hamiltonian circuits instead");
    count_cmd->add_flag("--allow-long", s.allow_long, "permit boards of 49 cells or more");
    add_threads(count_cmd);

    auto* min_cmd = app.add_subcommand("min-clues", "smallest defining clue count by exhaustive search");
    add_board(min_cmd);
    min_cmd->add_option("--kmax", s.kmax, "largest clue count to try")->check(CLI::NonNegativeNumber);
    min_cmd->add_option("--with-one", s.with_one,
                        "partial 3-clue search: clue sets containing 1 at ROW,COL (repeatable)");
    min_cmd->add_option("--checkpoint", s.checkpoint, "resume file for --with-one results");
    min_cmd->add_flag("--allow-long", s.allow_long, "permit long anchored searches");
    add_threads(min_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("--suite", s.suite, "suite name")->required();
    verify_cmd->add_option("--max", s.max, "largest board parameter")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--allow-long", s.allow_long, "permit long-running suites");
    add_threads(verify_cmd);

    auto* two_cmd = app.add_subcommand("two-solutions", "two solutions on 3xN sharing one clue");
    two_cmd->add_option("--cols", s.cols, "odd column count")->required();
    two_cmd->add_option("--row", s.row, "clue row")->required();
    two_cmd->add_option("--col", s.col, "clue column")->required();
    two_cmd->add_option("--value", s.value, "clue value")->required();

    std::vector<const char*> argv{"numbrix"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(s, out, err);
        if (gen_cmd->parsed()) return cmd_gen(s, out);
        if (count_cmd->parsed()) return cmd_count(s, out, err);
        if (min_cmd->parsed()) return cmd_min_clues(s, out, err);
        if (verify_cmd->parsed()) return cmd_verify(s, out, err);
        if (two_cmd->parsed()) return cmd_two_solutions(s, out);
    } catch (const ParseError& e) {
        err << "numbrix: " << s.file << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // DomainError and bad numeric input.
        err << "numbrix: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // Usage, capacity, no-circuit, no-such-set and infeasible errors.
        err << "numbrix: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace numbrix::cli
