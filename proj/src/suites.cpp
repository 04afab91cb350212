#include "numbrix/suites.hpp"


#include "numbrix/analyze.hpp"
#include "numbrix/construct.hpp"
#include "numbrix/errors.hpp"

namespace numbrix {

namespace {

std::string board(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

class Checks {
public:
    Checks(std::string_view suite, std::ostream& out) : suite_(suite), out_(out) {}

    void check(bool ok, const std::string& what) {
        out_ << (ok ? "PASS " : "FAIL ") << suite_ << ' ' << what << '\n';
        all_ = all_ && ok;
    }
    bool passed() const { return all_; }

private:
    std::string suite_;
    std::ostream& out_;
    bool all_ = true;
};

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

void lemma2(Checks& c, int max, const SearchOptions& options) {
    for (int m = 2; m <= max; ++m) {
        for (int n = m; n <= max; ++n) {
            const std::uint64_t circuits = count_hamiltonian_circuits({m, n}, options);
            const bool expected = m % 2 == 0 || n % 2 == 0;
            bool built = false;
            try {
                built = is_valid_cyclic_path(circular_path({m, n}));
            } catch (const NoCircuitError&) {
            }
            c.check((circuits > 0) == expected && built == expected,
                    board(m, n) + " circuits=" + std::to_string(circuits) + " constructed=" + (built ? "yes" : "no"));
        }
    }
}

void thm_1xn(Checks& c, int max, const SearchOptions& options) {
    for (int n = 1; n <= max; ++n) {
        const auto report = min_clue_number({1, n}, 2, options);
        const int expected = n == 1 ? 0 : 1;
        c.check(report.min_clues == expected, board(1, n) + " min=" + show(report.min_clues));
        if (n == 1) continue;
        const auto nondef = max_nondefining_number({1, n}, NondefMethod::Exhaustive, options);
        c.check(nondef.max_nondefining == (n % 2 == 1 ? 1 : 0),
                board(1, n) + " max-nondefining=" + show(nondef.max_nondefining));
    }
}

void thm_2xn(Checks& c, int max, const SearchOptions& options) {
    for (int n = 2; n <= max; ++n) {
        const auto report = min_clue_number({2, n}, 2, options);
        c.check(report.min_clues == 2, board(2, n) + " min=" + show(report.min_clues));
        const NondefMethod method = 2 * n <= 10 ? NondefMethod::Exhaustive : NondefMethod::Witness;
        const auto nondef = max_nondefining_number({2, n}, method, options);
        c.check(nondef.max_nondefining == 2 * n - 2,
                board(2, n) + " max-nondefining=" + show(nondef.max_nondefining) +
                    (method == NondefMethod::Exhaustive ? " (exhaustive)" : " (witness)"));
    }
}

void thm_max(Checks& c, int max, const SearchOptions& options) {
    for (int m = 3; m <= max; ++m) {
        for (int n = m; n <= max; ++n) {
            const ClueSet clues = max_nondefining_clues({m, n});
            const auto count = solve(clues, std::nullopt, 0, options).count;
            c.check(count == 2 && clues.size() == static_cast<std::size_t>(m * n - 2),
                    board(m, n) + " clues=" + std::to_string(clues.size()) + " solutions=" + std::to_string(count));
            if (m * n <= kMaxNondefExhaustiveCells) {
                const auto nondef = max_nondefining_number({m, n}, NondefMethod::Exhaustive, options);
                c.check(nondef.max_nondefining == m * n - 2,
                        board(m, n) + " exhaustive max-nondefining=" + show(nondef.max_nondefining));
            }
        }
    }
}

void thm_upper(Checks& c, int max, const SearchOptions& options) {
    for (int m = 3; m <= max; ++m) {
        for (int n = m; n <= max; ++n) {
            const ClueSet clues = minimal_clues({m, n});
            const SolveOutcome outcome = solve(clues, 2, 1, options);
            const bool unique = outcome.count == 1;
            const bool zigzag = unique && outcome.solutions.front() == zigzag_solution({m, n}, {Corner::TopRight});
            const std::size_t bound = static_cast<std::size_t>((m + 1) / 2);
            c.check(unique && zigzag && clues.size() <= bound,
                    board(m, n) + " clues=" + std::to_string(clues.size()) + " unique=" + (unique ? "yes" : "no") +
                        " zigzag=" + (zigzag ? "yes" : "no"));
        }
    }
}

void thm_3xn(Checks& c, int max, const SearchOptions& options) {
    for (int n = 3; n <= max; n += 2) {
        const BoardDims dims(3, n);
        std::size_t clues = 0;
        std::size_t good = 0;
        for (int i = 0; i < dims.cell_count(); ++i) {
            const Cell cell = cell_at(dims, i);
            for (int v = 1; v <= dims.cell_count(); ++v) {
                if (!clue_screen(ClueSet(dims, {{cell, v}}))) continue;
                ++clues;
                const auto [a, b] = two_solutions_single_clue(n, cell, v);
                const ClueSet single(dims, {{cell, v}});
                const bool ok = !(a == b) && matches(a, single) && matches(b, single) &&
                                solve(single, 2, 0, options).count >= 2;
                if (ok) ++good;
                else c.check(false, board(3, n) + " clue " + std::to_string(v) + " at (" + std::to_string(cell.row) +
                                        "," + std::to_string(cell.col) + ")");
            }
        }
        c.check(good == clues, board(3, n) + " single clues with two solutions: " + std::to_string(good) + "/" +
                                   std::to_string(clues));
    }
    for (int n = 3; n <= max; ++n) {
        const auto report = min_clue_number({3, n}, 2, options);
        c.check(report.min_clues == 2, board(3, n) + " min=" + show(report.min_clues));
    }
}

void cor_4xn(Checks& c, int max, const SearchOptions& options) {
    for (int n = 4; n <= max; ++n) {
        const auto report = min_clue_number({4, n}, 2, options);
        c.check(report.min_clues == 2, board(4, n) + " min=" + show(report.min_clues));
    }
}

void conj_5x5(Checks& c, const SearchOptions& options) {
    c.check(verify_no_k_defines({5, 5}, 2, options), "5x5 no 2-clue set defines");
    const auto report = min_clue_number({5, 5}, 3, options);
    c.check(report.min_clues == 3, "5x5 min=" + show(report.min_clues));
}

void conj_6x6(Checks& c, const SearchOptions& options) {
    c.check(verify_no_k_defines({6, 6}, 1, options), "6x6 no single clue defines");
    c.check(verify_no_k_defines({6, 6}, 2, options), "6x6 no 2-clue set defines");
}

void paths_7x7(Checks& c, const SearchOptions& options) {
    const std::uint64_t paths = count_hamiltonian_paths({7, 7}, options);
    c.check(paths > 27'000'000 && paths % 2 == 0, "7x7 solutions=" + std::to_string(paths));
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog = {
        {"lemma2", "circuit exists iff a dimension is even (2 <= m <= n <= max)", 6, false},
        {"thm-1xn", "1xn: minimum 0 or 1 clue, maximum non-defining 1 iff n odd", 9, false},
        {"thm-2xn", "2xn: minimum 2 clues, maximum non-defining 2n-2", 6, false},
        {"thm-max", "mn-2 clues can fail to define (3 <= m <= n <= max)", 6, false},
        {"thm-upper", "ceil(m/2) first-column clues define the top-right zig-zag", 8, false},
        {"thm-3xn", "no single clue defines a 3xn puzzle; minimum is 2", 7, false},
        {"cor-4xn", "4xn: minimum 2 clues", 6, false},
        {"conj-5x5", "5x5: no 2-clue set defines; minimum is 3", 5, false},
        {"conj-6x6", "6x6: no 2-clue set defines", 6, true},
        {"paths-7x7", "7x7 has over 27 million solutions", 7, true},
    };
    return catalog;
}

const SuiteInfo* find_suite(std::string_view name) {
    for (const auto& s : suite_catalog()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

bool run_suite(std::string_view name, std::optional<int> max, const SearchOptions& options, std::ostream& out) {
    const SuiteInfo* info = find_suite(name);
    if (info == nullptr) throw DomainError("unknown suite '" + std::string(name) + "'");
    const int limit = max.value_or(info->default_max);
    Checks c(name, out);
    if (name == "lemma2") lemma2(c, limit, options);
    else if (name == "thm-1xn") thm_1xn(c, limit, options);
    else if (name == "thm-2xn") thm_2xn(c, limit, options);
    else if (name == "thm-max") thm_max(c, limit, options);
    else if (name == "thm-upper") thm_upper(c, limit, options);
    else if (name == "thm-3xn") thm_3xn(c, limit, options);
    else if (name == "cor-4xn") cor_4xn(c, limit, options);
    else if (name == "conj-5x5") conj_5x5(c, options);
    else if (name == "conj-6x6") conj_6x6(c, options);
    else if (name == "paths-7x7") paths_7x7(c, options);
    out << "suite " << name << ": " << (c.passed() ? "PASS" : "FAIL") << '\n';
    return c.passed();
}

}  // namespace numbrix
