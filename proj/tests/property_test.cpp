#include <doctest.h>

#include <random>
#include <set>

#include "numbrix/enumerate.hpp"

using namespace numbrix;

namespace {

BoardDims random_board(std::mt19937_64& rng) {
    for (;;) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 5);
        if (m * n >= 2) return {m, n};
    }
}

ClueSet random_clues(std::mt19937_64& rng, BoardDims dims, int max_clues) {
    const auto mn = static_cast<unsigned>(dims.cell_count());
    std::map<Cell, int> picked;
    std::set<int> used;
    const int k = static_cast<int>(rng() % static_cast<unsigned>(max_clues + 1));
    for (int i = 0; i < k; ++i) {
        const int value = 1 + static_cast<int>(rng() % mn);
        if (used.insert(value).second) picked.emplace(cell_at(dims, static_cast<int>(rng() % mn)), value);
    }
    return ClueSet(dims, picked);
}

}  // namespace

TEST_CASE("reversal is an involution and preserves counts") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const BoardDims dims = random_board(rng);
        const ClueSet clues = random_clues(rng, dims, 3);
        const ClueSet flipped = reverse_clues(clues);
        CHECK(reverse_clues(flipped) == clues);
        const SolveOutcome a = solve(clues, std::nullopt, 1);
        const SolveOutcome b = solve(flipped, std::nullopt, 1);
        CHECK(a.count == b.count);
        if (!a.solutions.empty()) {
            const Solution r = reverse_solution(a.solutions.front());
            CHECK(reverse_solution(r) == a.solutions.front());
            CHECK(matches(r, flipped));
        }
    }
}

TEST_CASE("adding a clue never increases the count") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 500; ++trial) {
        const BoardDims dims = random_board(rng);
        const ClueSet clues = random_clues(rng, dims, 2);
        const auto mn = static_cast<unsigned>(dims.cell_count());
        const Cell cell = cell_at(dims, static_cast<int>(rng() % mn));
        const int value = 1 + static_cast<int>(rng() % mn);
        bool taken = clues.value_at(cell).has_value();
        for (const auto& [c, v] : clues.assignments()) taken = taken || v == value;
        if (taken) continue;
        CHECK(solve(clues.with(cell, value)).count <= solve(clues).count);
    }
}

TEST_CASE("results are identical across thread counts") {
    const ClueSet clues({4, 5}, {{{1, 1}, 8}});
    std::vector<SolveOutcome> outcomes;
    for (unsigned t : {1u, 2u, 0u}) {
        SearchOptions options;
        options.threads = t;
        outcomes.push_back(solve(clues, std::nullopt, kRetainAll, options));
    }
    CHECK(outcomes[0].count == outcomes[1].count);
    CHECK(outcomes[0].solutions == outcomes[1].solutions);
    CHECK(outcomes[0].solutions == outcomes[2].solutions);
}
