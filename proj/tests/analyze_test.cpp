#include <doctest.h>

#include <random>

#include "numbrix/analyze.hpp"
#include "numbrix/construct.hpp"
#include "numbrix/errors.hpp"

using namespace numbrix;

TEST_CASE("no single clue defines") {
    CHECK(verify_no_k_defines({2, 2}, 1));
    CHECK(verify_no_k_defines({3, 7}, 1));
    CHECK(verify_no_k_defines({4, 4}, 1));
    CHECK_FALSE(verify_no_k_defines({1, 5}, 1));
    CHECK_FALSE(verify_no_k_defines({3, 4}, 2));
}

TEST_CASE("two clues are not enough on 5 x 5") {
    CHECK(verify_no_k_defines({5, 5}, 2));
}

TEST_CASE("minimum clue numbers") {
    const MinCluesReport one = min_clue_number({1, 1}, 3);
    CHECK(one.min_clues == 0);
    CHECK(min_clue_number({1, 7}, 3).min_clues == 1);

    const MinCluesReport four = min_clue_number({4, 4}, 3);
    CHECK(four.min_clues == 2);
    REQUIRE(four.witness.has_value());
    CHECK(defines_puzzle(*four.witness));
    REQUIRE(four.insufficient.size() >= 2);
    CHECK(four.insufficient[1]);

    const MinCluesReport five = min_clue_number({5, 5}, 3);
    CHECK(five.min_clues == 3);
    REQUIRE(five.witness.has_value());
    CHECK(five.witness->size() == 3);
    CHECK(defines_puzzle(*five.witness));
    CHECK(five.insufficient[1]);
    CHECK(five.insufficient[2]);

    const MinCluesReport capped = min_clue_number({5, 5}, 2);
    CHECK_FALSE(capped.min_clues.has_value());
    CHECK(capped.searched_up_to == 2);

    for (int n = 2; n <= 6; ++n) {
        CHECK(min_clue_number({2, n}, 2).min_clues == 2);
        if (n >= 3) CHECK(min_clue_number({3, n}, 2).min_clues == 2);
        if (n >= 4) CHECK(min_clue_number({4, n}, 2).min_clues == 2);
    }
    // Tall boards are handled through their transpose.
    CHECK(min_clue_number({6, 3}, 2).min_clues == 2);
}

TEST_CASE("a defining k-set extends to a defining (k+1)-set") {
    for (const BoardDims dims : {BoardDims(3, 4), BoardDims(4, 4), BoardDims(2, 5)}) {
        const auto set = find_defining_set(dims, 2);
        REQUIRE(set.has_value());
        const Solution s = solve(*set, 2, 1).solutions.front();
        for (int i = 0; i < dims.cell_count(); ++i) {
            const Cell c = cell_at(dims, i);
            if (set->value_at(c)) continue;
            CHECK(defines_puzzle(set->with(c, s.at(c))));
            break;
        }
    }
}

TEST_CASE("capacity limits") {
    CHECK(exhaustive_cell_limit(0) == 64);
    CHECK(exhaustive_cell_limit(2) == 36);
    CHECK(exhaustive_cell_limit(9) == 20);
    CHECK_THROWS_AS(find_defining_set({7, 7}, 2), CapacityError);
    CHECK_THROWS_AS(verify_no_k_defines({5, 6}, 3), CapacityError);
    CHECK_THROWS_AS(find_defining_set({3, 3}, 6), CapacityError);
}

TEST_CASE("maximum non-defining numbers") {
    CHECK(max_nondefining_number({2, 2}).max_nondefining == 2);
    CHECK(max_nondefining_number({1, 3}).max_nondefining == 1);
    CHECK(max_nondefining_number({1, 4}).max_nondefining == 0);
    CHECK_FALSE(max_nondefining_number({1, 1}).max_nondefining.has_value());

    const MaxNondefReport r = max_nondefining_number({3, 4});
    CHECK(r.method == NondefMethod::Exhaustive);
    CHECK(r.max_nondefining == 10);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_solutions == 2);
    CHECK(solve(*r.witness).count == 2);

    const MaxNondefReport w = max_nondefining_number({5, 6});
    CHECK(w.method == NondefMethod::Witness);
    CHECK(w.max_nondefining == 28);
    CHECK(w.witness_solutions == 2);

    for (int m = 1; m <= 3; ++m) {
        for (int n = std::max(m, 2); m * n <= 12; ++n) {
            const MaxNondefReport exact = max_nondefining_number({m, n}, NondefMethod::Exhaustive);
            const int expected = m == 1 ? (n % 2) : m * n - 2;
            CHECK_MESSAGE(exact.max_nondefining == expected, m, "x", n);
        }
    }
}

TEST_CASE("pair signature counts agree with direct solving") {
    std::mt19937_64 rng(7);
    for (const BoardDims dims : {BoardDims(3, 4), BoardDims(4, 4), BoardDims(3, 5)}) {
        const SignatureCounts counts = SignatureCounts::build(ClueSet(dims), 2);
        CHECK(counts.solutions() == count_hamiltonian_paths(dims));
        const auto mn = static_cast<unsigned>(dims.cell_count());
        for (int trial = 0; trial < 100; ++trial) {
            const Cell a = cell_at(dims, static_cast<int>(rng() % mn));
            Cell b = a;
            while (b == a) b = cell_at(dims, static_cast<int>(rng() % mn));
            const int va = 1 + static_cast<int>(rng() % mn);
            int vb = va;
            while (vb == va) vb = 1 + static_cast<int>(rng() % mn);
            const ClueSet pair(dims, {{a, va}, {b, vb}});
            CHECK(counts.pair(a, va, b, vb) == solve(pair).count);
            CHECK(counts.pair(b, vb, a, va) == counts.pair(a, va, b, vb));
            CHECK(counts.single(a, va) == solve(ClueSet(dims, {{a, va}})).count);
        }
    }
}

TEST_CASE("anchored pair search") {
    const BoardDims dims(4, 4);
    const AnchoredSearchResult r = anchored_pair_search(ClueSet(dims, {{{0, 0}, 1}}));
    CHECK(r.solutions == solve(ClueSet(dims, {{{0, 0}, 1}})).count);
    CHECK(r.defining_sets > 0);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == 3);
    CHECK(defines_puzzle(*r.witness));
}
