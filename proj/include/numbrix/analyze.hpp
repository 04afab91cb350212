#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "numbrix/enumerate.hpp"
#include "numbrix/model.hpp"

namespace numbrix {

// Largest board (in cells) on which each clue count k is searched
// exhaustively; index k, the last entry applies to all larger k.
inline constexpr int kExhaustiveCellLimit[] = {64, 49, 36, 25, 20};
int exhaustive_cell_limit(int k) noexcept;

// Occurrence counts of (cell, value) signatures, and of unordered pairs of
// them, over the solutions matching a base clue set.
class SignatureCounts {
public:
    // depth is 1 (singles) or 2 (singles and pairs).
    static SignatureCounts build(const ClueSet& base, int depth, const SearchOptions& options = {});

    BoardDims dims() const noexcept { return dims_; }
    std::uint64_t solutions() const noexcept { return solutions_; }
    std::uint32_t single(Cell cell, int value) const;
    std::uint32_t pair(Cell a, int value_a, Cell b, int value_b) const;

    // First signature (in cell, value order) seen in exactly one solution.
    std::optional<ClueSet> first_unique_single() const;
    std::optional<ClueSet> first_unique_pair() const;
    std::uint64_t unique_pairs() const;

private:
    SignatureCounts(const ClueSet& base) : base_(base), dims_(base.dims()) {}
    std::size_t pair_slot(int a, int b) const;

    ClueSet base_;
    BoardDims dims_;
    int depth_ = 1;
    std::uint64_t solutions_ = 0;
    std::vector<std::uint32_t> singles_;  // cell * mn + (value - 1)
    std::vector<std::uint32_t> pairs_;    // grouped by first cell
    std::vector<std::size_t> pair_base_;  // offset of each (a, b) group, a < b
};

// Some k-clue set with exactly one matching solution, if any exists.
// Clue universe: (cell, value) pairs occurring in at least one solution.
// Throws CapacityError above exhaustive_cell_limit(k).
std::optional<ClueSet> find_defining_set(BoardDims dims, int k, const SearchOptions& options = {});

// True iff no k-clue set defines a puzzle on the board.
bool verify_no_k_defines(BoardDims dims, int k, const SearchOptions& options = {});

struct MinCluesReport {
    BoardDims dims;
    int searched_up_to = 0;
    std::optional<int> min_clues;  // empty: more than searched_up_to
    std::optional<ClueSet> witness;
    // insufficient[k]: no k-clue set defines, for every k below the minimum.
    std::vector<bool> insufficient;
};

MinCluesReport min_clue_number(BoardDims dims, int k_max, const SearchOptions& options = {});

enum class NondefMethod { Auto, Exhaustive, Witness };

struct MaxNondefReport {
    BoardDims dims;
    NondefMethod method = NondefMethod::Auto;  // the method actually used
    // Empty when every clue set defines the puzzle (the 1x1 board).
    std::optional<int> max_nondefining;
    std::optional<ClueSet> witness;
    std::uint64_t witness_solutions = 0;
};

// Auto is exhaustive up to kMaxNondefExhaustiveCells cells, witness mode
// beyond. Exhaustive: the largest set of cells on which two distinct
// solutions agree. Witness: checks that the constructed mn - 2 set has
// exactly two solutions; mn - 1 clues always define.
inline constexpr int kMaxNondefExhaustiveCells = 12;
MaxNondefReport max_nondefining_number(BoardDims dims, NondefMethod method = NondefMethod::Auto,
                                       const SearchOptions& options = {});

// Clue sets made of `anchor` plus two more clues that define a puzzle,
// restricted to solutions matching `anchor`. Used for partial searches on
// boards too large for the full k = 3 sweep.
struct AnchoredSearchResult {
    ClueSet anchor;
    std::uint64_t solutions = 0;
    std::uint64_t defining_sets = 0;
    std::optional<ClueSet> witness;
};

AnchoredSearchResult anchored_pair_search(const ClueSet& anchor, const SearchOptions& options = {});

}  // namespace numbrix
