#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "numbrix/grid.hpp"

namespace numbrix {

// A complete filling of the board with 1..mn where consecutive values are
// side-to-side adjacent. Stored as one value per cell, row-major.
class Solution {
public:
    // Validates; throws DomainError if `values` is not a solution on `dims`.
    Solution(BoardDims dims, std::vector<int> values);

    // Skips validation. For producers that guarantee validity (the search).
    static Solution trusted(BoardDims dims, std::vector<int> values);

    BoardDims dims() const noexcept { return dims_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int at(Cell cell) const { return values_[static_cast<std::size_t>(cell_index(dims_, cell))]; }

    // Cell holding each value: result[v - 1] is the cell of value v.
    std::vector<Cell> path() const;

    friend bool operator==(const Solution&, const Solution&) = default;
    // Canonical order: lexicographic on the row-major value array.
    friend bool operator<(const Solution& a, const Solution& b) { return a.values_ < b.values_; }

private:
    Solution(BoardDims dims, std::vector<int> values, bool)
        : dims_(dims), values_(std::move(values)) {}

    BoardDims dims_;
    std::vector<int> values_;
};

// A partial assignment of values to cells. Construction checks only
// well-formedness; feasibility is the solver's business.
class ClueSet {
public:
    explicit ClueSet(BoardDims dims) : dims_(dims) {}
    // Throws DomainError on out-of-bounds cells, out-of-range or repeated values.
    ClueSet(BoardDims dims, std::map<Cell, int> assignments);

    BoardDims dims() const noexcept { return dims_; }
    const std::map<Cell, int>& assignments() const noexcept { return assignments_; }
    std::size_t size() const noexcept { return assignments_.size(); }
    bool empty() const noexcept { return assignments_.empty(); }
    std::optional<int> value_at(Cell cell) const;

    // Returns a copy with one more clue; throws DomainError if it would be malformed.
    ClueSet with(Cell cell, int value) const;

    friend bool operator==(const ClueSet&, const ClueSet&) = default;

private:
    BoardDims dims_;
    std::map<Cell, int> assignments_;
};

struct SolveOutcome {
    std::uint64_t count = 0;
    // When set, the search stopped at the cap and `count` is a lower bound.
    bool capped = false;
    std::vector<Solution> solutions;
};

// Throws DomainError when values.size() != mn.
bool is_valid_solution(BoardDims dims, std::span<const int> values);

// Maps each value v to mn + 1 - v.
Solution reverse_solution(const Solution& s);
ClueSet reverse_clues(const ClueSet& clues);

// Throws DomainError when the boards differ.
bool matches(const Solution& s, const ClueSet& clues);

// Necessary conditions for a clue set to have a solution: pairwise
// distance/parity law, and odd values on White when both dimensions are odd.
bool clue_screen(const ClueSet& clues);

}  // namespace numbrix
