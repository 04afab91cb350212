#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "numbrix/model.hpp"

namespace numbrix {

// Text form of a board: a header line "m n", then m lines of n integers,
// 0 for a blank square. Lines starting with '#' are comments.
struct PuzzleDocument {
    BoardDims dims;
    std::vector<int> entries;  // row-major, 0 = blank

    ClueSet clues() const;

    static PuzzleDocument from_clues(const ClueSet& clues);
    static PuzzleDocument from_solution(const Solution& s);

    friend bool operator==(const PuzzleDocument&, const PuzzleDocument&) = default;
};

// Throws ParseError naming the 1-based line and column.
PuzzleDocument parse_puzzle(std::string_view text);
std::string format_puzzle(const PuzzleDocument& doc);

}  // namespace numbrix
