#pragma once

#include <utility>
#include <vector>

#include "numbrix/model.hpp"

namespace numbrix {

// A Hamiltonian circuit of the grid graph.
struct CyclicPath {
    BoardDims dims;
    std::vector<Cell> cells;
};

// Every cell exactly once, consecutive cells adjacent, last adjacent to first.
bool is_valid_cyclic_path(const CyclicPath& path);

enum class Corner { TopLeft, TopRight, BottomLeft, BottomRight };

// Horizontal zig-zag: sweep rows back and forth starting from `start`.
struct ZigZagSpec {
    Corner start = Corner::TopLeft;
};

Solution zigzag_solution(BoardDims dims, ZigZagSpec spec);

// The leftmost column of the zig-zag solution, given as clues.
ClueSet zigzag_clues(BoardDims dims, ZigZagSpec spec);

// Clockwise round the boundary from the top-left corner, then a row
// zig-zag through the interior back to the cell below the start. The board
// is transposed internally when only the column count is even. The result
// is in circuit canonical form (see for_each_hamiltonian_circuit).
// Throws NoCircuitError when both dimensions are odd or one of them is 1.
CyclicPath circular_path(BoardDims dims);

// A largest clue set that still admits exactly two solutions: mn - 2 clues
// for boards at least 2 wide in both directions (the two blanks form a
// diagonal pair in the top-left 2x2 block), the middle clue on an odd strip.
// Throws NoSuchSetError on 1x1 and on even-length strips.
ClueSet max_nondefining_clues(BoardDims dims);

// Four-row blocks used by minimal_clues: rows = 4 * blocks + remainder.
struct BlockLayout {
    int blocks = 0;
    int remainder = 0;
    // Value offset of each block (4 * cols * i); one extra entry when
    // remainder == 3, for the trailing partial block.
    std::vector<int> shifts;
};

BlockLayout block_layout(BoardDims dims);

// A small defining clue set: none on 1x1, one on a strip, two for 2 and 3
// rows, ceil(rows / 2) in the first column otherwise. The unique solution is
// the top-right zig-zag from three rows up.
ClueSet minimal_clues(BoardDims dims);

enum class Symmetry {
    Identity,
    FlipHorizontal,  // mirror left-right
    FlipVertical,    // mirror top-bottom
    Rotate180,
    Transpose,       // square boards only from here on
    AntiTranspose,
    Rotate90,        // clockwise
    Rotate270,
};

// Throws DomainError for the square-only symmetries on a non-square board.
Cell map_cell(BoardDims dims, Symmetry sym, Cell cell);
Solution apply_symmetry(const Solution& s, Symmetry sym);

// Where a single clue on a 3 x n board (n odd) lands after reduction into
// the top row, left of centre, value at most (3n + 1) / 2.
struct ClueReduction {
    bool flip_vertical = false;
    bool flip_horizontal = false;
    bool reversed = false;
    int value = 0;         // clue value after reduction
    int position = 0;      // 1-based column of the reduced clue
    int anchor = 0;        // largest odd position left of centre
    int anchor_value = 0;  // value the construction places at `anchor`
    int residual = 0;      // width of the board left for the two completions
};

// Throws DomainError for clues on a symmetry axis (middle row or column).
ClueReduction reduce_single_clue(int cols, Cell cell, int value);

// Two distinct solutions on the 3 x n board that both carry `value` at
// `cell`. Off the symmetry axes this uses the explicit pull-back paths;
// on an axis it mirrors a solution found by search.
// Throws DomainError for bad n or an out-of-range clue, InfeasibleError
// when the clue fails the parity screen.
std::pair<Solution, Solution> two_solutions_single_clue(int cols, Cell cell, int value);

}  // namespace numbrix
