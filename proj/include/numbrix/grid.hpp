#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace numbrix {

// Rectangular board of `rows` x `cols` squares. No rows <= cols convention
// is imposed here; callers that want it transpose.
struct BoardDims {
    int rows = 1;
    int cols = 1;

    BoardDims() = default;
    BoardDims(int rows, int cols);  // throws DomainError unless both >= 1

    int cell_count() const noexcept { return rows * cols; }
    BoardDims transposed() const { return {cols, rows}; }

    friend bool operator==(const BoardDims&, const BoardDims&) = default;
};

// 0-based coordinates, origin at the top-left square.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Color { White, Black };

bool in_bounds(BoardDims dims, Cell cell) noexcept;

// Row-major index of an in-bounds cell.
inline int cell_index(BoardDims dims, Cell cell) noexcept { return cell.row * dims.cols + cell.col; }
inline Cell cell_at(BoardDims dims, int index) noexcept { return {index / dims.cols, index % dims.cols}; }

// Side-to-side neighbours in the order up, down, left, right.
std::vector<Cell> neighbors(BoardDims dims, Cell cell);

// Checkerboard colouring; the top-left square is White.
constexpr Color cell_color(Cell cell) noexcept {
    return ((cell.row + cell.col) % 2 == 0) ? Color::White : Color::Black;
}

// (white, black) square counts.
std::pair<int, int> color_counts(BoardDims dims) noexcept;

constexpr int manhattan_distance(Cell a, Cell b) noexcept {
    const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
    const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
    return dr + dc;
}

constexpr bool adjacent(Cell a, Cell b) noexcept { return manhattan_distance(a, b) == 1; }

}  // namespace numbrix
