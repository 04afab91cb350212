#include "numbrix/grid.hpp"

#include <string>

#include "numbrix/errors.hpp"

namespace numbrix {

BoardDims::BoardDims(int rows, int cols) : rows(rows), cols(cols) {
    if (rows < 1 || cols < 1) {
        throw DomainError("board dimensions must be positive, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    }
}

bool in_bounds(BoardDims dims, Cell cell) noexcept {
    return cell.row >= 0 && cell.row < dims.rows && cell.col >= 0 && cell.col < dims.cols;
}

std::vector<Cell> neighbors(BoardDims dims, Cell cell) {
    if (!in_bounds(dims, cell)) {
        throw DomainError("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                          ") is outside the board");
    }
    std::vector<Cell> out;
    out.reserve(4);
    if (cell.row > 0) out.push_back({cell.row - 1, cell.col});
    if (cell.row + 1 < dims.rows) out.push_back({cell.row + 1, cell.col});
    if (cell.col > 0) out.push_back({cell.row, cell.col - 1});
    if (cell.col + 1 < dims.cols) out.push_back({cell.row, cell.col + 1});
    return out;
}

std::pair<int, int> color_counts(BoardDims dims) noexcept {
    const int total = dims.cell_count();
    return {(total + 1) / 2, total / 2};
}

}  // namespace numbrix
