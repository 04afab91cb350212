#include "numbrix/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "numbrix/enumerate.hpp"
#include "numbrix/errors.hpp"

namespace numbrix {

namespace {

// Builds values from a cell visiting order.
std::vector<int> label(BoardDims dims, const std::vector<Cell>& order) {
    std::vector<int> values(static_cast<std::size_t>(dims.cell_count()), 0);
    int next = 1;
    for (const Cell& c : order) values[static_cast<std::size_t>(cell_index(dims, c))] = next++;
    return values;
}

void require(bool condition, const char* what) {
    if (!condition) throw std::logic_error(std::string("construction invariant violated: ") + what);
}

ClueSet all_but(const Solution& s, const std::set<Cell>& blanks) {
    std::map<Cell, int> clues;
    for (int i = 0; i < s.dims().cell_count(); ++i) {
        const Cell c = cell_at(s.dims(), i);
        if (!blanks.contains(c)) clues.emplace(c, s.at(c));
    }
    return ClueSet(s.dims(), std::move(clues));
}

}  // namespace

bool is_valid_cyclic_path(const CyclicPath& path) {
    const BoardDims dims = path.dims;
    if (path.cells.size() != static_cast<std::size_t>(dims.cell_count()) || path.cells.size() < 4) return false;
    std::vector<bool> seen(path.cells.size(), false);
    for (std::size_t i = 0; i < path.cells.size(); ++i) {
        const Cell c = path.cells[i];
        if (!in_bounds(dims, c)) return false;
        auto idx = static_cast<std::size_t>(cell_index(dims, c));
        if (seen[idx]) return false;
        seen[idx] = true;
        if (!adjacent(c, path.cells[(i + 1) % path.cells.size()])) return false;
    }
    return true;
}

Solution zigzag_solution(BoardDims dims, ZigZagSpec spec) {
    const bool from_top = spec.start == Corner::TopLeft || spec.start == Corner::TopRight;
    const bool from_left = spec.start == Corner::TopLeft || spec.start == Corner::BottomLeft;
    std::vector<Cell> order;
    order.reserve(static_cast<std::size_t>(dims.cell_count()));
    for (int k = 0; k < dims.rows; ++k) {
        const int row = from_top ? k : dims.rows - 1 - k;
        const bool rightward = (k % 2 == 0) == from_left;
        for (int j = 0; j < dims.cols; ++j) order.push_back({row, rightward ? j : dims.cols - 1 - j});
    }
    return Solution(dims, label(dims, order));
}

ClueSet zigzag_clues(BoardDims dims, ZigZagSpec spec) {
    const Solution s = zigzag_solution(dims, spec);
    std::map<Cell, int> clues;
    for (int r = 0; r < dims.rows; ++r) clues.emplace(Cell{r, 0}, s.at({r, 0}));
    return ClueSet(dims, std::move(clues));
}

CyclicPath circular_path(BoardDims dims) {
    if (dims.rows < 2 || dims.cols < 2) throw NoCircuitError("a single row or column has no circuit");
    if (dims.rows % 2 == 1 && dims.cols % 2 == 1) {
        throw NoCircuitError("a board with both dimensions odd has no circuit");
    }
    const bool transpose = dims.rows % 2 == 1;
    const int m = transpose ? dims.cols : dims.rows;
    const int n = transpose ? dims.rows : dims.cols;

    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(m * n));
    for (int c = 0; c < n; ++c) cells.push_back({0, c});
    for (int r = 1; r < m; ++r) cells.push_back({r, n - 1});
    for (int c = n - 2; c >= 0; --c) cells.push_back({m - 1, c});
    // Interior rows m-2 .. 1 over columns 0 .. n-2, starting rightward.
    for (int r = m - 2, k = 0; r >= 1; --r, ++k) {
        for (int j = 0; j < n - 1; ++j) cells.push_back({r, k % 2 == 0 ? j : n - 2 - j});
    }

    if (transpose) {
        for (Cell& c : cells) c = {c.col, c.row};
        // Canonical form heads from (0,0) to (0,1); after transposing it heads to (1,0).
        std::reverse(cells.begin() + 1, cells.end());
    }
    CyclicPath path{dims, std::move(cells)};
    require(is_valid_cyclic_path(path), "circular path");
    return path;
}

ClueSet max_nondefining_clues(BoardDims dims) {
    if (dims.rows == 1 || dims.cols == 1) {
        const int length = dims.cell_count();
        if (length == 1 || length % 2 == 0) {
            throw NoSuchSetError("every nonempty clue set defines a " + std::to_string(dims.rows) + "x" +
                                 std::to_string(dims.cols) + " puzzle");
        }
        const int middle = (length - 1) / 2;
        const Cell cell = dims.rows == 1 ? Cell{0, middle} : Cell{middle, 0};
        return ClueSet(dims, {{cell, middle + 1}});
    }

    const int n = dims.cols;
    std::vector<int> values(static_cast<std::size_t>(dims.cell_count()), 0);
    auto put = [&](int row, int col, int v) { values[static_cast<std::size_t>(row * n + col)] = v; };
    // Top two rows: 1 2 / 4 3 around the corner, then a column zig-zag.
    // With more rows, an even n swaps the two rows so 2n closes row two.
    const bool swap_rows = dims.rows > 2 && n % 2 == 0;
    auto top = [&](int row) { return swap_rows ? 1 - row : row; };
    put(top(0), 0, 1);
    put(top(1), 0, 2);
    put(top(1), 1, 3);
    put(top(0), 1, 4);
    for (int c = 2; c < n; ++c) {
        put(top(c % 2 == 0 ? 0 : 1), c, 2 * c + 1);
        put(top(c % 2 == 0 ? 1 : 0), c, 2 * c + 2);
    }
    // Remaining rows: row zig-zag from the top right of the residual board.
    int next = 2 * n + 1;
    for (int r = 2, k = 0; r < dims.rows; ++r, ++k) {
        for (int j = 0; j < n; ++j) put(r, k % 2 == 0 ? n - 1 - j : j, next++);
    }
    const Solution filled(dims, std::move(values));
    const std::vector<Cell> path = filled.path();
    if (dims.rows > 2) require(path[static_cast<std::size_t>(2 * n - 1)] == Cell{1, n - 1}, "2n ends row two");
    return all_but(filled, {path[0], path[2]});
}

BlockLayout block_layout(BoardDims dims) {
    BlockLayout layout;
    layout.blocks = dims.rows / 4;
    layout.remainder = dims.rows % 4;
    const int shifts = layout.blocks + (layout.remainder == 3 ? 1 : 0);
    for (int i = 0; i < shifts; ++i) layout.shifts.push_back(4 * dims.cols * i);
    return layout;
}

ClueSet minimal_clues(BoardDims dims) {
    const int m = dims.rows;
    const int n = dims.cols;
    if (m * n == 1) return ClueSet(dims);
    if (m == 1 || n == 1) return ClueSet(dims, {{Cell{0, 0}, 1}});
    if (m == 2) return ClueSet(dims, {{Cell{0, 0}, 1}, {Cell{1, 0}, 2 * n}});

    const BlockLayout layout = block_layout(dims);
    std::map<Cell, int> clues;
    for (int i = 0; i < layout.blocks; ++i) {
        const int s = layout.shifts[static_cast<std::size_t>(i)];
        clues.emplace(Cell{4 * i + 1, 0}, s + n + 1);
        clues.emplace(Cell{4 * i + 2, 0}, s + 3 * n);
    }
    if (layout.remainder == 1 || layout.remainder == 2) {
        const int s_last = layout.shifts.back();
        clues.emplace(Cell{4 * layout.blocks, 0}, s_last + 5 * n);
    } else if (layout.remainder == 3) {
        const int s = layout.shifts.back();
        clues.emplace(Cell{m - 2, 0}, s + n + 1);
        clues.emplace(Cell{m - 1, 0}, s + 3 * n);
    }
    ClueSet out(dims, std::move(clues));
    // Every clue sits on the top-right zig-zag.
    require(matches(zigzag_solution(dims, {Corner::TopRight}), out), "clues lie on the top-right zig-zag");
    return out;
}

Cell map_cell(BoardDims dims, Symmetry sym, Cell c) {
    const int m = dims.rows;
    const int n = dims.cols;
    if (sym != Symmetry::Identity && sym != Symmetry::FlipHorizontal && sym != Symmetry::FlipVertical &&
        m != n) {
        throw DomainError("rotations and diagonal reflections need a square board");
    }
    switch (sym) {
        case Symmetry::Identity: return c;
        case Symmetry::FlipHorizontal: return {c.row, n - 1 - c.col};
        case Symmetry::FlipVertical: return {m - 1 - c.row, c.col};
        case Symmetry::Rotate180: return {m - 1 - c.row, n - 1 - c.col};
        case Symmetry::Transpose: return {c.col, c.row};
        case Symmetry::AntiTranspose: return {n - 1 - c.col, m - 1 - c.row};
        case Symmetry::Rotate90: return {c.col, m - 1 - c.row};
        case Symmetry::Rotate270: return {n - 1 - c.col, c.row};
    }
    return c;
}

Solution apply_symmetry(const Solution& s, Symmetry sym) {
    const BoardDims dims = s.dims();
    std::vector<int> out(s.values().size(), 0);
    for (int i = 0; i < dims.cell_count(); ++i) {
        const Cell target = map_cell(dims, sym, cell_at(dims, i));
        out[static_cast<std::size_t>(cell_index(dims, target))] = s.values()[static_cast<std::size_t>(i)];
    }
    return Solution::trusted(dims, std::move(out));
}

namespace {

void check_single_clue(int cols, Cell cell, int value) {
    if (cols < 3 || cols % 2 == 0) {
        throw DomainError("single-clue construction needs an odd column count of at least 3, got " +
                          std::to_string(cols));
    }
    const BoardDims dims(3, cols);
    const ClueSet clue(dims, {{cell, value}});
    if (!clue_screen(clue)) {
        throw InfeasibleError("value " + std::to_string(value) + " cannot sit on a square of that colour");
    }
}

bool on_symmetry_axis(int cols, Cell cell) {
    return cols == 3 || cell.row == 1 || cell.col == (cols - 1) / 2;
}

Symmetry axis_symmetry(int cols, Cell cell) {
    if (cell.row == 1) return Symmetry::FlipVertical;
    if (cell.col == (cols - 1) / 2) return Symmetry::FlipHorizontal;
    return cell.row == cell.col ? Symmetry::Transpose : Symmetry::AntiTranspose;
}

// Two solutions on 3 x n carrying `x` in the top row at 1-based column
// `anchor` (odd, left of centre).
std::pair<Solution, Solution> pull_back_pair(int n, int anchor, int x) {
    const BoardDims dims(3, n);
    std::vector<Cell> head;
    if (x < anchor) {
        // Row one from column anchor - x to the right edge, then a two-row
        // column zig-zag back that ends in the bottom row.
        const int first = anchor - x;
        for (int c = first; c < n; ++c) head.push_back({0, c});
        for (int c = n - 1, k = 0; c >= first; --c, ++k) {
            if (k % 2 == 0) {
                head.push_back({1, c});
                head.push_back({2, c});
            } else {
                head.push_back({2, c});
                head.push_back({1, c});
            }
        }
        require(head.back() == Cell{2, first}, "pull-back ends in the bottom row");

        // Residual 3 x first board, entered at its bottom-right square.
        std::vector<Cell> by_rows = head;
        for (int r = 2, k = 0; r >= 0; --r, ++k) {
            for (int j = 0; j < first; ++j) by_rows.push_back({r, k % 2 == 0 ? first - 1 - j : j});
        }
        std::vector<Cell> by_cols = head;
        for (int c = first - 1, k = 0; c >= 0; --c, ++k) {
            for (int j = 0; j < 3; ++j) by_cols.push_back({k % 2 == 0 ? 2 - j : j, c});
        }
        return {Solution(dims, label(dims, by_rows)), Solution(dims, label(dims, by_cols))};
    }

    // Start inside rows two and three: a column zig-zag over the first
    // (x - anchor) / 2 columns ending under the top-left corner.
    const int pulled = (x - anchor) / 2;
    for (int c = pulled - 1; c >= 0; --c) {
        if (c % 2 == 0) {
            head.push_back({2, c});
            head.push_back({1, c});
        } else {
            head.push_back({1, c});
            head.push_back({2, c});
        }
    }
    for (int c = 0; c < n; ++c) head.push_back({0, c});
    const int residual_left = pulled;
    const int width = n - pulled;
    require(width >= 2, "residual board at least two wide");

    // Residual 2 x width board in rows two and three, entered top right.
    std::vector<Cell> by_rows = head;
    for (int j = n - 1; j >= residual_left; --j) by_rows.push_back({1, j});
    for (int j = residual_left; j < n; ++j) by_rows.push_back({2, j});
    std::vector<Cell> by_cols = head;
    for (int c = n - 1, k = 0; c >= residual_left; --c, ++k) {
        by_cols.push_back({k % 2 == 0 ? 1 : 2, c});
        by_cols.push_back({k % 2 == 0 ? 2 : 1, c});
    }
    return {Solution(dims, label(dims, by_rows)), Solution(dims, label(dims, by_cols))};
}

}  // namespace

ClueReduction reduce_single_clue(int cols, Cell cell, int value) {
    check_single_clue(cols, cell, value);
    if (on_symmetry_axis(cols, cell)) {
        throw DomainError("clue lies on a symmetry axis of the board");
    }
    const int n = cols;
    ClueReduction r;
    r.flip_vertical = cell.row == 2;
    r.flip_horizontal = cell.col > (n - 1) / 2;
    const int col = r.flip_horizontal ? n - 1 - cell.col : cell.col;
    r.reversed = value > (3 * n + 1) / 2;
    r.value = r.reversed ? 3 * n + 1 - value : value;
    r.position = col + 1;
    r.anchor = (n + 1) / 2 - 1;
    if (r.anchor % 2 == 0) --r.anchor;

    if (r.position <= r.anchor) {
        r.anchor_value = r.value + (r.anchor - r.position);
    } else {
        // Only the last position can lie right of the anchor, and then the
        // anchor's value plus one lands on it.
        require(r.position == r.anchor + 1 && (n - 1) / 2 == r.anchor + 1, "clue right of anchor");
        r.anchor_value = r.value - 1;
    }
    require(r.anchor_value % 2 == 1 && r.anchor_value >= 1, "anchor value odd and positive");
    require(r.anchor_value <= 2 * n - 4 + r.anchor, "anchor value within the pull-back range");
    r.residual = r.anchor_value < r.anchor ? r.anchor - r.anchor_value : n - (r.anchor_value - r.anchor) / 2;
    require(r.residual >= 2, "residual board admits two completions");
    return r;
}

std::pair<Solution, Solution> two_solutions_single_clue(int cols, Cell cell, int value) {
    check_single_clue(cols, cell, value);
    const BoardDims dims(3, cols);
    const ClueSet clue(dims, {{cell, value}});

    if (on_symmetry_axis(cols, cell)) {
        SolveOutcome found = solve(clue, 1, 1);
        if (found.solutions.empty()) {
            throw InfeasibleError("no solution carries value " + std::to_string(value) + " there");
        }
        Solution first = std::move(found.solutions.front());
        Solution second = apply_symmetry(first, axis_symmetry(cols, cell));
        require(matches(second, clue) && !(first == second), "mirror keeps the clue and differs");
        return {std::move(first), std::move(second)};
    }

    const ClueReduction r = reduce_single_clue(cols, cell, value);
    auto [a, b] = pull_back_pair(cols, r.anchor, r.anchor_value);
    auto restore = [&](Solution s) {
        if (r.reversed) s = reverse_solution(s);
        if (r.flip_horizontal) s = apply_symmetry(s, Symmetry::FlipHorizontal);
        if (r.flip_vertical) s = apply_symmetry(s, Symmetry::FlipVertical);
        return s;
    };
    Solution first = restore(std::move(a));
    Solution second = restore(std::move(b));
    require(matches(first, clue) && matches(second, clue), "both solutions carry the clue");
    require(!(first == second), "the two completions differ");
    return {std::move(first), std::move(second)};
}

}  // namespace numbrix
