#include "numbrix/model.hpp"

#include <string>

#include "numbrix/errors.hpp"

namespace numbrix {

namespace {

std::string describe(Cell cell) {
    return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

}  // namespace

Solution::Solution(BoardDims dims, std::vector<int> values) : dims_(dims), values_(std::move(values)) {
    if (!is_valid_solution(dims_, values_)) {
        throw DomainError("values do not form a solution");
    }
}

Solution Solution::trusted(BoardDims dims, std::vector<int> values) {
    return Solution(dims, std::move(values), true);
}

std::vector<Cell> Solution::path() const {
    std::vector<Cell> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out[static_cast<std::size_t>(values_[i] - 1)] = cell_at(dims_, static_cast<int>(i));
    }
    return out;
}

ClueSet::ClueSet(BoardDims dims, std::map<Cell, int> assignments)
    : dims_(dims), assignments_(std::move(assignments)) {
    const int total = dims_.cell_count();
    std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
    for (const auto& [cell, value] : assignments_) {
        if (!in_bounds(dims_, cell)) {
            throw DomainError("clue cell " + describe(cell) + " is outside the board");
        }
        if (value < 1 || value > total) {
            throw DomainError("clue value " + std::to_string(value) + " at " + describe(cell) +
                              " is outside 1.." + std::to_string(total));
        }
        if (seen[static_cast<std::size_t>(value)]) {
            throw DomainError("clue value " + std::to_string(value) + " appears twice");
        }
        seen[static_cast<std::size_t>(value)] = true;
    }
}

std::optional<int> ClueSet::value_at(Cell cell) const {
    if (auto it = assignments_.find(cell); it != assignments_.end()) return it->second;
    return std::nullopt;
}

ClueSet ClueSet::with(Cell cell, int value) const {
    if (assignments_.contains(cell)) {
        throw DomainError("cell " + describe(cell) + " already carries a clue");
    }
    auto next = assignments_;
    next.emplace(cell, value);
    return ClueSet(dims_, std::move(next));
}

bool is_valid_solution(BoardDims dims, std::span<const int> values) {
    const int total = dims.cell_count();
    if (values.size() != static_cast<std::size_t>(total)) {
        throw DomainError("expected " + std::to_string(total) + " values, got " +
                          std::to_string(values.size()));
    }
    std::vector<int> where(static_cast<std::size_t>(total) + 1, -1);
    for (int i = 0; i < total; ++i) {
        const int v = values[static_cast<std::size_t>(i)];
        if (v < 1 || v > total || where[static_cast<std::size_t>(v)] != -1) return false;
        where[static_cast<std::size_t>(v)] = i;
    }
    for (int v = 1; v < total; ++v) {
        if (!adjacent(cell_at(dims, where[static_cast<std::size_t>(v)]),
                      cell_at(dims, where[static_cast<std::size_t>(v) + 1]))) {
            return false;
        }
    }
    return true;
}

Solution reverse_solution(const Solution& s) {
    const int top = s.dims().cell_count() + 1;
    std::vector<int> out(s.values());
    for (int& v : out) v = top - v;
    return Solution::trusted(s.dims(), std::move(out));
}

ClueSet reverse_clues(const ClueSet& clues) {
    const int top = clues.dims().cell_count() + 1;
    std::map<Cell, int> out;
    for (const auto& [cell, value] : clues.assignments()) out.emplace(cell, top - value);
    return ClueSet(clues.dims(), std::move(out));
}

bool matches(const Solution& s, const ClueSet& clues) {
    if (!(s.dims() == clues.dims())) throw DomainError("solution and clue set are on different boards");
    for (const auto& [cell, value] : clues.assignments()) {
        if (s.at(cell) != value) return false;
    }
    return true;
}

bool clue_screen(const ClueSet& clues) {
    const BoardDims dims = clues.dims();
    const bool both_odd = dims.rows % 2 == 1 && dims.cols % 2 == 1;
    const auto& a = clues.assignments();
    for (auto i = a.begin(); i != a.end(); ++i) {
        if (both_odd && ((i->second % 2 == 1) != (cell_color(i->first) == Color::White))) return false;
        for (auto j = std::next(i); j != a.end(); ++j) {
            const int gap = i->second > j->second ? i->second - j->second : j->second - i->second;
            const int dist = manhattan_distance(i->first, j->first);
            if (gap < dist || (gap - dist) % 2 != 0) return false;
        }
    }
    return true;
}

}  // namespace numbrix
