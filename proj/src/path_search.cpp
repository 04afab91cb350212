#include "path_search.hpp"

#include <string>

#include "numbrix/errors.hpp"

namespace numbrix::detail {

Bitboard::Bitboard(BoardDims dims) : rows_(dims.rows), cols_(dims.cols), total_(dims.cell_count()) {
    if (total_ > 64) {
        throw CapacityError("exhaustive search supports at most 64 cells, board has " +
                            std::to_string(total_));
    }
    full_ = total_ == 64 ? ~Mask{0} : bit(total_) - 1;
    for (int i = 0; i < total_; ++i) {
        const int r = i / cols_;
        const int c = i % cols_;
        if ((r + c) % 2 == 0) white_ |= bit(i);
        if (c > 0) not_first_col_ |= bit(i);
        if (c + 1 < cols_) not_last_col_ |= bit(i);
        Mask a = 0;
        if (r > 0) a |= bit(i - cols_);
        if (r + 1 < rows_) a |= bit(i + cols_);
        if (c > 0) a |= bit(i - 1);
        if (c + 1 < cols_) a |= bit(i + 1);
        adj_[static_cast<std::size_t>(i)] = a;
    }
}

PathSearch::PathSearch(const ClueSet& clues) : board_(clues.dims()) {
    const int total = board_.total();
    clue_cell_of_value_.fill(-1);
    for (const auto& [cell, value] : clues.assignments()) {
        const int index = cell_index(clues.dims(), cell);
        clue_cell_of_value_[static_cast<std::size_t>(value)] = index;
        clue_mask_ |= bit(index);
    }
    int upcoming = 0;
    for (int v = total; v >= 0; --v) {
        next_clue_after_[static_cast<std::size_t>(v)] = upcoming;
        if (v >= 1 && clue_cell_of_value_[static_cast<std::size_t>(v)] >= 0) upcoming = v;
    }
    end_cell_ = clue_cell_of_value_[static_cast<std::size_t>(total)];

    if (const int first = clue_cell_of_value_[1]; first >= 0) {
        starts_.push_back(first);
    } else {
        for (int i = 0; i < total; ++i) {
            if ((clue_mask_ & bit(i)) == 0) starts_.push_back(i);
        }
    }
}

void PathSearch::reset() noexcept {
    unvisited_ = board_.full();
    head_ = -1;
    value_ = 0;
    values_.fill(0);
}

void PathSearch::load(const Prefix& prefix) {
    reset();
    for (const auto cell : prefix) advance(cell);
}

Mask PathSearch::candidates() const noexcept {
    const int clue_cell = clue_cell_of_value_[static_cast<std::size_t>(value_ + 1)];
    if (clue_cell >= 0) return board_.adjacent(head_) & unvisited_ & bit(clue_cell);
    return board_.adjacent(head_) & unvisited_ & ~clue_mask_;
}

bool PathSearch::viable() const noexcept {
    const Mask open = unvisited_;
    if (open == 0) return true;

    if (const int w = next_clue_after_[static_cast<std::size_t>(value_)]; w != 0) {
        const int gap = w - value_;
        const int dist = board_.distance(head_, clue_cell_of_value_[static_cast<std::size_t>(w)]);
        if (dist > gap || ((gap - dist) & 1) != 0) return false;
    }

    // The rest of the path alternates colours starting opposite the head.
    const int remaining = std::popcount(open);
    const Mask head_side = (board_.white() & bit(head_)) != 0 ? board_.white() : ~board_.white();
    if (std::popcount(open & ~head_side) != (remaining + 1) / 2) return false;

    // Every open cell needs two ways in/out unless it ends the path.
    const Mask avail = open | bit(head_);
    const Mask a = board_.below_of(avail);
    const Mask b = board_.above_of(avail);
    const Mask c = board_.right_of(avail);
    const Mask d = board_.left_of(avail);
    if ((open & ~(a | b | c | d)) != 0) return false;
    const Mask two = (a & b) | (a & c) | (a & d) | (b & c) | (b & d) | (c & d);
    if (const Mask lone = open & ~two; lone != 0) {
        if ((lone & (lone - 1)) != 0) return false;
        if (end_cell_ >= 0 && lone != bit(end_cell_)) return false;
    }

    Mask reach = board_.adjacent(head_) & open;
    Mask before = 0;
    while (reach != before) {
        before = reach;
        reach = board_.grow(reach) & open;
    }
    return reach == open;
}

std::vector<Prefix> PathSearch::split(std::size_t target) {
    std::vector<Prefix> frontier;
    for (const int start : starts_) {
        reset();
        advance(start);
        if (viable()) frontier.push_back(Prefix{static_cast<std::int8_t>(start)});
    }
    // Level-order expansion of prefixes listed in DFS order keeps DFS order.
    constexpr std::size_t kMaxDepth = 24;
    for (std::size_t depth = 1; depth < kMaxDepth && frontier.size() < target; ++depth) {
        std::vector<Prefix> next;
        bool grew = false;
        for (const Prefix& prefix : frontier) {
            if (static_cast<int>(prefix.size()) == board_.total()) {
                next.push_back(prefix);
                continue;
            }
            grew = true;
            load(prefix);
            Mask moves = candidates();
            while (moves != 0) {
                const int cell = std::countr_zero(moves);
                moves &= moves - 1;
                const int previous = head_;
                advance(cell);
                if (viable()) {
                    Prefix child = prefix;
                    child.push_back(static_cast<std::int8_t>(cell));
                    next.push_back(std::move(child));
                }
                retreat(cell, previous);
            }
        }
        frontier = std::move(next);
        if (!grew) break;
    }
    return frontier;
}

}  // namespace numbrix::detail
