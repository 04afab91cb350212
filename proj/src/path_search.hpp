#pragma once

// Bitboard backtracking over a path in value order. Internal to the library.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stop_token>
#include <vector>

#include "numbrix/model.hpp"

namespace numbrix::detail {

using Mask = std::uint64_t;

constexpr Mask bit(int index) noexcept { return Mask{1} << index; }

// Shift helpers that treat a shift by 64 or more as shifting everything out.
constexpr Mask shl(Mask m, int by) noexcept { return by >= 64 ? 0 : m << by; }
constexpr Mask shr(Mask m, int by) noexcept { return by >= 64 ? 0 : m >> by; }

class Bitboard {
public:
    explicit Bitboard(BoardDims dims);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int total() const noexcept { return total_; }
    Mask full() const noexcept { return full_; }
    Mask white() const noexcept { return white_; }
    Mask adjacent(int index) const noexcept { return adj_[static_cast<std::size_t>(index)]; }

    // Cells whose up/down/left/right neighbour lies in `m`.
    Mask below_of(Mask m) const noexcept { return shl(m, cols_) & full_; }
    Mask above_of(Mask m) const noexcept { return shr(m, cols_); }
    Mask right_of(Mask m) const noexcept { return (m << 1) & not_first_col_; }
    Mask left_of(Mask m) const noexcept { return (m >> 1) & not_last_col_; }
    Mask grow(Mask m) const noexcept { return m | below_of(m) | above_of(m) | right_of(m) | left_of(m); }

    int distance(int a, int b) const noexcept {
        const int dr = a / cols_ - b / cols_;
        const int dc = a % cols_ - b % cols_;
        return (dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc);
    }

private:
    int rows_;
    int cols_;
    int total_;
    Mask full_ = 0;
    Mask white_ = 0;
    Mask not_first_col_ = 0;
    Mask not_last_col_ = 0;
    std::array<Mask, 64> adj_{};
};

// A partial path, one cell index per value starting from value 1.
using Prefix = std::vector<std::int8_t>;

class PathSearch {
public:
    // Throws CapacityError above 64 cells.
    explicit PathSearch(const ClueSet& clues);

    int total() const noexcept { return board_.total(); }

    // Deterministic list of disjoint subtrees covering the whole search.
    // Expands level by level until at least `target` units exist.
    std::vector<Prefix> split(std::size_t target);

    // Depth-first search below `prefix`. `sink(values)` returns false to stop.
    // Returns false when stopped by the sink or by the stop token.
    template <class Sink>
    bool run(const Prefix& prefix, Sink& sink, std::stop_token stop) {
        stop_ = std::move(stop);
        cancelled_ = false;
        load(prefix);
        return dfs(sink);
    }

    bool cancelled() const noexcept { return cancelled_; }

private:
    void load(const Prefix& prefix);
    void reset() noexcept;
    void advance(int cell) noexcept {
        unvisited_ &= ~bit(cell);
        values_[static_cast<std::size_t>(cell)] = ++value_;
        head_ = cell;
    }
    void retreat(int cell, int previous_head) noexcept {
        values_[static_cast<std::size_t>(cell)] = 0;
        unvisited_ |= bit(cell);
        --value_;
        head_ = previous_head;
    }
    Mask candidates() const noexcept;
    bool viable() const noexcept;

    template <class Sink>
    bool dfs(Sink& sink) {
        if (unvisited_ == 0) {
            return sink(std::span<const int>(values_.data(), static_cast<std::size_t>(board_.total())));
        }
        if ((++nodes_ & 0x3FFF) == 0 && stop_.stop_requested()) {
            cancelled_ = true;
            return false;
        }
        Mask next = candidates();
        while (next != 0) {
            const int cell = std::countr_zero(next);
            next &= next - 1;
            const int previous = head_;
            advance(cell);
            const bool keep_going = !viable() || dfs(sink);
            retreat(cell, previous);
            if (!keep_going) return false;
        }
        return true;
    }

    Bitboard board_;
    std::array<int, 66> clue_cell_of_value_{};  // -1 when the value is not a clue
    std::array<int, 66> next_clue_after_{};     // smallest clue value > v, 0 if none
    Mask clue_mask_ = 0;
    int end_cell_ = -1;                         // cell of the last value when clued
    std::vector<int> starts_;

    Mask unvisited_ = 0;
    int head_ = -1;
    int value_ = 0;
    std::array<int, 64> values_{};
    std::uint64_t nodes_ = 0;
    bool cancelled_ = false;
    std::stop_token stop_;
};

}  // namespace numbrix::detail
