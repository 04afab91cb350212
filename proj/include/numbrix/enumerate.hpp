#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stop_token>
#include <vector>

#include "numbrix/model.hpp"

namespace numbrix {

// Bitboard search: boards with more cells than this raise CapacityError.
inline constexpr int kMaxSearchCells = 64;

inline constexpr std::size_t kRetainAll = std::numeric_limits<std::size_t>::max();

struct SearchOptions {
    // Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    // Called between work units with (finished, total). May be called from
    // any worker, but never concurrently.
    std::function<void(std::size_t, std::size_t)> progress;
    // Checked between branch expansions; a stopped search throws Cancelled.
    std::stop_token stop;
};

unsigned resolve_threads(const SearchOptions& options) noexcept;

// Counts the solutions matching `clues`. With `count_cap`, counting stops once
// that many are found (outcome.capped is then set, and the search runs in a
// fixed sequential order). The first `retain` solutions in canonical order
// among those counted are returned.
SolveOutcome solve(const ClueSet& clues, std::optional<std::uint64_t> count_cap = std::nullopt,
                   std::size_t retain = 0, const SearchOptions& options = {});

// Exactly one matching solution.
bool defines_puzzle(const ClueSet& clues);

// Directed Hamiltonian paths, i.e. solutions of the empty puzzle.
std::uint64_t count_hamiltonian_paths(BoardDims dims, const SearchOptions& options = {});

// Undirected Hamiltonian circuits of the grid graph.
std::uint64_t count_hamiltonian_circuits(BoardDims dims, const SearchOptions& options = {});

// Each circuit once, as the cell-index sequence starting at (0,0) and
// heading to its smaller-indexed neighbour on the circuit.
void for_each_hamiltonian_circuit(BoardDims dims,
                                  const std::function<void(std::span<const int>)>& visit,
                                  const SearchOptions& options = {});

// Streams every solution exactly once in canonical order. Solutions are
// produced in batches grouped by the top-left value, so at most one batch is
// held in memory.
void all_solutions(BoardDims dims, const std::function<void(const Solution&)>& visit,
                   const SearchOptions& options = {});

// Unordered parallel visitation of every solution matching `clues`.
// `visit(worker, values)` is called with worker < resolve_threads(options);
// a given worker index is never used by two threads at once, so per-worker
// accumulators need no locking.
void for_each_solution(const ClueSet& clues,
                       const std::function<void(unsigned, std::span<const int>)>& visit,
                       const SearchOptions& options = {});

}  // namespace numbrix
