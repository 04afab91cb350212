#include "numbrix/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "numbrix/errors.hpp"
#include "path_search.hpp"

namespace numbrix {

namespace {

constexpr std::size_t kUnitsTarget = 512;

// Keeps the `limit` lexicographically smallest value arrays offered.
class SmallestSolutions {
public:
    explicit SmallestSolutions(std::size_t limit) : limit_(limit) {}

    void offer(std::span<const int> values) {
        if (limit_ == 0) return;
        if (limit_ == kRetainAll) {
            kept_.emplace_back(values.begin(), values.end());
            return;
        }
        if (kept_.size() < limit_) {
            kept_.emplace_back(values.begin(), values.end());
            std::push_heap(kept_.begin(), kept_.end());
        } else if (std::lexicographical_compare(values.begin(), values.end(), kept_.front().begin(),
                                                kept_.front().end())) {
            std::pop_heap(kept_.begin(), kept_.end());
            kept_.back().assign(values.begin(), values.end());
            std::push_heap(kept_.begin(), kept_.end());
        }
    }

    void absorb(SmallestSolutions&& other) {
        for (auto& values : other.kept_) offer(values);
    }

    std::vector<std::vector<int>> take_sorted() {
        std::sort(kept_.begin(), kept_.end());
        return std::move(kept_);
    }

private:
    std::size_t limit_;
    std::vector<std::vector<int>> kept_;
};

// Runs `units` across workers. `on_solution(worker, values)` returns false to
// stop that worker's current unit.
template <class OnSolution>
void execute(const ClueSet& clues, const std::vector<detail::Prefix>& units, unsigned workers,
             const SearchOptions& options, OnSolution&& on_solution) {
    std::atomic<std::size_t> cursor{0};
    std::mutex progress_mutex;
    std::size_t finished = 0;
    std::atomic<bool> cancelled{false};

    auto work = [&](unsigned worker) {
        detail::PathSearch search(clues);
        auto sink = [&](std::span<const int> values) { return on_solution(worker, values); };
        for (;;) {
            if (options.stop.stop_requested()) {
                cancelled = true;
                return;
            }
            const std::size_t i = cursor.fetch_add(1);
            if (i >= units.size()) return;
            search.run(units[i], sink, options.stop);
            if (search.cancelled()) {
                cancelled = true;
                return;
            }
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(++finished, units.size());
            }
        }
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    if (cancelled) throw Cancelled();
}

}  // namespace

unsigned resolve_threads(const SearchOptions& options) noexcept {
    if (options.threads != 0) return options.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

SolveOutcome solve(const ClueSet& clues, std::optional<std::uint64_t> count_cap, std::size_t retain,
                   const SearchOptions& options) {
    const BoardDims dims = clues.dims();
    detail::PathSearch splitter(clues);
    SolveOutcome outcome;
    if (!clue_screen(clues)) return outcome;
    if (count_cap && *count_cap == 0) {
        outcome.capped = true;
        return outcome;
    }
    const auto units = splitter.split(kUnitsTarget);

    auto finish = [&](SmallestSolutions& kept) {
        for (auto& values : kept.take_sorted()) {
            outcome.solutions.push_back(Solution::trusted(dims, std::move(values)));
        }
    };

    if (count_cap) {
        // Sequential in unit order so the counted solutions are reproducible.
        const std::uint64_t cap = *count_cap;
        SmallestSolutions kept(retain);
        std::uint64_t count = 0;
        detail::PathSearch search(clues);
        auto sink = [&](std::span<const int> values) {
            kept.offer(values);
            return ++count < cap;
        };
        std::size_t done = 0;
        for (const auto& unit : units) {
            if (options.stop.stop_requested()) throw Cancelled();
            const bool finished = search.run(unit, sink, options.stop);
            if (search.cancelled()) throw Cancelled();
            if (options.progress) options.progress(++done, units.size());
            if (!finished) break;
        }
        outcome.count = count;
        outcome.capped = count >= cap;
        finish(kept);
        return outcome;
    }

    const unsigned workers = std::min<unsigned>(resolve_threads(options),
                                                static_cast<unsigned>(std::max<std::size_t>(1, units.size())));
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<SmallestSolutions> kept(workers, SmallestSolutions(retain));
    execute(clues, units, workers, options, [&](unsigned worker, std::span<const int> values) {
        ++counts[worker];
        kept[worker].offer(values);
        return true;
    });
    for (unsigned w = 0; w < workers; ++w) {
        outcome.count += counts[w];
        if (w > 0) kept[0].absorb(std::move(kept[w]));
    }
    finish(kept[0]);
    return outcome;
}

bool defines_puzzle(const ClueSet& clues) {
    return solve(clues, 2, 0).count == 1;
}

std::uint64_t count_hamiltonian_paths(BoardDims dims, const SearchOptions& options) {
    return solve(ClueSet(dims), std::nullopt, 0, options).count;
}

namespace {

// Circuits through (0,0) -> (0,1) -> ... -> (1,0) -> (0,0), each exactly once.
std::optional<ClueSet> circuit_clues(BoardDims dims) {
    if (dims.rows < 2 || dims.cols < 2) return std::nullopt;
    return ClueSet(dims, {{Cell{0, 0}, 1}, {Cell{0, 1}, 2}, {Cell{1, 0}, dims.cell_count()}});
}

}  // namespace

std::uint64_t count_hamiltonian_circuits(BoardDims dims, const SearchOptions& options) {
    const auto clues = circuit_clues(dims);
    if (!clues) return 0;
    return solve(*clues, std::nullopt, 0, options).count;
}

void for_each_hamiltonian_circuit(BoardDims dims, const std::function<void(std::span<const int>)>& visit,
                                  const SearchOptions& options) {
    const auto clues = circuit_clues(dims);
    if (!clues) return;
    const SolveOutcome outcome = solve(*clues, std::nullopt, kRetainAll, options);
    std::vector<std::vector<int>> sequences;
    sequences.reserve(outcome.solutions.size());
    for (const Solution& s : outcome.solutions) {
        std::vector<int> order(s.values().size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[static_cast<std::size_t>(s.values()[i] - 1)] = static_cast<int>(i);
        }
        sequences.push_back(std::move(order));
    }
    std::sort(sequences.begin(), sequences.end());
    for (const auto& seq : sequences) visit(seq);
}

void all_solutions(BoardDims dims, const std::function<void(const Solution&)>& visit,
                   const SearchOptions& options) {
    detail::Bitboard capacity_check(dims);
    for (int corner = 1; corner <= dims.cell_count(); ++corner) {
        const ClueSet batch(dims, {{Cell{0, 0}, corner}});
        const SolveOutcome outcome = solve(batch, std::nullopt, kRetainAll, options);
        for (const Solution& s : outcome.solutions) visit(s);
    }
}

void for_each_solution(const ClueSet& clues, const std::function<void(unsigned, std::span<const int>)>& visit,
                       const SearchOptions& options) {
    detail::PathSearch splitter(clues);
    if (!clue_screen(clues)) return;
    const auto units = splitter.split(kUnitsTarget);
    execute(clues, units, resolve_threads(options), options, [&](unsigned worker, std::span<const int> values) {
        visit(worker, values);
        return true;
    });
}

}  // namespace numbrix
