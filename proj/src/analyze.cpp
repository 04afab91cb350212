#include "numbrix/analyze.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "numbrix/construct.hpp"
#include "numbrix/errors.hpp"

namespace numbrix {

int exhaustive_cell_limit(int k) noexcept {
    constexpr int entries = static_cast<int>(std::size(kExhaustiveCellLimit));
    return kExhaustiveCellLimit[k < entries ? k : entries - 1];
}

SignatureCounts SignatureCounts::build(const ClueSet& base, int depth, const SearchOptions& options) {
    if (depth < 1 || depth > 2) throw DomainError("signature depth must be 1 or 2");
    SignatureCounts out(base);
    out.depth_ = depth;
    const int mn = out.dims_.cell_count();
    const auto cells = static_cast<std::size_t>(mn);
    const std::size_t square = cells * cells;
    if (depth == 2) {
        out.pair_base_.assign(square, 0);
        std::size_t offset = 0;
        for (int a = 0; a < mn; ++a) {
            for (int b = a + 1; b < mn; ++b) {
                out.pair_base_[static_cast<std::size_t>(a) * cells + static_cast<std::size_t>(b)] = offset;
                offset += square;
            }
        }
    }
    const std::size_t pair_entries = depth == 2 ? cells * (cells - 1) / 2 * square : 0;

    const unsigned workers = resolve_threads(options);
    std::vector<std::uint64_t> found(workers, 0);
    std::vector<std::vector<std::uint32_t>> singles(workers);
    std::vector<std::vector<std::uint32_t>> pairs(workers);
    for_each_solution(
        base,
        [&](unsigned w, std::span<const int> values) {
            auto& s = singles[w];
            auto& p = pairs[w];
            if (s.empty()) {
                s.assign(square, 0);
                p.assign(pair_entries, 0);
            }
            ++found[w];
            for (std::size_t a = 0; a < cells; ++a) {
                const auto va = static_cast<std::size_t>(values[a] - 1);
                ++s[a * cells + va];
                if (depth == 1) continue;
                const std::size_t* bases = &out.pair_base_[a * cells];
                for (std::size_t b = a + 1; b < cells; ++b) {
                    ++p[bases[b] + va * cells + static_cast<std::size_t>(values[b] - 1)];
                }
            }
        },
        options);

    out.singles_.assign(square, 0);
    out.pairs_.assign(pair_entries, 0);
    for (unsigned w = 0; w < workers; ++w) {
        out.solutions_ += found[w];
        if (singles[w].empty()) continue;
        for (std::size_t i = 0; i < square; ++i) out.singles_[i] += singles[w][i];
        for (std::size_t i = 0; i < pair_entries; ++i) out.pairs_[i] += pairs[w][i];
    }
    return out;
}

std::size_t SignatureCounts::pair_slot(int a, int b) const {
    return pair_base_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dims_.cell_count()) +
                      static_cast<std::size_t>(b)];
}

std::uint32_t SignatureCounts::single(Cell cell, int value) const {
    const int mn = dims_.cell_count();
    if (!in_bounds(dims_, cell) || value < 1 || value > mn) throw DomainError("signature outside the board");
    return singles_[static_cast<std::size_t>(cell_index(dims_, cell) * mn + value - 1)];
}

std::uint32_t SignatureCounts::pair(Cell a, int value_a, Cell b, int value_b) const {
    if (depth_ < 2) throw DomainError("pair counts were not collected");
    const int mn = dims_.cell_count();
    if (!in_bounds(dims_, a) || !in_bounds(dims_, b) || value_a < 1 || value_a > mn || value_b < 1 ||
        value_b > mn) {
        throw DomainError("signature outside the board");
    }
    int ia = cell_index(dims_, a);
    int ib = cell_index(dims_, b);
    if (ia == ib) throw DomainError("a pair signature needs two distinct cells");
    if (ia > ib) {
        std::swap(ia, ib);
        std::swap(value_a, value_b);
    }
    return pairs_[pair_slot(ia, ib) + static_cast<std::size_t>((value_a - 1) * mn + value_b - 1)];
}

std::optional<ClueSet> SignatureCounts::first_unique_single() const {
    const int mn = dims_.cell_count();
    for (int i = 0; i < mn * mn; ++i) {
        if (singles_[static_cast<std::size_t>(i)] == 1) {
            return base_.with(cell_at(dims_, i / mn), i % mn + 1);
        }
    }
    return std::nullopt;
}

std::optional<ClueSet> SignatureCounts::first_unique_pair() const {
    if (depth_ < 2) return std::nullopt;
    const int mn = dims_.cell_count();
    for (int a = 0; a < mn; ++a) {
        for (int b = a + 1; b < mn; ++b) {
            const std::size_t slot = pair_slot(a, b);
            for (int i = 0; i < mn * mn; ++i) {
                if (pairs_[slot + static_cast<std::size_t>(i)] == 1) {
                    return base_.with(cell_at(dims_, a), i / mn + 1).with(cell_at(dims_, b), i % mn + 1);
                }
            }
        }
    }
    return std::nullopt;
}

std::uint64_t SignatureCounts::unique_pairs() const {
    return static_cast<std::uint64_t>(std::count(pairs_.begin(), pairs_.end(), 1u));
}

namespace {

// k >= 3: hash the sorted k-tuples of (cell, value) signatures, 12 bits each.
std::optional<ClueSet> find_defining_set_hashed(BoardDims dims, int k, const SearchOptions& options) {
    const int mn = dims.cell_count();
    if (k > 5) throw CapacityError("clue sets larger than 5 are not searched exhaustively");
    using Table = std::unordered_map<std::uint64_t, std::uint32_t>;
    const unsigned workers = resolve_threads(options);
    std::vector<Table> tables(workers);
    std::vector<std::vector<int>> scratch(workers, std::vector<int>(static_cast<std::size_t>(k)));
    for_each_solution(
        ClueSet(dims),
        [&](unsigned w, std::span<const int> values) {
            auto& idx = scratch[w];
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
            for (;;) {
                std::uint64_t key = 0;
                for (int i = 0; i < k; ++i) {
                    const int cell = idx[static_cast<std::size_t>(i)];
                    key = (key << 12) |
                          static_cast<std::uint64_t>(cell * mn + values[static_cast<std::size_t>(cell)] - 1);
                }
                auto& slot = tables[w][key];
                if (slot < 2) ++slot;
                int i = k - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == mn - k + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        },
        options);

    for (unsigned w = 1; w < workers; ++w) {
        for (const auto& [key, count] : tables[w]) {
            auto& slot = tables[0][key];
            slot = std::min<std::uint32_t>(2, slot + count);
        }
    }
    std::optional<std::uint64_t> best;
    for (const auto& [key, count] : tables[0]) {
        if (count == 1 && (!best || key < *best)) best = key;
    }
    if (!best) return std::nullopt;
    std::map<Cell, int> clues;
    std::uint64_t key = *best;
    for (int i = 0; i < k; ++i) {
        const int signature = static_cast<int>(key & 0xFFF);
        key >>= 12;
        clues.emplace(cell_at(dims, signature / mn), signature % mn + 1);
    }
    return ClueSet(dims, std::move(clues));
}

void check_capacity(BoardDims dims, int k) {
    if (dims.cell_count() > exhaustive_cell_limit(k)) {
        throw CapacityError("exhaustive " + std::to_string(k) + "-clue search is limited to " +
                            std::to_string(exhaustive_cell_limit(k)) + " cells, board has " +
                            std::to_string(dims.cell_count()));
    }
}

ClueSet transposed(const ClueSet& clues) {
    std::map<Cell, int> out;
    for (const auto& [cell, value] : clues.assignments()) out.emplace(Cell{cell.col, cell.row}, value);
    return ClueSet(clues.dims().transposed(), std::move(out));
}

}  // namespace

std::optional<ClueSet> find_defining_set(BoardDims dims, int k, const SearchOptions& options) {
    if (k < 0) throw DomainError("clue count must be non-negative");
    if (k > dims.cell_count()) return std::nullopt;
    check_capacity(dims, k);
    if (k == 0) {
        if (solve(ClueSet(dims), 2, 0, options).count == 1) return ClueSet(dims);
        return std::nullopt;
    }
    if (k <= 2) {
        const auto counts = SignatureCounts::build(ClueSet(dims), k, options);
        return k == 1 ? counts.first_unique_single() : counts.first_unique_pair();
    }
    return find_defining_set_hashed(dims, k, options);
}

bool verify_no_k_defines(BoardDims dims, int k, const SearchOptions& options) {
    return !find_defining_set(dims, k, options).has_value();
}

MinCluesReport min_clue_number(BoardDims dims, int k_max, const SearchOptions& options) {
    if (dims.rows > dims.cols) {
        MinCluesReport flipped = min_clue_number(dims.transposed(), k_max, options);
        flipped.dims = dims;
        if (flipped.witness) flipped.witness = transposed(*flipped.witness);
        return flipped;
    }
    MinCluesReport report;
    report.dims = dims;
    report.searched_up_to = k_max;
    const ClueSet candidate = minimal_clues(dims);
    for (int k = 0; k <= k_max; ++k) {
        std::optional<ClueSet> witness;
        if (candidate.size() == static_cast<std::size_t>(k) && defines_puzzle(candidate)) {
            witness = candidate;
        } else {
            witness = find_defining_set(dims, k, options);
        }
        if (witness) {
            report.min_clues = k;
            report.witness = std::move(witness);
            return report;
        }
        report.insufficient.push_back(true);
    }
    return report;
}

namespace {

MaxNondefReport nondef_exhaustive(BoardDims dims, const SearchOptions& options) {
    MaxNondefReport report;
    report.dims = dims;
    report.method = NondefMethod::Exhaustive;
    std::vector<Solution> all;
    all_solutions(dims, [&](const Solution& s) { all.push_back(s); }, options);
    int best = -1;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            int agree = 0;
            for (std::size_t c = 0; c < all[i].values().size(); ++c) {
                agree += all[i].values()[c] == all[j].values()[c] ? 1 : 0;
            }
            if (agree > best) {
                best = agree;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (best < 0) return report;
    std::map<Cell, int> clues;
    for (int c = 0; c < dims.cell_count(); ++c) {
        const auto u = static_cast<std::size_t>(c);
        if (all[best_i].values()[u] == all[best_j].values()[u]) {
            clues.emplace(cell_at(dims, c), all[best_i].values()[u]);
        }
    }
    report.max_nondefining = best;
    report.witness = ClueSet(dims, std::move(clues));
    report.witness_solutions = solve(*report.witness, std::nullopt, 0, options).count;
    return report;
}

MaxNondefReport nondef_witness(BoardDims dims, const SearchOptions& options) {
    MaxNondefReport report;
    report.dims = dims;
    report.method = NondefMethod::Witness;
    if (dims.cell_count() == 1) return report;
    ClueSet witness(dims);
    try {
        witness = max_nondefining_clues(dims);
    } catch (const NoSuchSetError&) {
        // Even strip: only the empty set fails to define.
    }
    report.witness_solutions = solve(witness, std::nullopt, 0, options).count;
    if (report.witness_solutions < 2) {
        throw std::logic_error("constructed non-defining clue set has " +
                               std::to_string(report.witness_solutions) + " solutions");
    }
    report.max_nondefining = static_cast<int>(witness.size());
    report.witness = std::move(witness);
    return report;
}

}  // namespace

MaxNondefReport max_nondefining_number(BoardDims dims, NondefMethod method, const SearchOptions& options) {
    if (method == NondefMethod::Auto) {
        method = dims.cell_count() <= kMaxNondefExhaustiveCells ? NondefMethod::Exhaustive : NondefMethod::Witness;
    }
    return method == NondefMethod::Exhaustive ? nondef_exhaustive(dims, options) : nondef_witness(dims, options);
}

AnchoredSearchResult anchored_pair_search(const ClueSet& anchor, const SearchOptions& options) {
    AnchoredSearchResult result{anchor, 0, 0, std::nullopt};
    const auto counts = SignatureCounts::build(anchor, 2, options);
    result.solutions = counts.solutions();
    // Pairs involving an anchor cell repeat the anchor; skip them by
    // counting only pairs of cells outside it.
    const BoardDims dims = anchor.dims();
    const int mn = dims.cell_count();
    for (int a = 0; a < mn; ++a) {
        const Cell ca = cell_at(dims, a);
        if (anchor.value_at(ca)) continue;
        for (int b = a + 1; b < mn; ++b) {
            const Cell cb = cell_at(dims, b);
            if (anchor.value_at(cb)) continue;
            for (int va = 1; va <= mn; ++va) {
                for (int vb = 1; vb <= mn; ++vb) {
                    if (counts.pair(ca, va, cb, vb) != 1) continue;
                    ++result.defining_sets;
                    if (!result.witness) result.witness = anchor.with(ca, va).with(cb, vb);
                }
            }
        }
    }
    return result;
}

}  // namespace numbrix
