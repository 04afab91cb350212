#pragma once

// Brute-force reference enumerators for small boards. Deliberately naive and
// independent of the library search: plain DFS over cells with no pruning.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

struct Board {
    int rows;
    int cols;
    int size() const { return rows * cols; }
};

inline bool touching(const Board& b, int i, int j) {
    const int dr = std::abs(i / b.cols - j / b.cols);
    const int dc = std::abs(i % b.cols - j % b.cols);
    return dr + dc == 1;
}

// Every filling of the board, as row-major value arrays, in no particular order.
inline void each_filling(const Board& b, const std::function<void(const std::vector<int>&)>& visit) {
    const int n = b.size();
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> walk = [&](int at, int v) {
        values[static_cast<std::size_t>(at)] = v;
        if (v == n) {
            visit(values);
        } else {
            for (int next = 0; next < n; ++next) {
                if (values[static_cast<std::size_t>(next)] == 0 && touching(b, at, next)) walk(next, v + 1);
            }
        }
        values[static_cast<std::size_t>(at)] = 0;
    };
    for (int start = 0; start < n; ++start) walk(start, 1);
}

// Fillings carrying every (cell index, value) clue, sorted.
inline std::vector<std::vector<int>> fillings_matching(const Board& b, const std::map<int, int>& clues) {
    std::vector<std::vector<int>> out;
    each_filling(b, [&](const std::vector<int>& values) {
        for (const auto& [cell, value] : clues) {
            if (values[static_cast<std::size_t>(cell)] != value) return;
        }
        out.push_back(values);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Permutation check over all mn! arrangements; only sensible up to 3x3.
inline std::vector<std::vector<int>> permutation_solutions(const Board& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.size()));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> where(perm.size() + 1);
        for (std::size_t i = 0; i < perm.size(); ++i) where[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        bool ok = true;
        for (int v = 1; v < b.size() && ok; ++v) ok = touching(b, where[static_cast<std::size_t>(v)], where[static_cast<std::size_t>(v) + 1]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Undirected Hamiltonian circuits: closed fillings, divided by the 2mn
// choices of start and direction.
inline long long circuit_count(const Board& b) {
    if (b.size() < 4) return 0;
    long long closed = 0;
    each_filling(b, [&](const std::vector<int>& values) {
        int first = -1;
        int last = -1;
        for (int i = 0; i < b.size(); ++i) {
            if (values[static_cast<std::size_t>(i)] == 1) first = i;
            if (values[static_cast<std::size_t>(i)] == b.size()) last = i;
        }
        if (touching(b, first, last)) ++closed;
    });
    return closed / (2LL * b.size());
}

}  // namespace oracle
