#pragma once

#include <hcblock/coloring.hpp>
#include <hcblock/graph.hpp>

#include <cstdint>
#include <vector>

namespace hcblock {

// Exhaustive simple-path search. Works on arbitrary connected graphs, so it
// can cross-check the block-path formula. Guarded: n above max_n raises
// Error(size_guard) with the estimated state count.
struct DetourSearchResult {
    int value = 0;
    std::vector<int> path; // one longest u-v path
    std::uint64_t explored = 0;
};

DetourSearchResult brute_detour_distance(const Graph& g, int u, int v, int max_n = 15);

// Longest simple path from u to every target in one sweep; cheaper than
// per-pair calls when a whole row is needed.
std::vector<int> brute_detour_row(const Graph& g, int u, int max_n = 15);

// Minimal span over colorings whose nondecreasing color order matches the
// given ordering: c(u_j) = max_{i<j} c(u_i) + max(0, n-1-D(u_i,u_j)).
long long min_span_for_ordering(const std::vector<std::vector<int>>& detour,
                                const Ordering& o);
std::vector<long long> greedy_colors_for_ordering(const std::vector<std::vector<int>>& detour,
                                                  const Ordering& o);

// Exact hamiltonian chromatic number by prefix search over all orderings.
// Every coloring induces an ordering, so the minimum over orderings of the
// greedy span is exact. Default guard n <= 9; n <= 11 is tolerable with an
// explicit override.
struct HcSearchResult {
    long long value = 0;
    std::vector<long long> witness; // per-vertex colors of one optimal coloring
    Ordering ordering;              // the ordering realizing the witness
    std::uint64_t explored = 0;
};

HcSearchResult exact_hc(const Graph& g, int max_n = 9);

} // namespace hcblock
