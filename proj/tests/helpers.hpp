#pragma once

#include <hcblock/families.hpp>
#include <hcblock/graph.hpp>

#include <cstdint>
#include <vector>

namespace hcblock::testing {

inline Graph from_edges(std::vector<std::pair<int, int>> e) { return graph_from_edges(e); }

inline Graph path_graph(int n) { return gen_family(PathFamily{n}); }
inline Graph star_graph(int k) { return gen_family(StarFamily{k}); }

inline Graph clique_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(std::move(e));
}

// One-point union of three triangles at vertex 0.
inline Graph three_triangles() {
    return from_edges({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
}

struct SuiteParams {
    std::uint64_t seed;
    int n_target;
    int max_clique;
};

// The 200-graph random suite shared by the property tests and the acceptance
// run: 150 small graphs (n 5..7) and 50 larger ones (n 8..12).
inline std::vector<SuiteParams> random_suite_schedule() {
    std::vector<SuiteParams> out;
    for (int s = 1; s <= 150; ++s)
        out.push_back({static_cast<std::uint64_t>(s), 5 + s % 3, 2 + s % 3});
    for (int s = 151; s <= 200; ++s)
        out.push_back({static_cast<std::uint64_t>(s), 8 + s % 5, 2 + s % 4});
    return out;
}

inline Graph suite_graph(const SuiteParams& sp) {
    return random_block_graph(sp.seed, sp.n_target, sp.max_clique);
}

} // namespace hcblock::testing
