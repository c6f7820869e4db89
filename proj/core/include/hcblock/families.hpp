#pragma once

#include <hcblock/coloring.hpp>
#include <hcblock/graph.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hcblock {

// Level-wise regular block graph rooted at a single central vertex: k[i]
// blocks of size m[i]+1 attached per parent at level i. k[0] >= 2 (a lone
// branch would have no alternation partner), k[i] >= 1, m[i] >= 2.
struct LevelWiseG1 {
    std::vector<int> k, m;
};

// Level-wise regular block graph rooted at a central block of central+1
// vertices; otherwise as LevelWiseG1 with k[0] >= 1.
struct LevelWiseGm1 {
    int central = 1;
    std::vector<int> k, m;
};

// Symmetric block graph: every block a clique of size p+1, every cut vertex
// in exactly k+1 blocks, end vertices at equal eccentricity, diameter d.
// Structurally a level-wise regular graph with uniform parameters.
struct SymmetricBlocks {
    int p = 2, k = 1, d = 2;
};

// k arms, each a chain of m cliques K_p sharing the central vertex.
struct ExtendedStarOfBlocks {
    int m = 2, p = 3, k = 3;
};

// k copies of K_p identified at one shared vertex.
struct OnePointUnion {
    int p = 2, k = 2;
};

struct StarFamily {
    int k = 2;
};

struct PathFamily {
    int n = 2;
};

using FamilySpec = std::variant<LevelWiseG1, LevelWiseGm1, SymmetricBlocks,
                                ExtendedStarOfBlocks, OnePointUnion, StarFamily, PathFamily>;

std::string family_name(const FamilySpec& spec);

// Canonical construction: vertex 0 is the central vertex (or 0..m the central
// block), then BFS level by level with each parent's child blocks contiguous.
Graph gen_family(const FamilySpec& spec);

// Exact evaluation of the family's closed-form span. For families whose
// theory prerequisites can fail (paths, two-branch corners) the value is the
// generic lower bound; FamilyReport.agreement is the ground-truth signal.
long long family_hc_formula(const FamilySpec& spec);

// The explicit ordering used to attain the closed form, expressed against the
// canonical vertex numbering of gen_family.
Ordering family_ordering(const FamilySpec& spec);

struct FamilyReport {
    Graph graph;
    long long formula_hc = 0;
    long long bound_hc = 0;
    Ordering ordering;
    ColoringCertificate certificate;
    bool agreement = false; // certificate valid and span == formula == bound
    bool caveat = false;    // theory prerequisites not met
    std::string caveat_reason;
};

FamilyReport family_report(const FamilySpec& spec);

// One-point identification of the detour central vertices of the inputs.
// Every input must have a unique central vertex. The glued graph keeps the
// inputs' vertex order: shared center becomes 0, then each input's non-center
// vertices in id order.
Graph glue_at_centers(const std::vector<Graph>& parts);

// Concatenates component orderings (each passing the ordering criterion on
// its own graph) into an ordering of the glued graph: shared center first,
// the component realizing the smallest xi placed last.
Ordering glued_ordering(const std::vector<Graph>& parts, const std::vector<Ordering>& orderings);

// Span of the glued graph from component spans: sum(hc_i - xi_i)
// + 2 * sum_{i<j} (n_i-1)(n_j-1) + min xi_i.
long long glue_hc_formula(const std::vector<long long>& component_hc,
                          const std::vector<int>& orders, const std::vector<int>& xis);

// Seeded tree-of-cliques generator for property tests: repeatedly attaches a
// clique of random size (2..max_clique, capped by the remaining budget) at a
// random existing vertex until exactly n_target vertices exist. Deterministic
// for a fixed seed across platforms.
Graph random_block_graph(std::uint64_t seed, int n_target, int max_clique);

} // namespace hcblock
