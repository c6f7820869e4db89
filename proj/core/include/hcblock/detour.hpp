#pragma once

#include <hcblock/graph.hpp>

#include <utility>
#include <vector>

namespace hcblock {

// Classification of a vertex pair by the branches they live in. Branches hang
// off detour central vertices: "different" means distinct branches at the same
// central vertex, "opposite" means branches at distinct central vertices.
enum class BranchRelation { same, different, opposite, involves_center };

const char* to_string(BranchRelation r);

// Detour metrics of a connected block graph: the all-pairs detour distance
// table, eccentricities, the detour center, per-vertex levels, branch
// structure and the ancestor machinery behind phi/delta.
//
// Everything is computed once in analyze(); the object is immutable afterwards
// and safe to query from multiple threads.
class DetourProfile {
public:
    static DetourProfile analyze(const Graph& g, const BlockDecomposition& d);
    static DetourProfile analyze(const Graph& g);

    const Graph& graph() const { return g_; }
    const BlockDecomposition& decomposition() const { return decomp_; }

    int n() const { return g_.n; }
    int distance(int u, int v) const { return dist_[u][v]; }
    const std::vector<std::vector<int>>& distance_table() const { return dist_; }
    int eccentricity(int v) const { return ecc_[v]; }
    int detour_diameter() const { return diameter_; }

    const std::vector<int>& center() const { return center_; }
    bool is_central(int v) const { return central_[v] != 0; }
    int omega() const { return omega_; }
    int xi() const { return xi_; }

    int level(int v) const { return level_[v]; }
    const std::vector<int>& levels() const { return level_; }
    long long total_level() const { return total_level_; }

    // Branch ids are dense 0..branch_count()-1; central vertices map to -1.
    int branch_of(int v) const { return branch_[v]; }
    int branch_count() const { return branch_count_; }
    // Central vertex anchoring v's branch; v itself when central.
    int anchor_of(int v) const { return anchor_[v]; }
    std::vector<int> branch_sizes() const;

    BranchRelation relation(int u, int v) const;

    // phi: maximum level over common ancestors of u and v, where the
    // ancestors of a vertex are all vertices lying on at least one path from
    // it to its nearest central vertex (equivalently, the union of the blocks
    // on that block path). delta: omega-1 for opposite-branch pairs when
    // omega >= 2, else 0.
    std::pair<int, int> phi_delta(int u, int v) const;

private:
    DetourProfile() = default;

    Graph g_;
    BlockDecomposition decomp_;
    std::vector<std::vector<int>> dist_;
    std::vector<int> ecc_;
    std::vector<int> center_;
    std::vector<char> central_;
    std::vector<int> level_;
    std::vector<int> branch_;
    std::vector<int> anchor_;
    std::vector<std::vector<int>> up_blocks_; // blocks on the path to the anchor, inclusive
    int omega_ = 0;
    int xi_ = 0;
    int diameter_ = 0;
    int branch_count_ = 0;
    long long total_level_ = 0;
};

// Detour distance between u and v as the sum of (|B|-1) over the blocks on
// the unique u-v block path. Requires a block graph; use the oracle for
// general graphs.
int detour_distance(const Graph& g, const BlockDecomposition& d, int u, int v);

} // namespace hcblock
