#include <hcblock/detour.hpp>

#include <algorithm>
#include <limits>
#include <queue>

namespace hcblock {

const char* to_string(BranchRelation r) {
    switch (r) {
        case BranchRelation::same: return "same";
        case BranchRelation::different: return "different";
        case BranchRelation::opposite: return "opposite";
        case BranchRelation::involves_center: return "involves-center";
    }
    return "?";
}

namespace {

void require_block_graph(const Graph& g, const BlockDecomposition& d) {
    if (!is_block_graph(g, d))
        throw Error(Error::Kind::not_block_graph,
                    "graph has a block that is not a clique");
}

// Block-cut tree with block nodes 0..B-1 and cut nodes B..B+C-1.
struct BcTree {
    int block_count = 0;
    std::vector<int> cut_index;              // per vertex, -1 if not a cut vertex
    std::vector<int> cut_vertex;             // per cut node offset, the vertex id
    std::vector<std::vector<int>> adjacency; // node -> nodes
    std::vector<int> weight;                 // per block node, |B|-1

    int nodes() const { return block_count + static_cast<int>(cut_vertex.size()); }
    bool is_block(int node) const { return node < block_count; }
    int cut_node(int v) const { return block_count + cut_index[v]; }
};

BcTree build_tree(const Graph& g, const BlockDecomposition& d) {
    BcTree t;
    t.block_count = static_cast<int>(d.blocks.size());
    t.cut_index.assign(g.n, -1);
    for (int v : d.cut_vertices) {
        t.cut_index[v] = static_cast<int>(t.cut_vertex.size());
        t.cut_vertex.push_back(v);
    }
    t.adjacency.assign(t.nodes(), {});
    t.weight.assign(t.block_count, 0);
    for (int b = 0; b < t.block_count; ++b) {
        t.weight[b] = static_cast<int>(d.blocks[b].size()) - 1;
        for (int v : d.block_cuts[b]) {
            t.adjacency[b].push_back(t.cut_node(v));
            t.adjacency[t.cut_node(v)].push_back(b);
        }
    }
    return t;
}

int node_of(const BcTree& t, const BlockDecomposition& d, int v) {
    return t.cut_index[v] >= 0 ? t.cut_node(v) : d.block_of_noncut(v);
}

} // namespace

DetourProfile DetourProfile::analyze(const Graph& g) {
    return analyze(g, block_decomposition(g));
}

DetourProfile DetourProfile::analyze(const Graph& g, const BlockDecomposition& d) {
    require_block_graph(g, d);
    const int n = g.n;

    DetourProfile p;
    p.g_ = g;
    p.decomp_ = d;

    BcTree tree = build_tree(g, d);
    const int nodes = tree.nodes();

    // All-pairs detour distances: one tree sweep per source, accumulating
    // block weights along tree paths.
    p.dist_.assign(n, std::vector<int>(n, 0));
    std::vector<int> value(nodes);
    std::vector<int> stack;
    std::vector<char> seen(nodes);
    for (int u = 0; u < n; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        int start = node_of(tree, d, u);
        value[start] = tree.is_block(start) ? tree.weight[start] : 0;
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree.adjacency[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    value[y] = value[x] + (tree.is_block(y) ? tree.weight[y] : 0);
                    stack.push_back(y);
                }
        }
        auto& row = p.dist_[u];
        for (int v = 0; v < n; ++v) row[v] = value[node_of(tree, d, v)];
        row[u] = 0;
    }

    p.ecc_.assign(n, 0);
    for (int u = 0; u < n; ++u)
        p.ecc_[u] = *std::max_element(p.dist_[u].begin(), p.dist_[u].end());
    p.diameter_ = *std::max_element(p.ecc_.begin(), p.ecc_.end());

    int min_ecc = *std::min_element(p.ecc_.begin(), p.ecc_.end());
    p.central_.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (p.ecc_[v] == min_ecc) {
            p.central_[v] = 1;
            p.center_.push_back(v);
        }
    p.omega_ = static_cast<int>(p.center_.size());

    // The center is a single vertex or the vertex set of one block; locate
    // that block when omega >= 2.
    int center_block = -1;
    if (p.omega_ >= 2) {
        for (int b = 0; b < tree.block_count && center_block < 0; ++b)
            if (d.blocks[b] == p.center_) center_block = b;
        if (center_block < 0)
            throw Error(Error::Kind::internal,
                        "detour center is neither a vertex nor a block");
    }

    p.level_.assign(n, std::numeric_limits<int>::max());
    for (int v = 0; v < n; ++v)
        for (int w : p.center_) p.level_[v] = std::min(p.level_[v], p.dist_[w][v]);
    p.total_level_ = 0;
    for (int v = 0; v < n; ++v) p.total_level_ += p.level_[v];

    const int w0 = p.center_.front();
    if (p.omega_ == 1) {
        int best = std::numeric_limits<int>::max();
        for (int b : d.blocks_of[w0]) best = std::min(best, tree.weight[b]);
        p.xi_ = best;
    } else {
        p.xi_ = 0;
    }

    // Root the block-cut tree at the center and label branches. Children are
    // visited in node-id order, so branch ids follow (anchor id, block id).
    int root;
    bool root_is_lone_block = false;
    if (p.omega_ >= 2) {
        root = center_block;
    } else if (tree.cut_index[w0] >= 0) {
        root = tree.cut_node(w0);
    } else {
        root = d.block_of_noncut(w0); // single-branch corner: w is not a cut vertex
        root_is_lone_block = true;
    }

    std::vector<int> node_branch(nodes, -1), node_anchor(nodes, -1), node_parent(nodes, -1);
    std::fill(seen.begin(), seen.end(), 0);
    seen[root] = 1;
    node_anchor[root] = w0;
    p.branch_count_ = 0;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        auto children = tree.adjacency[x];
        std::sort(children.begin(), children.end());
        for (int y : children) {
            if (seen[y]) continue;
            seen[y] = 1;
            node_parent[y] = x;
            if (node_branch[x] >= 0) {
                node_branch[y] = node_branch[x];
                node_anchor[y] = node_anchor[x];
            } else if (tree.is_block(y)) {
                // block hanging off a central vertex: a new branch
                node_branch[y] = p.branch_count_++;
                node_anchor[y] = tree.is_block(x) ? w0 : tree.cut_vertex[x - tree.block_count];
            } else {
                // cut vertex inside the center block (or the center itself)
                int v = tree.cut_vertex[y - tree.block_count];
                node_branch[y] = p.central_[v] ? -1 : node_branch[x];
                node_anchor[y] = p.central_[v] ? v : node_anchor[x];
            }
            bfs.push(y);
        }
    }

    p.branch_.assign(n, -1);
    p.anchor_.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (p.central_[v]) {
            p.anchor_[v] = v;
            continue;
        }
        int node = node_of(tree, d, v);
        p.branch_[v] = node_branch[node];
        p.anchor_[v] = node_anchor[node];
    }
    if (root_is_lone_block) {
        // All non-central vertices share the single branch induced by w's block.
        p.branch_count_ = (n > 1) ? 1 : 0;
        for (int v = 0; v < n; ++v)
            if (!p.central_[v]) {
                p.branch_[v] = 0;
                p.anchor_[v] = w0;
            }
    }

    // Blocks on the path from each vertex to its anchor (inclusive); their
    // vertex union is the ancestor set used by phi.
    p.up_blocks_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (p.central_[v]) continue;
        int node = node_of(tree, d, v);
        while (node != -1 && node_branch[node] >= 0) {
            if (tree.is_block(node)) p.up_blocks_[v].push_back(node);
            node = node_parent[node];
        }
        if (root_is_lone_block) p.up_blocks_[v].push_back(root);
    }

    return p;
}

std::vector<int> DetourProfile::branch_sizes() const {
    std::vector<int> sizes(branch_count_, 0);
    for (int v = 0; v < n(); ++v)
        if (branch_[v] >= 0) ++sizes[branch_[v]];
    return sizes;
}

BranchRelation DetourProfile::relation(int u, int v) const {
    if (central_[u] || central_[v]) return BranchRelation::involves_center;
    if (branch_[u] == branch_[v]) return BranchRelation::same;
    return anchor_[u] == anchor_[v] ? BranchRelation::different : BranchRelation::opposite;
}

std::pair<int, int> DetourProfile::phi_delta(int u, int v) const {
    std::vector<char> mark(n(), 0);
    if (central_[u]) {
        mark[u] = 1;
    } else {
        for (int b : up_blocks_[u])
            for (int x : decomp_.blocks[b]) mark[x] = 1;
    }
    int phi = 0;
    if (central_[v]) {
        // common ancestor can only be v itself, level 0
    } else {
        for (int b : up_blocks_[v])
            for (int x : decomp_.blocks[b])
                if (mark[x]) phi = std::max(phi, level_[x]);
    }
    int delta = (omega_ >= 2 && relation(u, v) == BranchRelation::opposite) ? omega_ - 1 : 0;
    return {phi, delta};
}

int detour_distance(const Graph& g, const BlockDecomposition& d, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw Error(Error::Kind::validation, "vertex id out of range");
    require_block_graph(g, d);
    if (u == v) return 0;

    BcTree tree = build_tree(g, d);
    int source = node_of(tree, d, u);
    int target = node_of(tree, d, v);

    // BFS on the block-cut tree from source, then sum block weights on the path.
    std::vector<int> parent(tree.nodes(), -2);
    parent[source] = -1;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[target] == -2) {
        int x = q.front();
        q.pop();
        for (int y : tree.adjacency[x])
            if (parent[y] == -2) {
                parent[y] = x;
                q.push(y);
            }
    }
    int sum = 0;
    for (int x = target; x != -1; x = parent[x])
        if (tree.is_block(x)) sum += tree.weight[x];
    return sum;
}

} // namespace hcblock
