#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcblock {

// Failure taxonomy shared across the library. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        parse,             // malformed input text
        validation,        // structurally invalid input (loop, duplicate edge, bad parameters)
        disconnected,
        not_block_graph,
        size_guard,        // search space larger than the configured limit
        missing_color,
        not_sdb,
        internal,
    };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Simple undirected connected graph over dense vertex ids 0..n-1.
// Adjacency lists are sorted. Instances are immutable after construction and
// safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    bool has_edge(int u, int v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, lexicographic
};

// Builds a graph from an explicit edge list, validating simplicity and
// connectivity. Vertex count is 1 + max id unless n_hint is larger.
Graph graph_from_edges(const std::vector<std::pair<int, int>>& edges, int n_hint = 0);

// Parses the edge-list format: one edge per line as two base-10 vertex ids
// separated by whitespace; '#' starts a comment line; blank lines ignored.
Graph parse_graph(std::string_view text);

// Inverse of parse_graph: one edge per line, sorted lexicographically.
std::string write_edge_list(const Graph& g);

// Blocks (maximal 2-connected subgraphs, bridges included as K2) and cut
// vertices. Blocks are sorted vertex sets, listed in lexicographic order so
// block ids are stable regardless of traversal order.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;            // sorted
    std::vector<char> is_cut;                 // size n
    std::vector<std::vector<int>> blocks_of;  // per vertex: ids of blocks containing it, sorted
    std::vector<std::vector<int>> block_cuts; // per block: cut vertices inside it, sorted

    int block_of_noncut(int v) const { return blocks_of[v].front(); }
};

BlockDecomposition block_decomposition(const Graph& g);

// True iff every block induces a complete subgraph.
bool is_block_graph(const Graph& g, const BlockDecomposition& d);
bool is_block_graph(const Graph& g);

} // namespace hcblock
