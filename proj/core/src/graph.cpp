#include <hcblock/graph.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace hcblock {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

void require_connected(const Graph& g) {
    if (g.n == 0) throw Error(Error::Kind::validation, "graph has no vertices");
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != g.n) {
        std::ostringstream msg;
        msg << "graph is disconnected: vertices {";
        bool first = true;
        for (int v = 0; v < g.n; ++v)
            if (!seen[v]) {
                if (!first) msg << ", ";
                msg << v;
                first = false;
            }
        msg << "} are unreachable from vertex 0";
        throw Error(Error::Kind::disconnected, msg.str());
    }
}

} // namespace

Graph graph_from_edges(const std::vector<std::pair<int, int>>& edges, int n_hint) {
    if (edges.empty() && n_hint <= 1)
        throw Error(Error::Kind::validation, "edge list is empty");
    int n = n_hint;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0)
            throw Error(Error::Kind::validation, "negative vertex id");
        n = std::max(n, std::max(u, v) + 1);
    }
    std::set<std::pair<int, int>> seen;
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u == v)
            throw Error(Error::Kind::validation,
                        "loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error(Error::Kind::validation,
                        "duplicate edge " + std::to_string(key.first) + " " +
                            std::to_string(key.second));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    require_connected(g);
    return g;
}

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string_view::npos || line[i] == '#') continue;

        int ids[2];
        int count = 0;
        while (i < line.size()) {
            std::size_t j = line.find_first_of(" \t\r", i);
            std::string_view tok = line.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i);
            if (!tok.empty()) {
                if (count == 2)
                    throw Error(Error::Kind::parse,
                                "line " + std::to_string(line_no) + ": expected two vertex ids");
                int value = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
                if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
                    throw Error(Error::Kind::parse,
                                "line " + std::to_string(line_no) + ": bad vertex id '" +
                                    std::string(tok) + "'");
                ids[count++] = value;
            }
            if (j == std::string_view::npos) break;
            i = line.find_first_not_of(" \t\r", j);
            if (i == std::string_view::npos) break;
        }
        if (count == 1)
            throw Error(Error::Kind::parse,
                        "line " + std::to_string(line_no) + ": expected two vertex ids");
        if (count == 2) edges.emplace_back(ids[0], ids[1]);
    }
    if (edges.empty()) throw Error(Error::Kind::parse, "no edges in input");
    return graph_from_edges(edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

BlockDecomposition block_decomposition(const Graph& g) {
    require_connected(g);
    const int n = g.n;

    // Iterative Hopcroft–Tarjan with an explicit edge stack.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;

    // Pops edges up to and including the tree edge (u,v); those form one block.
    auto pop_block = [&](int u, int v) {
        std::set<int> members;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            members.insert(a);
            members.insert(b);
            if (a == u && b == v) break;
        }
        blocks.emplace_back(members.begin(), members.end());
    };

    struct Frame {
        int v;
        std::size_t next_edge;
    };
    int timer = 0;
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        int u = f.v;
        if (f.next_edge < g.adj[u].size()) {
            int v = g.adj[u][f.next_edge++];
            if (disc[v] == -1) {
                parent[v] = u;
                ++child_count[u];
                edge_stack.emplace_back(u, v);
                disc[v] = low[v] = timer++;
                stack.push_back({v, 0});
            } else if (v != parent[u] && disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        } else {
            stack.pop_back();
            int p = parent[u];
            if (p != -1) {
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= disc[p]) {
                    if (parent[p] != -1) is_cut[p] = 1;
                    pop_block(p, u);
                }
            }
        }
    }
    if (child_count[0] >= 2) is_cut[0] = 1;

    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());

    BlockDecomposition d;
    d.blocks = std::move(blocks);
    d.is_cut = std::move(is_cut);
    for (int v = 0; v < n; ++v)
        if (d.is_cut[v]) d.cut_vertices.push_back(v);
    d.blocks_of.assign(n, {});
    d.block_cuts.assign(d.blocks.size(), {});
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (int v : d.blocks[b]) {
            d.blocks_of[v].push_back(static_cast<int>(b));
            if (d.is_cut[v]) d.block_cuts[b].push_back(v);
        }
    return d;
}

bool is_block_graph(const Graph& g, const BlockDecomposition& d) {
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) return false;
    }
    return true;
}

bool is_block_graph(const Graph& g) { return is_block_graph(g, block_decomposition(g)); }

} // namespace hcblock
