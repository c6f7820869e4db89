#include <hcblock/oracle.hpp>

#include <hcblock/detour.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hcblock {

namespace {

void check_guard(int n, int max_n, const char* what, double estimate) {
    if (n > max_n) {
        std::ostringstream msg;
        msg << what << " refused: n=" << n << " exceeds guard " << max_n << " (about "
            << estimate << " states); raise the limit explicitly to proceed";
        throw Error(Error::Kind::size_guard, msg.str());
    }
}

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct PathSearch {
    const Graph& g;
    std::vector<char> visited;
    std::vector<int> stack;
    std::vector<int> best_len;  // per target
    std::vector<int> best_path; // for the single tracked target, if any
    int target = -1;
    std::uint64_t explored = 0;

    explicit PathSearch(const Graph& graph)
        : g(graph), visited(graph.n, 0), best_len(graph.n, -1) {}

    void dfs(int u) {
        ++explored;
        int len = static_cast<int>(stack.size()) - 1;
        if (len > best_len[u]) {
            best_len[u] = len;
            if (u == target) best_path = stack;
        }
        for (int v : g.adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            stack.push_back(v);
            dfs(v);
            stack.pop_back();
            visited[v] = 0;
        }
    }

    void run(int source) {
        visited[source] = 1;
        stack.push_back(source);
        dfs(source);
    }
};

} // namespace

DetourSearchResult brute_detour_distance(const Graph& g, int u, int v, int max_n) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw Error(Error::Kind::validation, "vertex id out of range");
    check_guard(g.n, max_n, "detour search", std::exp2(g.n) * g.n);
    DetourSearchResult r;
    if (u == v) {
        r.path = {u};
        return r;
    }
    PathSearch search(g);
    search.target = v;
    search.run(u);
    r.value = search.best_len[v];
    r.path = search.best_path;
    r.explored = search.explored;
    return r;
}

std::vector<int> brute_detour_row(const Graph& g, int u, int max_n) {
    if (u < 0 || u >= g.n)
        throw Error(Error::Kind::validation, "vertex id out of range");
    check_guard(g.n, max_n, "detour search", std::exp2(g.n) * g.n);
    PathSearch search(g);
    search.run(u);
    search.best_len[u] = 0;
    return search.best_len;
}

std::vector<long long> greedy_colors_for_ordering(const std::vector<std::vector<int>>& detour,
                                                  const Ordering& o) {
    const int n = static_cast<int>(detour.size());
    std::vector<long long> by_position(o.seq.size(), 0);
    for (std::size_t j = 1; j < o.seq.size(); ++j) {
        long long c = 0;
        for (std::size_t i = 0; i < j; ++i) {
            long long need =
                by_position[i] + std::max(0, n - 1 - detour[o.seq[i]][o.seq[j]]);
            c = std::max(c, need);
        }
        by_position[j] = c;
    }
    std::vector<long long> colors(n, 0);
    for (std::size_t i = 0; i < o.seq.size(); ++i) colors[o.seq[i]] = by_position[i];
    return colors;
}

long long min_span_for_ordering(const std::vector<std::vector<int>>& detour, const Ordering& o) {
    auto colors = greedy_colors_for_ordering(detour, o);
    return *std::max_element(colors.begin(), colors.end());
}

HcSearchResult exact_hc(const Graph& g, int max_n) {
    check_guard(g.n, max_n, "exact hc search", factorial(g.n) * g.n);
    const int n = g.n;

    // Detour table: block-path sums when possible, otherwise brute rows.
    std::vector<std::vector<int>> detour;
    BlockDecomposition d = block_decomposition(g);
    if (is_block_graph(g, d)) {
        detour = DetourProfile::analyze(g, d).distance_table();
    } else {
        detour.reserve(n);
        for (int u = 0; u < n; ++u) detour.push_back(brute_detour_row(g, u, std::max(max_n, g.n)));
    }

    HcSearchResult result;
    result.value = -1;

    std::vector<int> order;
    std::vector<long long> color_at; // greedy color per position
    std::vector<char> used(n, 0);
    std::uint64_t explored = 0;

    // DFS over prefixes in lexicographic order; the greedy span only grows
    // with the prefix, so prefixes at or above the incumbent are pruned.
    // Strict improvement keeps the lexicographically first optimal ordering.
    auto dfs = [&](auto&& self) -> void {
        ++explored;
        long long partial = order.empty() ? 0 : color_at.back();
        if (result.value >= 0 && partial >= result.value) return;
        if (static_cast<int>(order.size()) == n) {
            result.value = partial;
            result.ordering.seq = order;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            long long c = 0;
            for (std::size_t i = 0; i < order.size(); ++i)
                c = std::max(c, color_at[i] + std::max(0, n - 1 - detour[order[i]][v]));
            used[v] = 1;
            order.push_back(v);
            color_at.push_back(c);
            self(self);
            color_at.pop_back();
            order.pop_back();
            used[v] = 0;
        }
    };
    dfs(dfs);

    result.explored = explored;
    result.witness = greedy_colors_for_ordering(detour, result.ordering);
    return result;
}

} // namespace hcblock
