#include <hcblock/families.hpp>

#include <hcblock/detour.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace hcblock {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(Error::Kind::validation, message);
}

void validate(const LevelWiseG1& s) {
    require(!s.k.empty() && s.k.size() == s.m.size(),
            "level-wise spec needs matching nonempty k and m lists");
    require(s.k[0] >= 2, "level-wise G1 requires k1 >= 2");
    for (int k : s.k) require(k >= 1, "level-wise spec requires k_i >= 1");
    for (int m : s.m) require(m >= 2, "level-wise spec requires m_i >= 2");
}

void validate(const LevelWiseGm1& s) {
    require(s.central >= 1, "level-wise G(m+1) requires m >= 1 central parameter");
    require(!s.k.empty() && s.k.size() == s.m.size(),
            "level-wise spec needs matching nonempty k and m lists");
    for (int k : s.k) require(k >= 1, "level-wise spec requires k_i >= 1");
    for (int m : s.m) require(m >= 2, "level-wise spec requires m_i >= 2");
}

void validate(const SymmetricBlocks& s) {
    require(s.p >= 2 && s.k >= 1 && s.d >= 2, "symmetric spec requires p >= 2, k >= 1, d >= 2");
}

void validate(const ExtendedStarOfBlocks& s) {
    require(s.m >= 2 && s.p >= 3 && s.k >= 3,
            "extended star spec requires m >= 2 and p, k >= 3");
}

void validate(const OnePointUnion& s) {
    require(s.p >= 2 && s.k >= 2, "one-point union requires p >= 2 and k >= 2");
}

void validate(const StarFamily& s) { require(s.k >= 2, "star requires k >= 2"); }

void validate(const PathFamily& s) { require(s.n >= 2, "path requires n >= 2"); }

// ---------------------------------------------------------------------------
// Level-wise construction shared by G1, G(m+1), symmetric, one-point union
// and stars. Vertices are numbered BFS level by level, each parent's child
// blocks contiguous, so proof orderings reduce to index arithmetic.

struct LevelWiseBuild {
    Graph g;
    int roots = 1;
    std::vector<int> counts, sizes; // per level: blocks per parent, vertices per block
    std::vector<int> child_base;    // per vertex: id of its first child, -1 if leaf level
};

LevelWiseBuild build_level_wise(int roots, std::vector<int> counts, std::vector<int> sizes) {
    LevelWiseBuild b;
    b.roots = roots;
    b.counts = std::move(counts);
    b.sizes = std::move(sizes);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> level;
    for (int t = 0; t < roots; ++t) level.push_back(t);
    for (int a = 0; a < roots; ++a)
        for (int c = a + 1; c < roots; ++c) edges.emplace_back(a, c);

    int next = roots;
    std::vector<int> child_base;
    child_base.assign(roots, -1);
    for (std::size_t l = 0; l < b.counts.size(); ++l) {
        std::vector<int> next_level;
        for (int v : level) {
            child_base[v] = next;
            for (int block = 0; block < b.counts[l]; ++block) {
                int first = next;
                for (int t = 0; t < b.sizes[l]; ++t) {
                    int fresh = next++;
                    edges.emplace_back(v, fresh);
                    for (int prev = first; prev < fresh; ++prev) edges.emplace_back(prev, fresh);
                    next_level.push_back(fresh);
                }
            }
        }
        child_base.resize(next, -1);
        level = std::move(next_level);
    }
    b.child_base = std::move(child_base);
    b.g = graph_from_edges(edges);
    return b;
}

// Position formula for the subtree under one root: children are labeled so
// that any k consecutive labels fall in different blocks and labels k apart
// share a block. A depth-l vertex with label chain a_1..a_l sits at
//   1 + sum_t a_t * prod_{i<t} K_i + sum_{t=l+1}^{r} prod_{i<=t} K_i
// with K_i = k_i * m_i, putting the deepest level first after the root.
void fill_subtree_positions(const LevelWiseBuild& b, int root, std::vector<int>& slot_to_vertex) {
    const int r = static_cast<int>(b.counts.size());
    std::vector<long long> prod(r + 1, 1);
    for (int t = 0; t < r; ++t)
        prod[t + 1] = prod[t] * b.counts[t] * b.sizes[t];
    std::vector<long long> tail(r + 1, 0);
    for (int l = r - 1; l >= 1; --l) tail[l] = tail[l + 1] + prod[l + 1];

    struct Item {
        int vertex, depth;
        long long partial;
    };
    std::vector<Item> stack{{root, 0, 0}};
    while (!stack.empty()) {
        auto [v, depth, partial] = stack.back();
        stack.pop_back();
        if (depth > 0) {
            long long j = 1 + partial + tail[depth];
            slot_to_vertex.at(static_cast<std::size_t>(j - 1)) = v;
        }
        if (depth == r) continue;
        int k = b.counts[depth], m = b.sizes[depth];
        for (int a = 0; a < k * m; ++a) {
            int child = b.child_base[v] + (a % k) * m + (a / k);
            stack.push_back({child, depth + 1, partial + a * prod[depth]});
        }
    }
}

Ordering g1_ordering(const LevelWiseBuild& b) {
    std::vector<int> slots(b.g.n - 1, -1);
    fill_subtree_positions(b, 0, slots);
    Ordering o;
    o.seq.push_back(0);
    for (int v : slots) {
        if (v < 0) throw Error(Error::Kind::internal, "level-wise position formula left a gap");
        o.seq.push_back(v);
    }
    return o;
}

// Round robin over the central anchors, one subtree position at a time. The
// anchor cycle starts at root 0 while u_0 is the last root, so the final
// branch vertex is anchored opposite the first trailing central vertex.
Ordering gm1_ordering(const LevelWiseBuild& b) {
    const int roots = b.roots;
    const int n = b.g.n;
    const int per_root = (n - roots) / roots;

    std::vector<std::vector<int>> slots(roots, std::vector<int>(per_root, -1));
    for (int t = 0; t < roots; ++t) fill_subtree_positions(b, t, slots[t]);

    Ordering o;
    o.seq.push_back(roots - 1);
    for (int j = 1; j <= n - roots; ++j) {
        int anchor = (j - 1) % roots;
        int s = (j + roots - 1) / roots; // ceil(j / roots)
        int v = slots[anchor][s - 1];
        if (v < 0) throw Error(Error::Kind::internal, "level-wise position formula left a gap");
        o.seq.push_back(v);
    }
    for (int t = 0; t + 1 < roots; ++t) o.seq.push_back(t);
    return o;
}

LevelWiseBuild build_from(const LevelWiseG1& s) { return build_level_wise(1, s.k, s.m); }

LevelWiseBuild build_from(const LevelWiseGm1& s) {
    return build_level_wise(s.central + 1, s.k, s.m);
}

LevelWiseBuild build_from(const SymmetricBlocks& s) {
    int r = s.d / 2;
    std::vector<int> counts(r, s.k), sizes(r, s.p);
    if (s.d % 2 == 0) {
        counts[0] = s.k + 1;
        return build_level_wise(1, counts, sizes);
    }
    return build_level_wise(s.p + 1, counts, sizes);
}

LevelWiseBuild build_from(const OnePointUnion& s) {
    return build_level_wise(1, {s.k}, {s.p - 1});
}

LevelWiseBuild build_from(const StarFamily& s) { return build_level_wise(1, {s.k}, {1}); }

// ---------------------------------------------------------------------------
// Extended star of blocks.

int ext_star_vertex(const ExtendedStarOfBlocks& s, int i, int j, int l) {
    return 1 + (i - 1) * s.k * (s.p - 1) + (l - 1) * (s.p - 1) + (j - 1);
}

Graph gen_ext_star(const ExtendedStarOfBlocks& s) {
    std::vector<std::pair<int, int>> edges;
    for (int l = 1; l <= s.k; ++l)
        for (int i = 1; i <= s.m; ++i) {
            // v^l_{i,p-1} is the cut vertex carrying level i+1
            int anchor = i == 1 ? 0 : ext_star_vertex(s, i - 1, s.p - 1, l);
            std::vector<int> block{anchor};
            for (int j = 1; j <= s.p - 1; ++j) block.push_back(ext_star_vertex(s, i, j, l));
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t c = a + 1; c < block.size(); ++c)
                    edges.emplace_back(block[a], block[c]);
        }
    return graph_from_edges(edges);
}

// Interleaving position formulas, split by the parities of k and m. The
// resulting lineup is emitted center-first (positions reversed), matching the
// endpoint convention of the ordering criterion.
Ordering ext_star_ordering(const ExtendedStarOfBlocks& s) {
    const int k = s.k, m = s.m, p = s.p;
    const int n = k * m * (p - 1) + 1;
    std::vector<int> pos(n, -1);
    pos[n - 1] = 0;

    auto place = [&](long long t, int i, int j, int l) {
        if (t < 0 || t >= n - 1 || pos[t] != -1)
            throw Error(Error::Kind::internal, "extended-star position formula collision");
        pos[t] = ext_star_vertex(s, i, j, l);
    };

    const long long kp = static_cast<long long>(k) * (p - 1);
    for (int l = 1; l <= k; ++l)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= p - 1; ++j) {
                long long t;
                if (k % 2 == 1) {
                    if (m % 2 == 1) {
                        int mid = (m + 1) / 2;
                        if (l % 2 == 1) {
                            if (i < mid)
                                t = (i - 1) * 2 * kp + (j - 1) * 2 * k + (l - 1);
                            else if (i == mid)
                                t = (i - 1) * 2 * kp + (j - 1) * k + (l - 1);
                            else
                                t = (m - i) * 2 * kp + (j - 1) * 2 * k + (l - 1) + k;
                        } else {
                            if (i < mid)
                                t = (i - 1) * 2 * kp + (j - 1) * 2 * k + (l - 1) + k;
                            else if (i == mid)
                                t = (i - 1) * 2 * kp + (j - 1) * k + (l - 1);
                            else
                                t = (m - i) * 2 * kp + (j - 1) * 2 * k + (l - 1);
                        }
                    } else {
                        if (l % 2 == 1)
                            t = i <= m / 2 ? (i - 1) * 2 * kp + (j - 1) * 2 * k + (l - 1)
                                           : (m - i) * 2 * kp + (j - 1) * 2 * k + (l - 1) + k;
                        else
                            t = i <= m / 2 ? (i - 1) * 2 * kp + (j - 1) * 2 * k + (l - 1) + k
                                           : (m - i) * 2 * kp + (j - 1) * 2 * k + (l - 1);
                    }
                } else {
                    // Arm parity decides which end of the arm fills first;
                    // odd arms ascend so the lineup closes at v^1_{1,1},
                    // whose level is xi.
                    t = l % 2 == 1 ? (i - 1) * kp + (j - 1) * k + (l - 1)
                                   : (m - i) * kp + (j - 1) * k + (l - 1);
                }
                place(t, i, j, l);
            }

    Ordering o;
    o.seq.reserve(n);
    for (int j = n - 1; j >= 0; --j) {
        if (pos[j] < 0) throw Error(Error::Kind::internal, "extended-star position formula gap");
        o.seq.push_back(pos[j]);
    }
    return o;
}

// ---------------------------------------------------------------------------

long long phi_geo(long long x, int r) { // 1 + x + ... + x^{r-1}
    long long acc = 0, pw = 1;
    for (int t = 0; t < r; ++t) {
        acc += pw;
        pw *= x;
    }
    return acc;
}

long long level_wise_order_sum(const std::vector<int>& k, const std::vector<int>& m) {
    long long s = 0, prod = 1;
    for (std::size_t i = 0; i < k.size(); ++i) {
        prod *= static_cast<long long>(k[i]) * m[i];
        s += prod;
    }
    return s;
}

long long level_wise_level_sum(const std::vector<int>& k, const std::vector<int>& m) {
    long long s = 0, prod = 1, depth = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        prod *= static_cast<long long>(k[i]) * m[i];
        depth += m[i];
        s += prod * depth;
    }
    return s;
}

} // namespace

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LevelWiseG1>) return "g1";
            else if constexpr (std::is_same_v<T, LevelWiseGm1>) return "gm1";
            else if constexpr (std::is_same_v<T, SymmetricBlocks>) return "symmetric";
            else if constexpr (std::is_same_v<T, ExtendedStarOfBlocks>) return "extstar";
            else if constexpr (std::is_same_v<T, OnePointUnion>) return "onepoint";
            else if constexpr (std::is_same_v<T, StarFamily>) return "star";
            else return "path";
        },
        spec);
}

Graph gen_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            validate(s);
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ExtendedStarOfBlocks>) {
                return gen_ext_star(s);
            } else if constexpr (std::is_same_v<T, PathFamily>) {
                std::vector<std::pair<int, int>> edges;
                for (int v = 0; v + 1 < s.n; ++v) edges.emplace_back(v, v + 1);
                return graph_from_edges(edges);
            } else {
                return build_from(s).g;
            }
        },
        spec);
}

long long family_hc_formula(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> long long {
            validate(s);
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LevelWiseG1>) {
                long long S = level_wise_order_sum(s.k, s.m);
                return S * S - 2 * level_wise_level_sum(s.k, s.m) + s.m[0];
            } else if constexpr (std::is_same_v<T, LevelWiseGm1>) {
                long long S = level_wise_order_sum(s.k, s.m);
                long long T2 = level_wise_level_sum(s.k, s.m);
                long long w = s.central;
                return (w + (w + 1) * S) * ((w + 1) * S) - 2 * (w + 1) * T2;
            } else if constexpr (std::is_same_v<T, SymmetricBlocks>) {
                int r = s.d / 2;
                long long p = s.p, k = s.k;
                long long phi = phi_geo(k * p, r);
                long long rem = (phi - r) / (k * p - 1); // each x^t - 1 is divisible by x-1
                if (s.d % 2 == 0)
                    return p * p * (k + 1) * (phi * ((k + 1) * phi - 2 * r) + 2 * rem) + p;
                return k * p * p * (p + 1) * (phi * (k * (p + 1) * phi - 2 * r + 1) + 2 * rem);
            } else if constexpr (std::is_same_v<T, ExtendedStarOfBlocks>) {
                long long k = s.k, m = s.m, pm1 = s.p - 1;
                return k * m * pm1 * pm1 * (k * m - m - 1) + pm1;
            } else if constexpr (std::is_same_v<T, OnePointUnion>) {
                long long k = s.k, pm1 = s.p - 1;
                return k * pm1 * pm1 * (k - 2) + pm1;
            } else if constexpr (std::is_same_v<T, StarFamily>) {
                long long k = s.k;
                return (k - 1) * (k - 1);
            } else { // PathFamily: no proven closed form beyond the bound
                long long r = s.n / 2;
                return s.n % 2 == 1 ? 2 * r * r - 2 * r + 1 : 2 * (r - 1) * (r - 1);
            }
        },
        spec);
}

Ordering family_ordering(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Ordering {
            validate(s);
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ExtendedStarOfBlocks>) {
                return ext_star_ordering(s);
            } else if constexpr (std::is_same_v<T, PathFamily>) {
                Graph g = gen_family(FamilySpec{s});
                auto o = alternating_ordering(DetourProfile::analyze(g));
                if (!o) throw Error(Error::Kind::internal, "path alternation failed");
                return *o;
            } else if constexpr (std::is_same_v<T, LevelWiseGm1>) {
                return gm1_ordering(build_from(s));
            } else if constexpr (std::is_same_v<T, SymmetricBlocks>) {
                LevelWiseBuild b = build_from(s);
                return b.roots == 1 ? g1_ordering(b) : gm1_ordering(b);
            } else {
                return g1_ordering(build_from(s));
            }
        },
        spec);
}

FamilyReport family_report(const FamilySpec& spec) {
    FamilyReport r;
    r.graph = gen_family(spec);
    DetourProfile profile = DetourProfile::analyze(r.graph);
    r.formula_hc = family_hc_formula(spec);
    r.bound_hc = span_lower_bound(profile);
    r.ordering = family_ordering(spec);
    r.certificate = color_from_ordering(profile, r.ordering);
    r.agreement = r.certificate.valid && r.certificate.span == r.formula_hc &&
                  r.formula_hc == r.bound_hc;
    if (profile.branch_count() < 3) {
        r.caveat = true;
        std::ostringstream msg;
        msg << "only " << profile.branch_count()
            << " branches; the closed form is outside the proven range";
        r.caveat_reason = msg.str();
    }
    return r;
}

Graph glue_at_centers(const std::vector<Graph>& parts) {
    require(!parts.empty(), "glue requires at least one graph");
    std::vector<int> centers;
    int total = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        DetourProfile p = DetourProfile::analyze(parts[i]);
        if (p.omega() != 1) {
            std::ostringstream msg;
            msg << "glue input " << i << " has " << p.omega()
                << " detour central vertices; a unique central vertex is required";
            throw Error(Error::Kind::validation, msg.str());
        }
        centers.push_back(p.center().front());
        total += parts[i].n - 1;
    }

    std::vector<std::pair<int, int>> edges;
    int offset = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int w = centers[i];
        auto map = [&](int v) { return v == w ? 0 : offset + v - (v > w ? 1 : 0); };
        for (auto [a, b] : parts[i].edges()) edges.emplace_back(map(a), map(b));
        offset += parts[i].n - 1;
    }
    Graph g = graph_from_edges(edges);
    if (g.n != total) throw Error(Error::Kind::internal, "glued order mismatch");
    return g;
}

Ordering glued_ordering(const std::vector<Graph>& parts, const std::vector<Ordering>& orderings) {
    require(parts.size() == orderings.size() && !parts.empty(),
            "glued_ordering needs one ordering per graph");

    std::vector<int> centers, xis, offsets;
    int offset = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        DetourProfile p = DetourProfile::analyze(parts[i]);
        require(p.omega() == 1, "glued_ordering inputs need a unique central vertex");
        auto check = check_ordering_thm2(p, orderings[i]);
        if (!check.pass) {
            std::ostringstream msg;
            msg << "component ordering " << i << " fails the ordering criterion";
            throw Error(Error::Kind::validation, msg.str());
        }
        centers.push_back(p.center().front());
        xis.push_back(p.xi());
        offsets.push_back(offset);
        offset += parts[i].n - 1;
    }

    // The component realizing the glued xi goes last.
    std::size_t closing = std::min_element(xis.begin(), xis.end()) - xis.begin();
    std::vector<std::size_t> emit_order;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i != closing) emit_order.push_back(i);
    emit_order.push_back(closing);

    Ordering merged;
    merged.seq.push_back(0);
    for (std::size_t i : emit_order) {
        int w = centers[i];
        for (std::size_t t = 1; t < orderings[i].seq.size(); ++t) {
            int v = orderings[i].seq[t];
            merged.seq.push_back(offsets[i] + v - (v > w ? 1 : 0));
        }
    }
    return merged;
}

long long glue_hc_formula(const std::vector<long long>& component_hc,
                          const std::vector<int>& orders, const std::vector<int>& xis) {
    require(component_hc.size() == orders.size() && orders.size() == xis.size() &&
                !orders.empty(),
            "glue formula needs matching component lists");
    long long total = 0;
    for (std::size_t i = 0; i < component_hc.size(); ++i) total += component_hc[i] - xis[i];
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
            total += 2LL * (orders[i] - 1) * (orders[j] - 1);
    return total + *std::min_element(xis.begin(), xis.end());
}

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    // rejection sampling: identical draws on every platform
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<int>(x % range);
}

} // namespace

Graph random_block_graph(std::uint64_t seed, int n_target, int max_clique) {
    require(n_target >= 2, "random block graph requires n_target >= 2");
    require(max_clique >= 2, "random block graph requires max_clique >= 2");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int n = 1;
    while (n < n_target) {
        int cap = std::min(max_clique, n_target - n + 1);
        int size = uniform_int(rng, 2, cap);
        int anchor = uniform_int(rng, 0, n - 1);
        std::vector<int> block{anchor};
        for (int t = 0; t < size - 1; ++t) block.push_back(n++);
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                edges.emplace_back(block[a], block[b]);
    }
    return graph_from_edges(edges, n);
}

} // namespace hcblock
