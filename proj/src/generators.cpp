#include "jpavnf/generators.hpp"

#include <algorithm>
#include <string>

namespace jpavnf {

namespace detail {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection below the wraparound threshold keeps the draw unbiased
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace detail

namespace {

using detail::bounded;

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

Rational draw_rate(std::mt19937_64& rng, const RateClass& cls, int m) {
    // grid step 1/(1000m) over [0, R/m], or 1/1000 over [0, 10R]
    if (cls.tag == RateTag::Small) {
        auto top = floor_to_int(Rational(1000) * cls.capacity);
        auto t = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(top) + 1));
        return Rational(t, 1000 * static_cast<std::int64_t>(m));
    }
    auto top = floor_to_int(Rational(10000) * cls.capacity);
    auto t = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(top) + 1));
    return Rational(t, 1000);
}

}  // namespace

std::pair<int, int> hop_range(PathClass cls, int n) {
    int divisor = cls == PathClass::Short ? 10 : cls == PathClass::Medium ? 4 : 2;
    return {1, std::max(1, n / divisor)};
}

Graph gen_random_topology(int n, int edge_count, Seed seed) {
    if (n < 1) throw ValidationError("topology needs at least one node");
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (edge_count < n - 1 || edge_count > max_edges)
        throw ValidationError("edge count " + std::to_string(edge_count) +
                              " outside [" + std::to_string(n - 1) + ", " +
                              std::to_string(max_edges) + "]");

    std::mt19937_64 rng(seed.value);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);

    Graph graph;
    graph.labels = default_labels(n);
    auto normalized = [](int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); };
    for (int i = 1; i < n; ++i)
        graph.edges.push_back(normalized(perm[i], perm[bounded(rng, i)]));

    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : graph.edges) present[a][b] = 1;
    std::vector<std::pair<int, int>> candidates;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!present[a][b]) candidates.emplace_back(a, b);
    for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[bounded(rng, i)]);
    for (int k = 0; k < edge_count - (n - 1); ++k) graph.edges.push_back(candidates[k]);

    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

std::pair<Graph, int> gen_tree(int n, int max_children, Seed seed) {
    if (n < 1) throw ValidationError("tree needs at least one node");
    if (max_children < 1) throw ValidationError("max_children must be positive");

    std::mt19937_64 rng(seed.value);
    Graph graph;
    graph.labels = default_labels(n);
    std::vector<int> child_count(n, 0);
    for (int i = 1; i < n; ++i) {
        std::vector<int> eligible;
        for (int p = 0; p < i; ++p)
            if (child_count[p] < max_children) eligible.push_back(p);
        int parent = eligible[bounded(rng, eligible.size())];
        ++child_count[parent];
        graph.edges.emplace_back(parent, i);
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return {std::move(graph), 0};
}

std::vector<Flow> gen_flows(const Graph& graph, int m, PathClass path_class,
                            RateClass rate_class, Seed seed) {
    const int n = graph.node_count();
    const auto [lo, hi] = hop_range(path_class, n);
    const auto adjacency = graph.adjacency();

    std::mt19937_64 rng(seed.value);
    std::vector<Flow> flows;
    for (int j = 1; j <= m; ++j) {
        int hops = lo + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
        Flow flow;
        flow.id = "f" + std::to_string(j);

        std::vector<char> visited(n, 0);
        int at = static_cast<int>(bounded(rng, n));
        visited[at] = 1;
        flow.path.push_back(at);
        for (int step = 0; step < hops; ++step) {
            std::vector<int> next;
            for (int v : adjacency[at])
                if (!visited[v]) next.push_back(v);
            if (next.empty()) break;  // dead end: keep the truncated path
            at = next[bounded(rng, next.size())];
            visited[at] = 1;
            flow.path.push_back(at);
        }

        flow.rate = draw_rate(rng, rate_class, m);
        flows.push_back(std::move(flow));
    }
    return flows;
}

std::vector<Flow> gen_upstream_tree_flows(const TreeInstance& tree, int m,
                                          RateClass rate_class, Seed seed) {
    const int n = tree.instance.node_count();
    std::mt19937_64 rng(seed.value);
    std::vector<Flow> flows;
    for (int j = 1; j <= m; ++j) {
        Flow flow;
        flow.id = "f" + std::to_string(j);

        int start = static_cast<int>(bounded(rng, n));
        std::vector<int> chain;
        for (int v = start; v != -1; v = tree.parent[v]) chain.push_back(v);
        auto exit_pos = bounded(rng, chain.size());
        flow.path.assign(chain.begin(), chain.begin() + exit_pos + 1);

        flow.rate = draw_rate(rng, rate_class, m);
        flows.push_back(std::move(flow));
    }
    return flows;
}

}  // namespace jpavnf
