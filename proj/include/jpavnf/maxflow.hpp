#pragma once

#include <cstddef>
#include <queue>
#include <vector>

namespace jpavnf::detail {

/// Dinic max-flow over an arbitrary integer-like capacity type.
template <class Int>
class MaxFlow {
public:
    explicit MaxFlow(int vertex_count) : head_(vertex_count) {}

    int add_edge(int from, int to, Int capacity) {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({to, std::move(capacity), Int(0)});
        head_[from].push_back(id);
        edges_.push_back({from, Int(0), Int(0)});
        head_[to].push_back(id + 1);
        return id;
    }

    const Int& flow_on(int edge_id) const { return edges_[edge_id].flow; }

    Int run(int source, int sink) {
        source_ = source;
        sink_ = sink;
        Int total(0);
        while (bfs()) {
            iter_.assign(head_.size(), 0);
            while (true) {
                Int pushed = dfs(source_, Int(-1));
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

private:
    struct Edge {
        int to;
        Int capacity;
        Int flow;
    };

    bool bfs() {
        level_.assign(head_.size(), -1);
        std::queue<int> frontier;
        frontier.push(source_);
        level_[source_] = 0;
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int id : head_[u]) {
                const Edge& e = edges_[id];
                if (level_[e.to] < 0 && e.flow < e.capacity) {
                    level_[e.to] = level_[u] + 1;
                    frontier.push(e.to);
                }
            }
        }
        return level_[sink_] >= 0;
    }

    // limit < 0 means unbounded
    Int dfs(int u, Int limit) {
        if (u == sink_) return limit;
        for (std::size_t& k = iter_[u]; k < head_[u].size(); ++k) {
            int id = head_[u][k];
            Edge& e = edges_[id];
            if (level_[e.to] != level_[u] + 1 || e.flow >= e.capacity) continue;
            Int residual = e.capacity - e.flow;
            Int cap = (limit < 0 || residual < limit) ? residual : limit;
            Int pushed = dfs(e.to, cap);
            if (pushed > 0) {
                e.flow += pushed;
                edges_[id ^ 1].flow -= pushed;
                return pushed;
            }
        }
        return Int(0);
    }

    std::vector<std::vector<int>> head_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
    int source_ = 0;
    int sink_ = 0;
};

}  // namespace jpavnf::detail
