#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace majority {

using edge = std::pair<int, int>;

/// Finite simple digraph on vertices 1..n, no self-loops.
class digraph {
public:
    digraph() = default;

    explicit digraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, false) {
        if (n < 0) throw error(error_code::index_out_of_range, "negative vertex count");
    }

    digraph(int n, const std::vector<edge>& edges) : digraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const noexcept { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw error(error_code::equal_indices, "self-loop at vertex " + std::to_string(u));
        }
        adj_[slot(u, v)] = true;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u != v) adj_[slot(u, v)] = false;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[slot(u, v)];
    }

    // Lexicographically sorted.
    std::vector<edge> edges() const {
        std::vector<edge> out;
        for (int u = 1; u <= n_; ++u) {
            for (int v = 1; v <= n_; ++v) {
                if (u != v && adj_[slot(u, v)]) out.emplace_back(u, v);
            }
        }
        return out;
    }

    std::size_t edge_count() const { return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true)); }

    bool is_one_way(int u, int v) const { return has_edge(u, v) && !has_edge(v, u); }

    friend bool operator==(const digraph&, const digraph&) = default;

private:
    std::size_t slot(int u, int v) const { return static_cast<std::size_t>(u - 1) * n_ + (v - 1); }

    void check_vertex(int v) const {
        if (v < 1 || v > n_) {
            throw error(error_code::index_out_of_range,
                        "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
        }
    }

    int n_ = 0;
    std::vector<bool> adj_;
};

struct edge_classes {
    std::set<edge> two_way;  // stored as (min, max)
    std::set<edge> one_way;
};

inline edge_classes classify_edges(const digraph& g) {
    edge_classes out;
    for (auto [u, v] : g.edges()) {
        if (g.has_edge(v, u)) {
            out.two_way.emplace(std::min(u, v), std::max(u, v));
        } else {
            out.one_way.emplace(u, v);
        }
    }
    return out;
}

/// Depth-first search over one-way edges, vertices and successors in ascending order.
/// Returns the first cycle closed by a back edge as v1, ..., vk, v1.
inline std::optional<std::vector<int>> find_one_way_cycle(const digraph& g) {
    const int n = g.n();
    enum class mark { white, grey, black };
    std::vector<mark> state(n + 1, mark::white);
    std::vector<int> path;
    std::optional<std::vector<int>> found;

    std::function<bool(int)> visit = [&](int u) {
        state[u] = mark::grey;
        path.push_back(u);
        for (int v = 1; v <= n; ++v) {
            if (v == u || !g.is_one_way(u, v)) continue;
            if (state[v] == mark::grey) {
                auto start = std::find(path.begin(), path.end(), v);
                std::vector<int> cycle(start, path.end());
                cycle.push_back(v);
                found = std::move(cycle);
                return true;
            }
            if (state[v] == mark::white && visit(v)) return true;
        }
        path.pop_back();
        state[u] = mark::black;
        return false;
    };

    for (int v = 1; v <= n; ++v) {
        if (state[v] == mark::white && visit(v)) break;
    }
    return found;
}

/// An appropriate pair (S, T) together with the relabeling that carries the
/// source digraph onto G_{S,T}.
struct appropriate_pair {
    int n = 0;
    std::set<edge> two_way;   // S, as (i, j) with i < j
    std::set<edge> one_way;   // T, every (i, j) has i < j
    std::vector<int> label;   // label[v-1]: new index of original vertex v
    std::vector<int> vertex;  // vertex[i-1]: original vertex carrying new index i

    digraph relabeled() const {
        digraph g(n);
        for (auto [i, j] : two_way) {
            g.add_edge(i, j);
            g.add_edge(j, i);
        }
        for (auto [i, j] : one_way) g.add_edge(i, j);
        return g;
    }

    // G_{S,T} pulled back through the relabeling.
    digraph original() const {
        digraph g(n);
        for (auto [i, j] : relabeled().edges()) g.add_edge(vertex[i - 1], vertex[j - 1]);
        return g;
    }
};

/// Lexicographically smallest topological order of the one-way subgraph.
inline appropriate_pair to_appropriate_pair(const digraph& g) {
    if (auto cycle = find_one_way_cycle(g)) throw one_way_cycle_error(*cycle);

    const int n = g.n();
    std::vector<int> indegree(n + 1, 0);
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u != v && g.is_one_way(u, v)) ++indegree[v];
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 1; v <= n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }

    appropriate_pair out;
    out.n = n;
    out.label.assign(n, 0);
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        out.vertex.push_back(u);
        out.label[u - 1] = static_cast<int>(out.vertex.size());
        for (int v = 1; v <= n; ++v) {
            if (u != v && g.is_one_way(u, v) && --indegree[v] == 0) ready.push(v);
        }
    }

    auto classes = classify_edges(g);
    for (auto [u, v] : classes.two_way) {
        int i = out.label[u - 1], j = out.label[v - 1];
        out.two_way.emplace(std::min(i, j), std::max(i, j));
    }
    for (auto [u, v] : classes.one_way) out.one_way.emplace(out.label[u - 1], out.label[v - 1]);
    return out;
}

}  // namespace majority
