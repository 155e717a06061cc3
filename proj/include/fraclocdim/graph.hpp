#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fraclocdim/vertex_set.hpp"

namespace fraclocdim {

/// Largest vertex count build_graph accepts.
inline constexpr std::size_t kMaxGraphOrder = 4096;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
    std::string to_string() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

/**
 * Immutable simple undirected graph on dense vertex indices 0..n-1.
 *
 * Adjacency is held as one VertexSet row per vertex; the canonical edge list
 * is sorted. Construction goes through build_graph, which validates input.
 */
class Graph {
public:
    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edges_.size(); }
    const std::string& name() const { return name_; }

    const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
    VertexSet closed_neighbors(Vertex v) const {
        VertexSet s = adj_.at(v);
        s.insert(v);
        return s;
    }
    std::size_t degree(Vertex v) const { return adj_.at(v).count(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
    std::span<const Edge> edges() const { return edges_; }

    Graph renamed(std::string name) const {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend Graph build_graph(std::size_t, std::span<const std::pair<Vertex, Vertex>>, std::string);

    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;
    std::string name_;
};

/**
 * Builds a simple graph; duplicate edges collapse. Rejects out-of-range
 * indices, self-loops, n == 0 and n > kMaxGraphOrder.
 */
inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                         std::string name = {}) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    if (n > kMaxGraphOrder)
        throw GraphError("graph order " + std::to_string(n) + " exceeds ceiling " +
                         std::to_string(kMaxGraphOrder));
    Graph g;
    g.adj_.assign(n, VertexSet(n));
    g.name_ = std::move(name);
    for (const auto& [a, b] : edges) {
        const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a >= n || b >= n) throw GraphError("edge " + pair + " has index out of range for n=" + std::to_string(n));
        if (a == b) throw GraphError("self-loop " + pair + " not allowed");
        g.adj_[a].insert(b);
        g.adj_[b].insert(a);
    }
    for (Vertex u = 0; u < n; ++u)
        g.adj_[u].for_each([&](Vertex v) {
            if (u < v) g.edges_.push_back({u, v});
        });
    return g;
}

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         std::string name = {}) {
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges), std::move(name));
}

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from one source; kUnreachable for other components.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> dist(n, kUnreachable);
    VertexSet seen(n), frontier(n);
    seen.insert(source);
    frontier.insert(source);
    dist[source] = 0;
    for (std::uint32_t level = 1; !frontier.empty(); ++level) {
        VertexSet next(n);
        frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
        next -= seen;
        next.for_each([&](Vertex v) { dist[v] = level; });
        seen |= next;
        frontier = std::move(next);
    }
    return dist;
}

/// All-pairs hop distances of a connected graph, row-major n x n.
class DistMatrix {
public:
    DistMatrix() = default;
    explicit DistMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_) {
        for (Vertex s = 0; s < n_; ++s) {
            auto row = bfs_distances(g, s);
            for (Vertex t = 0; t < n_; ++t) {
                if (row[t] == kUnreachable)
                    throw GraphError("graph is disconnected: vertices " + std::to_string(s) + " and " +
                                     std::to_string(t) + " are unreachable from each other");
                d_[s * n_ + t] = row[t];
            }
        }
    }

    std::size_t order() const { return n_; }
    std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
    std::span<const std::uint32_t> row(Vertex u) const { return {d_.data() + u * n_, n_}; }
    std::uint32_t diameter() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

/// Throws GraphError naming two mutually unreachable vertices if g is disconnected.
inline DistMatrix all_pairs_distances(const Graph& g) { return DistMatrix(g); }

inline bool is_connected(const Graph& g) {
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](std::uint32_t x) { return x == kUnreachable; });
}

/// Two-colouring by BFS parity; false as soon as an edge joins equal colours.
inline bool is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        const auto d = bfs_distances(g, s);
        for (Vertex v = 0; v < n; ++v)
            if (d[v] != kUnreachable) colour[v] = static_cast<int>(d[v] % 2);
    }
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return colour[e.u] != colour[e.v]; });
}

/// N[u] == N[v]. Implies u and v are adjacent.
inline bool true_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw GraphError("true_twins needs two distinct vertices");
    return g.closed_neighbors(u) == g.closed_neighbors(v);
}

inline bool every_vertex_has_true_twin(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        bool found = false;
        g.neighbors(u).for_each([&](Vertex v) { found = found || true_twins(g, u, v); });
        if (!found) return false;
    }
    return true;
}

/// G - v with indices above v shifted down by one. The result may be disconnected.
inline Graph delete_vertex(const Graph& g, Vertex v) {
    if (g.order() < 2) throw GraphError("cannot delete a vertex from a single-vertex graph");
    if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) edges.emplace_back(shift(e.u), shift(e.v));
    return build_graph(g.order() - 1, edges, g.name().empty() ? "" : g.name() + "-v" + std::to_string(v));
}

/// Subgraph induced by the members of s, relabelled in increasing order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    const auto keep = s.members();
    std::vector<Vertex> index(g.order(), g.order());
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges())
        if (index[e.u] < keep.size() && index[e.v] < keep.size()) edges.emplace_back(index[e.u], index[e.v]);
    return build_graph(keep.size(), edges);
}

}  // namespace fraclocdim
