#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fraclocdim/graph.hpp"

namespace fraclocdim {

/// R(u,v): vertices whose distances to u and v differ.
inline VertexSet resolving_pair_set(const DistMatrix& d, Vertex u, Vertex v) {
    if (u == v) throw GraphError("resolving_pair_set needs distinct vertices");
    const std::size_t n = d.order();
    VertexSet s(n);
    const auto du = d.row(u), dv = d.row(v);
    for (Vertex x = 0; x < n; ++x)
        if (du[x] != dv[x]) s.insert(x);
    return s;
}

inline VertexSet resolving_pair_set(const Graph&, const DistMatrix& d, Vertex u, Vertex v) {
    return resolving_pair_set(d, u, v);
}

inline VertexSet resolving_pair_set(const Graph& g, Vertex u, Vertex v) { return resolving_pair_set(DistMatrix(g), u, v); }

/// L(uv) for an edge uv; throws if uv is not an edge.
inline VertexSet local_resolving_neighborhood(const Graph& g, const DistMatrix& d, Edge e) {
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
        throw GraphError("pair " + e.to_string() + " is not an edge");
    return resolving_pair_set(d, e.u, e.v);
}

/// L(e) for every edge in canonical edge order.
inline std::vector<std::pair<Edge, VertexSet>> local_neighborhoods(const Graph& g, const DistMatrix& d) {
    std::vector<std::pair<Edge, VertexSet>> out;
    out.reserve(g.size());
    for (const Edge& e : g.edges()) out.emplace_back(e, resolving_pair_set(d, e.u, e.v));
    return out;
}

inline std::vector<std::pair<Edge, VertexSet>> local_neighborhoods(const Graph& g) {
    return local_neighborhoods(g, DistMatrix(g));
}

/// R(u,v) for every unordered pair u < v.
inline std::vector<std::pair<Edge, VertexSet>> pair_neighborhoods(const DistMatrix& d) {
    std::vector<std::pair<Edge, VertexSet>> out;
    const std::size_t n = d.order();
    out.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(Edge{u, v}, resolving_pair_set(d, u, v));
    return out;
}

/// l(G) = min |L(uv)| over edges. Needs a connected graph with an edge.
inline std::size_t l_parameter(const Graph& g, const DistMatrix& d) {
    if (g.size() == 0) throw GraphError("l(G) needs at least one edge");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const Edge& e : g.edges()) best = std::min(best, resolving_pair_set(d, e.u, e.v).count());
    return best;
}
inline std::size_t l_parameter(const Graph& g) { return l_parameter(g, DistMatrix(g)); }

/// r(G) = min |R(u,v)| over all distinct pairs.
inline std::size_t r_parameter(const Graph& g, const DistMatrix& d) {
    if (g.order() < 2) throw GraphError("r(G) needs at least two vertices");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) best = std::min(best, resolving_pair_set(d, u, v).count());
    return best;
}
inline std::size_t r_parameter(const Graph& g) { return r_parameter(g, DistMatrix(g)); }

inline bool is_local_resolving_set(const Graph& g, const DistMatrix& d, const VertexSet& w) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return w.intersects(resolving_pair_set(d, e.u, e.v)); });
}
inline bool is_local_resolving_set(const Graph& g, const VertexSet& w) {
    return is_local_resolving_set(g, DistMatrix(g), w);
}

inline bool is_resolving_set(const DistMatrix& d, const VertexSet& w) {
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = u + 1; v < d.order(); ++v)
            if (!w.intersects(resolving_pair_set(d, u, v))) return false;
    return true;
}

struct ResolveReport {
    std::string graph;
    std::vector<std::pair<Edge, VertexSet>> local;
    std::size_t l_G = 0;
    std::size_t r_G = 0;
    std::optional<std::vector<std::pair<Edge, VertexSet>>> pairs;
};

inline ResolveReport resolve_report(const Graph& g, bool with_pairs = false) {
    const DistMatrix d(g);
    ResolveReport rep;
    rep.graph = g.name();
    rep.local = local_neighborhoods(g, d);
    rep.l_G = l_parameter(g, d);
    rep.r_G = r_parameter(g, d);
    if (with_pairs) rep.pairs = pair_neighborhoods(d);
    return rep;
}

/// Largest order integer_ldim / integer_dim will search.
inline constexpr std::size_t kHittingSetCeiling = 24;

class SearchCeilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/**
 * Exact minimum hitting set over at most 32 elements by iterative deepening.
 *
 * Each node branches on the members of the smallest unhit set, forbidding
 * earlier siblings in later branches. A candidate whose coverage of the
 * unhit sets is contained in a permitted sibling's coverage is skipped.
 * A greedy packing of pairwise-disjoint unhit sets bounds the remaining depth.
 */
class HittingSetSearch {
public:
    HittingSetSearch(std::vector<std::uint32_t> sets, std::size_t n) : sets_(std::move(sets)), n_(n) {
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    }

    std::uint32_t solve() {
        for (std::size_t k = 0; k <= n_; ++k)
            if (search(0, 0, k)) return best_;
        throw GraphError("hitting-set instance has an empty set");
    }

private:
    bool search(std::uint32_t chosen, std::uint32_t forbidden, std::size_t budget) {
        std::vector<std::uint32_t> unhit;
        for (std::uint32_t s : sets_)
            if (!(s & chosen)) unhit.push_back(s);
        if (unhit.empty()) {
            best_ = chosen;
            return true;
        }
        if (budget == 0 || disjoint_packing(unhit) > budget) return false;
        std::uint32_t branch = 0;
        int branch_size = 64;
        for (std::uint32_t s : unhit) {
            const std::uint32_t allowed = s & ~forbidden;
            if (allowed == 0) return false;
            if (std::popcount(allowed) < branch_size) {
                branch = allowed;
                branch_size = std::popcount(allowed);
            }
        }
        // coverage[v] = bitmask of unhit sets containing v (unhit.size() may exceed 64).
        const std::size_t words = (unhit.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> cover;
        std::vector<std::uint32_t> cands;
        for (std::uint32_t b = branch; b; b &= b - 1) {
            const auto v = static_cast<unsigned>(std::countr_zero(b));
            std::vector<std::uint64_t> c(words, 0);
            for (std::size_t i = 0; i < unhit.size(); ++i)
                if (unhit[i] >> v & 1U) c[i / 64] |= std::uint64_t{1} << (i % 64);
            cover.push_back(std::move(c));
            cands.push_back(v);
        }
        std::uint32_t local_forbidden = forbidden;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (dominated(cover, i)) {
                local_forbidden |= std::uint32_t{1} << cands[i];
                continue;
            }
            const std::uint32_t bit = std::uint32_t{1} << cands[i];
            if (search(chosen | bit, local_forbidden, budget - 1)) return true;
            local_forbidden |= bit;
        }
        return false;
    }

    static bool subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }

    static bool dominated(const std::vector<std::vector<std::uint64_t>>& cover, std::size_t i) {
        for (std::size_t j = 0; j < cover.size(); ++j) {
            if (j == i || !subset(cover[i], cover[j])) continue;
            // Equal coverage: keep the earliest candidate only.
            if (cover[i] != cover[j] || j < i) return true;
        }
        return false;
    }

    static std::size_t disjoint_packing(const std::vector<std::uint32_t>& unhit) {
        std::vector<std::uint32_t> order = unhit;
        std::sort(order.begin(), order.end(),
                  [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
        std::uint32_t used = 0;
        std::size_t count = 0;
        for (std::uint32_t s : order)
            if (!(s & used)) {
                used |= s;
                ++count;
            }
        return count;
    }

    std::vector<std::uint32_t> sets_;
    std::size_t n_;
    std::uint32_t best_ = 0;
};

inline std::uint32_t to_mask(const VertexSet& s) {
    std::uint32_t m = 0;
    s.for_each([&](Vertex v) { m |= std::uint32_t{1} << v; });
    return m;
}

inline VertexSet from_mask(std::uint32_t m, std::size_t n) {
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
    return s;
}

inline void check_search_ceiling(const Graph& g) {
    if (g.order() > kHittingSetCeiling)
        throw SearchCeilingError("exhaustive search limited to n <= " + std::to_string(kHittingSetCeiling) +
                                 ", got n=" + std::to_string(g.order()));
}

}  // namespace detail

/// A minimum local resolving set; its size is ldim(G).
inline VertexSet minimum_local_resolving_set(const Graph& g, const DistMatrix& d) {
    detail::check_search_ceiling(g);
    std::vector<std::uint32_t> sets;
    for (const Edge& e : g.edges()) sets.push_back(detail::to_mask(resolving_pair_set(d, e.u, e.v)));
    return detail::from_mask(detail::HittingSetSearch(std::move(sets), g.order()).solve(), g.order());
}

/// A minimum resolving set; its size is dim(G).
inline VertexSet minimum_resolving_set(const Graph& g, const DistMatrix& d) {
    detail::check_search_ceiling(g);
    std::vector<std::uint32_t> sets;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) sets.push_back(detail::to_mask(resolving_pair_set(d, u, v)));
    return detail::from_mask(detail::HittingSetSearch(std::move(sets), g.order()).solve(), g.order());
}

inline std::size_t integer_ldim(const Graph& g, const DistMatrix& d) {
    return minimum_local_resolving_set(g, d).count();
}
inline std::size_t integer_ldim(const Graph& g) { return integer_ldim(g, DistMatrix(g)); }

inline std::size_t integer_dim(const Graph& g, const DistMatrix& d) { return minimum_resolving_set(g, d).count(); }
inline std::size_t integer_dim(const Graph& g) { return integer_dim(g, DistMatrix(g)); }

}  // namespace fraclocdim
