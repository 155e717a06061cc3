#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fraclocdim/graph.hpp"

namespace fraclocdim {

enum class FamilyKind {
    path,
    cycle,
    complete,
    complete_multipartite,
    star,
    fan,
    lollipop,
    hypercube,
    petersen,
    join,
    strong_product,
    cartesian_product,
    generalized_lexicographic,
};

/// Token used for each kind in family strings such as "cartesian(complete(2),cycle(5))".
inline const char* family_token(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_multipartite: return "multipartite";
        case FamilyKind::star: return "star";
        case FamilyKind::fan: return "fan";
        case FamilyKind::lollipop: return "lollipop";
        case FamilyKind::hypercube: return "hypercube";
        case FamilyKind::petersen: return "petersen";
        case FamilyKind::join: return "join";
        case FamilyKind::strong_product: return "strong";
        case FamilyKind::cartesian_product: return "cartesian";
        case FamilyKind::generalized_lexicographic: return "lex";
    }
    return "?";
}

/**
 * A named graph family with its parameters. Integer-parameter kinds use
 * params; join and the products use operands (lex takes the base graph
 * followed by one fiber per base vertex).
 */
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<long long> params;
    std::vector<FamilySpec> operands;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

    /// Canonical family string; zero-argument kinds render without parentheses.
    std::string to_string() const {
        std::string s = family_token(kind);
        if (params.empty() && operands.empty()) return s;
        s += '(';
        bool first = true;
        for (long long p : params) {
            if (!first) s += ',';
            s += std::to_string(p);
            first = false;
        }
        for (const auto& op : operands) {
            if (!first) s += ',';
            s += op.to_string();
            first = false;
        }
        return s + ')';
    }
};

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline void require(bool ok, const std::string& message) {
    if (!ok) throw FamilyError(message);
}

inline void require_connected(const Graph& g, const char* what) {
    require(is_connected(g), std::string(what) + " operand '" + g.name() + "' must be connected");
}

}  // namespace detail

inline Graph make_path(std::size_t n) {
    detail::require(n >= 1, "path needs n >= 1");
    detail::EdgeList e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e, "path(" + std::to_string(n) + ")");
}

inline Graph make_cycle(std::size_t n) {
    detail::require(n >= 3, "cycle needs n >= 3");
    detail::EdgeList e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e, "cycle(" + std::to_string(n) + ")");
}

inline Graph make_complete(std::size_t n) {
    detail::require(n >= 1, "complete needs n >= 1");
    detail::EdgeList e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e, "complete(" + std::to_string(n) + ")");
}

/// Parts occupy consecutive index ranges in the given order.
inline Graph make_complete_multipartite(const std::vector<std::size_t>& parts) {
    detail::require(parts.size() >= 2, "multipartite needs at least two parts");
    std::vector<std::size_t> part_of;
    std::string name = "multipartite(";
    for (std::size_t p = 0; p < parts.size(); ++p) {
        detail::require(parts[p] >= 1, "multipartite part sizes must be >= 1");
        part_of.insert(part_of.end(), parts[p], p);
        name += (p ? "," : "") + std::to_string(parts[p]);
    }
    detail::EdgeList e;
    for (Vertex i = 0; i < part_of.size(); ++i)
        for (Vertex j = i + 1; j < part_of.size(); ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return build_graph(part_of.size(), e, name + ")");
}

/// K_{1,k}: hub 0, leaves 1..k.
inline Graph make_star(std::size_t k) {
    detail::require(k >= 1, "star needs k >= 1");
    detail::EdgeList e;
    for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
    return build_graph(k + 1, e, "star(" + std::to_string(k) + ")");
}

/// F_{1,n} = K_1 + P_n: path on 0..n-1, hub last (index n).
inline Graph make_fan(std::size_t n) {
    detail::require(n >= 2, "fan needs n >= 2");
    detail::EdgeList e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, n);
    return build_graph(n + 1, e, "fan(" + std::to_string(n) + ")");
}

/// L_{m,n}: clique on 0..m-1, path on m..m+n-1, bridge (m-1, m).
inline Graph make_lollipop(std::size_t m, std::size_t n) {
    detail::require(m >= 3 && n >= 1, "lollipop needs m >= 3 and n >= 1");
    detail::EdgeList e;
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = i + 1; j < m; ++j) e.emplace_back(i, j);
    for (Vertex i = m - 1; i + 1 < m + n; ++i) e.emplace_back(i, i + 1);
    return build_graph(m + n, e, "lollipop(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

/// Q_d on binary codes 0..2^d-1; adjacent iff Hamming distance 1.
inline Graph make_hypercube(std::size_t d) {
    detail::require(d >= 1 && d <= 12, "hypercube needs 1 <= d <= 12");
    const std::size_t n = std::size_t{1} << d;
    detail::EdgeList e;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t b = 0; b < d; ++b)
            if (const Vertex w = v ^ (std::size_t{1} << b); v < w) e.emplace_back(v, w);
    return build_graph(n, e, "hypercube(" + std::to_string(d) + ")");
}

/**
 * Kneser graph K(5,2). Vertex i is the i-th 2-subset of {0..4} in
 * lexicographic order ({0,1}, {0,2}, ..., {3,4}); disjoint subsets are adjacent.
 */
inline Graph make_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    detail::EdgeList e;
    for (Vertex i = 0; i < subsets.size(); ++i)
        for (Vertex j = i + 1; j < subsets.size(); ++j) {
            const auto [a, b] = subsets[i];
            const auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) e.emplace_back(i, j);
        }
    return build_graph(10, e, "petersen");
}

/// G1 + G2: g1 on 0..n1-1, g2 shifted by n1, every cross pair joined.
inline Graph join(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    detail::EdgeList e;
    for (const Edge& x : g1.edges()) e.emplace_back(x.u, x.v);
    for (const Edge& x : g2.edges()) e.emplace_back(n1 + x.u, n1 + x.v);
    for (Vertex a = 0; a < n1; ++a)
        for (Vertex b = 0; b < n2; ++b) e.emplace_back(a, n1 + b);
    return build_graph(n1 + n2, e, "join(" + g1.name() + "," + g2.name() + ")");
}

/// Index of product vertex (u, v): u * |V(H)| + v.
inline Vertex product_index(Vertex u, Vertex v, std::size_t h_order) { return u * h_order + v; }

inline Graph strong_product(const Graph& g, const Graph& h) {
    detail::require_connected(g, "strong product");
    detail::require_connected(h, "strong product");
    const std::size_t n1 = g.order(), n2 = h.order();
    detail::require(n1 * n2 <= kMaxGraphOrder, "strong product exceeds the graph order ceiling");
    detail::EdgeList e;
    for (Vertex u1 = 0; u1 < n1; ++u1)
        for (Vertex v1 = 0; v1 < n2; ++v1) {
            const VertexSet gu = g.closed_neighbors(u1);
            const VertexSet hv = h.closed_neighbors(v1);
            gu.for_each([&](Vertex u2) {
                hv.for_each([&](Vertex v2) {
                    const Vertex a = product_index(u1, v1, n2), b = product_index(u2, v2, n2);
                    if (a < b) e.emplace_back(a, b);
                });
            });
        }
    return build_graph(n1 * n2, e, "strong(" + g.name() + "," + h.name() + ")");
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
    detail::require_connected(g, "cartesian product");
    detail::require_connected(h, "cartesian product");
    const std::size_t n1 = g.order(), n2 = h.order();
    detail::require(n1 * n2 <= kMaxGraphOrder, "cartesian product exceeds the graph order ceiling");
    detail::EdgeList e;
    for (const Edge& x : g.edges())
        for (Vertex v = 0; v < n2; ++v) e.emplace_back(product_index(x.u, v, n2), product_index(x.v, v, n2));
    for (Vertex u = 0; u < n1; ++u)
        for (const Edge& y : h.edges()) e.emplace_back(product_index(u, y.u, n2), product_index(u, y.v, n2));
    return build_graph(n1 * n2, e, "cartesian(" + g.name() + "," + h.name() + ")");
}

/**
 * H[I]: vertex (v, w) for each v in H and w in fiber v, numbered by v then w.
 * (v1,w1)(v2,w2) is an edge iff v1v2 in E(H), or v1 == v2 and w1w2 in E(I_v1).
 */
inline Graph generalized_lexicographic(const Graph& h, const std::vector<Graph>& fibers) {
    detail::require(fibers.size() == h.order(), "lex needs one fiber per base vertex: got " +
                                                    std::to_string(fibers.size()) + " for " +
                                                    std::to_string(h.order()) + " base vertices");
    std::vector<Vertex> offset(h.order() + 1, 0);
    for (Vertex v = 0; v < h.order(); ++v) offset[v + 1] = offset[v] + fibers[v].order();
    detail::EdgeList e;
    std::string name = "lex(" + h.name();
    for (Vertex v = 0; v < h.order(); ++v) {
        for (const Edge& x : fibers[v].edges()) e.emplace_back(offset[v] + x.u, offset[v] + x.v);
        name += "," + fibers[v].name();
    }
    for (const Edge& x : h.edges())
        for (Vertex a = offset[x.u]; a < offset[x.u + 1]; ++a)
            for (Vertex b = offset[x.v]; b < offset[x.v + 1]; ++b) e.emplace_back(a, b);
    return build_graph(offset.back(), e, name + ")");
}

/// Checks arity and parameter ranges for spec and all nested operands.
inline void validate_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    const auto& ops = spec.operands;
    const std::string token = family_token(spec.kind);
    auto arity = [&](std::size_t np, std::size_t nops) {
        detail::require(p.size() == np && ops.size() == nops,
                        token + " takes " + std::to_string(np + nops) + " argument(s)");
    };
    auto at_least = [&](std::size_t i, long long lo, const char* what) {
        detail::require(p[i] >= lo, token + " needs " + what + " >= " + std::to_string(lo) + ", got " +
                                        std::to_string(p[i]));
    };
    switch (spec.kind) {
        case FamilyKind::path: arity(1, 0); at_least(0, 1, "n"); break;
        case FamilyKind::cycle: arity(1, 0); at_least(0, 3, "n"); break;
        case FamilyKind::complete: arity(1, 0); at_least(0, 1, "n"); break;
        case FamilyKind::complete_multipartite:
            detail::require(ops.empty() && p.size() >= 2, "multipartite needs at least two integer part sizes");
            for (std::size_t i = 0; i < p.size(); ++i) at_least(i, 1, "each part size");
            break;
        case FamilyKind::star: arity(1, 0); at_least(0, 1, "k"); break;
        case FamilyKind::fan: arity(1, 0); at_least(0, 2, "n"); break;
        case FamilyKind::lollipop: arity(2, 0); at_least(0, 3, "m"); at_least(1, 1, "n"); break;
        case FamilyKind::hypercube:
            arity(1, 0);
            at_least(0, 1, "d");
            detail::require(p[0] <= 12, "hypercube needs d <= 12");
            break;
        case FamilyKind::petersen: arity(0, 0); break;
        case FamilyKind::join:
        case FamilyKind::strong_product:
        case FamilyKind::cartesian_product: arity(0, 2); break;
        case FamilyKind::generalized_lexicographic:
            detail::require(p.empty() && !ops.empty(), "lex takes a base graph followed by its fibers");
            break;
    }
    for (const auto& op : ops) validate_family(op);
}

inline Graph make_family(const FamilySpec& spec) {
    validate_family(spec);
    const auto& p = spec.params;
    const auto& ops = spec.operands;
    auto param = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
    Graph g;
    switch (spec.kind) {
        case FamilyKind::path: g = make_path(param(0)); break;
        case FamilyKind::cycle: g = make_cycle(param(0)); break;
        case FamilyKind::complete: g = make_complete(param(0)); break;
        case FamilyKind::complete_multipartite: {
            std::vector<std::size_t> parts;
            for (std::size_t i = 0; i < p.size(); ++i) parts.push_back(param(i));
            g = make_complete_multipartite(parts);
            break;
        }
        case FamilyKind::star: g = make_star(param(0)); break;
        case FamilyKind::fan: g = make_fan(param(0)); break;
        case FamilyKind::lollipop: g = make_lollipop(param(0), param(1)); break;
        case FamilyKind::hypercube: g = make_hypercube(param(0)); break;
        case FamilyKind::petersen: g = make_petersen(); break;
        case FamilyKind::join: g = join(make_family(ops[0]), make_family(ops[1])); break;
        case FamilyKind::strong_product:
            g = strong_product(make_family(ops[0]), make_family(ops[1]));
            break;
        case FamilyKind::cartesian_product:
            g = cartesian_product(make_family(ops[0]), make_family(ops[1]));
            break;
        case FamilyKind::generalized_lexicographic: {
            std::vector<Graph> fibers;
            for (std::size_t i = 1; i < ops.size(); ++i) fibers.push_back(make_family(ops[i]));
            g = generalized_lexicographic(make_family(ops[0]), fibers);
            break;
        }
    }
    return g.renamed(spec.to_string());
}

/// Largest product order distance_check_products accepts.
inline constexpr std::size_t kProductCheckCeiling = 400;

/**
 * BFS distances on G⊠H and G□H compared against max(d_G, d_H) and
 * d_G + d_H for every vertex pair.
 */
inline bool distance_check_products(const Graph& g, const Graph& h) {
    if (g.order() * h.order() > kProductCheckCeiling)
        throw FamilyError("product order " + std::to_string(g.order() * h.order()) + " exceeds ceiling " +
                          std::to_string(kProductCheckCeiling));
    const DistMatrix dg(g), dh(h);
    const DistMatrix ds(strong_product(g, h)), dc(cartesian_product(g, h));
    const std::size_t n2 = h.order();
    for (Vertex u1 = 0; u1 < g.order(); ++u1)
        for (Vertex v1 = 0; v1 < n2; ++v1)
            for (Vertex u2 = 0; u2 < g.order(); ++u2)
                for (Vertex v2 = 0; v2 < n2; ++v2) {
                    const Vertex a = product_index(u1, v1, n2), b = product_index(u2, v2, n2);
                    if (ds(a, b) != std::max(dg(u1, u2), dh(v1, v2))) return false;
                    if (dc(a, b) != dg(u1, u2) + dh(v1, v2)) return false;
                }
    return true;
}

}  // namespace fraclocdim
