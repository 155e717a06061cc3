#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fraclocdim/analysis.hpp"
#include "fraclocdim/families.hpp"
#include "fraclocdim/family_string.hpp"
#include "fraclocdim/graph.hpp"
#include "fraclocdim/lp.hpp"
#include "fraclocdim/rational.hpp"
#include "fraclocdim/resolve.hpp"
#include "fraclocdim/symmetry.hpp"

namespace fraclocdim {

enum class Status { pass, fail, skipped_hypothesis, skipped_ceiling };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_hypothesis: return "skipped(hypothesis-unmet)";
        case Status::skipped_ceiling: return "skipped(ceiling)";
    }
    return "?";
}

/// Outcome of one claim on one graph (or pair). A fail always carries a witness.
struct TheoremReport {
    std::string claim;
    std::vector<std::string> graphs;
    Status status = Status::pass;
    std::optional<std::string> witness;
    std::map<std::string, Rational> values;
    std::string note;

    bool failed() const { return status == Status::fail; }
    friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

namespace detail {

inline TheoremReport make_report(std::string claim, std::vector<std::string> graphs) {
    TheoremReport r;
    r.claim = std::move(claim);
    r.graphs = std::move(graphs);
    return r;
}

inline TheoremReport skipped(TheoremReport r, Status why, std::string note) {
    r.status = why;
    r.note = std::move(note);
    return r;
}

inline void fail(TheoremReport& r, std::string witness) {
    if (r.status == Status::fail) {
        *r.witness += "; " + witness;
        return;
    }
    r.status = Status::fail;
    r.witness = std::move(witness);
}

inline Rational ratio(std::size_t a, std::size_t b) {
    return Rational(static_cast<long long>(a), static_cast<long long>(b));
}

inline Rational count(std::size_t a) { return Rational(static_cast<long long>(a)); }

inline bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-graph claims

/// ldim_f(G) = 1 iff G is bipartite.
inline TheoremReport check_bipartite_iff_one(GraphAnalysis& a) {
    auto r = detail::make_report("bipartite-iff-one", {a.graph().name()});
    if (a.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    const bool one = a.ldim_f() == Rational(1);
    r.values["ldim_f"] = a.ldim_f();
    r.values["bipartite"] = a.bipartite() ? 1 : 0;
    if (one != a.bipartite())
        detail::fail(r, "ldim_f=" + a.ldim_f().to_string() + " but bipartite=" + (a.bipartite() ? "true" : "false"));
    return r;
}

/// Classes of the relation "x == y or x, y true twins", ordered by first member.
inline std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> cls(n, n);
    std::vector<std::vector<Vertex>> out;
    for (Vertex u = 0; u < n; ++u) {
        if (cls[u] != n) continue;
        cls[u] = out.size();
        out.push_back({u});
        const VertexSet nu = g.closed_neighbors(u);
        for (Vertex v = u + 1; v < n; ++v)
            if (cls[v] == n && g.closed_neighbors(v) == nu) {
                cls[v] = cls[u];
                out.back().push_back(v);
            }
    }
    return out;
}

struct TwinQuotient {
    std::vector<std::vector<Vertex>> classes;
    Graph quotient;
    Graph rebuilt;                 ///< quotient[class cliques]
    bool rebuild_matches = false;  ///< rebuilt equals the input under class-member order
    bool all_nontrivial_cliques = false;
};

/// Builds H and I = {K_|O|} from the twin classes and rebuilds H[I].
inline TwinQuotient twin_quotient(const Graph& g) {
    TwinQuotient t;
    t.classes = true_twin_classes(g);
    const std::size_t k = t.classes.size();
    std::vector<std::size_t> cls(g.order());
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex v : t.classes[i]) cls[v] = i;
    std::vector<std::pair<Vertex, Vertex>> qe;
    for (const Edge& e : g.edges())
        if (cls[e.u] != cls[e.v]) qe.emplace_back(cls[e.u], cls[e.v]);
    t.quotient = build_graph(k, qe, "twin-quotient(" + g.name() + ")");
    std::vector<Graph> fibers;
    t.all_nontrivial_cliques = true;
    for (const auto& c : t.classes) {
        fibers.push_back(make_complete(c.size()));
        VertexSet members(g.order());
        for (Vertex v : c) members.insert(v);
        const Graph induced = induced_subgraph(g, members);
        t.all_nontrivial_cliques = t.all_nontrivial_cliques && c.size() >= 2 && detail::is_complete(induced);
    }
    t.rebuilt = generalized_lexicographic(t.quotient, fibers);
    std::vector<Vertex> original;
    for (const auto& c : t.classes) original.insert(original.end(), c.begin(), c.end());
    t.rebuild_matches = t.rebuilt.order() == g.order();
    for (Vertex a = 0; t.rebuild_matches && a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (t.rebuilt.adjacent(a, b) != g.adjacent(original[a], original[b])) {
                t.rebuild_matches = false;
                break;
            }
    return t;
}

/// ldim_f = n/2  <=>  every vertex has a true twin  <=>  G = H[I] with non-trivial complete fibers.
inline TheoremReport check_half_n_characterization(GraphAnalysis& a) {
    auto r = detail::make_report("half-n-twins", {a.graph().name()});
    if (a.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    const bool half = a.ldim_f() == detail::ratio(a.n(), 2);
    const bool twins = every_vertex_has_true_twin(a.graph());
    const auto tq = twin_quotient(a.graph());
    const bool lex_form = tq.all_nontrivial_cliques && tq.rebuild_matches;
    r.values["ldim_f"] = a.ldim_f();
    r.values["twin_classes"] = detail::count(tq.classes.size());
    if (!tq.rebuild_matches) detail::fail(r, "twin quotient does not rebuild the graph");
    if (half != twins || twins != lex_form)
        detail::fail(r, std::string("ldim_f=n/2:") + (half ? "yes" : "no") + " all-twinned:" + (twins ? "yes" : "no") +
                            " lex-form:" + (lex_form ? "yes" : "no"));
    return r;
}

/**
 * For vertex-disjoint cliques W_1..W_k (|W_i| >= 3):
 * ldim_f = sum |W_i|/2  <=>  every edge outside the cliques has L(uv) containing
 * L(xy) for some clique edge xy.
 */
inline TheoremReport check_clique_theorem(GraphAnalysis& a, const std::vector<VertexSet>& cliques) {
    auto r = detail::make_report("clique-sum", {a.graph().name()});
    const Graph& g = a.graph();
    std::vector<std::size_t> owner(g.order(), cliques.size());
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const auto& w = cliques[i];
        if (w.size() != g.order()) throw std::invalid_argument("clique width does not match graph order");
        if (w.count() < 3) throw std::invalid_argument("clique " + w.to_string() + " has fewer than 3 vertices");
        if (!detail::is_complete(induced_subgraph(g, w)))
            throw std::invalid_argument("vertex set " + w.to_string() + " is not a clique");
        w.for_each([&](Vertex v) {
            if (owner[v] != cliques.size()) throw std::invalid_argument("cliques are not vertex-disjoint");
            owner[v] = i;
        });
    }
    if (cliques.empty()) return detail::skipped(r, Status::skipped_hypothesis, "no clique of size >= 3 given");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");

    std::size_t total = 0;
    for (const auto& w : cliques) total += w.count();
    const Rational target = detail::ratio(total, 2);
    const bool value_matches = a.ldim_f() == target;

    std::vector<std::vector<const VertexSet*>> clique_sets(cliques.size());
    for (const auto& [e, l] : a.local())
        if (owner[e.u] == owner[e.v] && owner[e.u] != cliques.size()) clique_sets[owner[e.u]].push_back(&l);
    bool condition = true;
    std::string first_bad;
    for (const auto& [e, l] : a.local()) {
        if (owner[e.u] == owner[e.v] && owner[e.u] != cliques.size()) continue;
        bool dominated = false;
        for (const auto& sets : clique_sets)
            for (const VertexSet* s : sets) dominated = dominated || s->is_subset_of(l);
        if (!dominated && condition) {
            condition = false;
            first_bad = e.to_string();
        }
    }
    r.values["ldim_f"] = a.ldim_f();
    r.values["clique_half_sum"] = target;
    if (value_matches != condition)
        detail::fail(r, "value-equality:" + std::string(value_matches ? "yes" : "no") + " containment-condition:" +
                            (condition ? "yes" : "no") + (first_bad.empty() ? "" : " (first uncovered edge " + first_bad + ")"));
    return r;
}

/// ldim_f(G) - 1 <= ldim_f(G - v) for every vertex whose removal keeps G connected.
inline TheoremReport check_vertex_deletion(GraphAnalysis& a, std::optional<Vertex> only = std::nullopt) {
    auto r = detail::make_report("vertex-deletion", {a.graph().name()});
    if (a.n() < 3) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 3");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    std::vector<Vertex> cut, checked;
    for (Vertex v = 0; v < a.n(); ++v) {
        if (only && *only != v) continue;
        const Graph gv = delete_vertex(a.graph(), v);
        if (!is_connected(gv)) {
            cut.push_back(v);
            continue;
        }
        checked.push_back(v);
        const Rational reduced = ldim_f(gv).value;
        if (a.ldim_f() - Rational(1) > reduced)
            detail::fail(r, "v=" + std::to_string(v) + ": ldim_f(G)=" + a.ldim_f().to_string() + ", ldim_f(G-v)=" +
                                reduced.to_string());
    }
    r.values["ldim_f"] = a.ldim_f();
    r.values["checked"] = detail::count(checked.size());
    r.values["skipped_cut_vertices"] = detail::count(cut.size());
    if (!cut.empty()) {
        r.note = "cut vertices skipped:";
        for (Vertex v : cut) r.note += " " + std::to_string(v);
    }
    if (checked.empty() && r.status != Status::fail)
        return detail::skipped(r, Status::skipped_hypothesis, r.note.empty() ? "no vertex checked" : r.note);
    return r;
}

/// {u,v} subset of L(uv) for every edge, and L(uv) = {u,v} iff u, v are true twins.
inline TheoremReport check_twin_neighborhood(GraphAnalysis& a) {
    auto r = detail::make_report("twin-neighborhood", {a.graph().name()});
    const Graph& g = a.graph();
    for (const auto& [e, l] : a.local()) {
        if (!l.contains(e.u) || !l.contains(e.v)) detail::fail(r, "L" + e.to_string() + " misses an endpoint");
        const bool exact_pair = l.count() == 2;
        if (exact_pair != true_twins(g, e.u, e.v))
            detail::fail(r, "edge " + e.to_string() + ": |L|=" + std::to_string(l.count()) + " but twins=" +
                                (exact_pair ? "false" : "true"));
    }
    r.values["edges"] = detail::count(g.size());
    return r;
}

/// L(uv) = V(G) for all edges iff G is bipartite.
inline TheoremReport check_bipartite_full_neighborhood(GraphAnalysis& a) {
    auto r = detail::make_report("bipartite-full-neighborhood", {a.graph().name()});
    if (a.graph().size() == 0) return detail::skipped(r, Status::skipped_hypothesis, "no edges");
    const bool all_full = std::all_of(a.local().begin(), a.local().end(),
                                      [&](const auto& el) { return el.second.count() == a.n(); });
    if (all_full != a.bipartite())
        detail::fail(r, std::string("all L = V: ") + (all_full ? "yes" : "no") + ", bipartite: " +
                            (a.bipartite() ? "yes" : "no"));
    return r;
}

/// r(G) <= l(G), with l(G) >= 2 and r(G) >= 1.
inline TheoremReport check_r_le_l(GraphAnalysis& a) {
    auto r = detail::make_report("r-le-l", {a.graph().name()});
    if (a.graph().size() == 0) return detail::skipped(r, Status::skipped_hypothesis, "no edges");
    r.values["l"] = detail::count(a.l());
    r.values["r"] = detail::count(a.r());
    if (a.r() > a.l() || a.l() < 2 || a.r() < 1)
        detail::fail(r, "l=" + std::to_string(a.l()) + " r=" + std::to_string(a.r()));
    return r;
}

/// 1 <= ldim_f <= ldim <= n-1, ldim <= dim, and ldim_f <= dim_f.
inline TheoremReport check_basic_bounds(GraphAnalysis& a) {
    auto r = detail::make_report("basic-bounds", {a.graph().name()});
    if (a.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    const Rational lf = a.ldim_f(), df = a.dim_f();
    r.values["ldim_f"] = lf;
    r.values["dim_f"] = df;
    if (lf < Rational(1)) detail::fail(r, "ldim_f < 1");
    if (lf > df) detail::fail(r, "ldim_f > dim_f");
    if (a.search_in_range()) {
        const auto ld = a.ldim(), dm = a.dim();
        r.values["ldim"] = detail::count(ld);
        r.values["dim"] = detail::count(dm);
        if (lf > detail::count(ld)) detail::fail(r, "ldim_f > ldim");
        if (ld > a.n() - 1) detail::fail(r, "ldim > n-1");
        if (ld > dm) detail::fail(r, "ldim > dim");
        if (df > detail::count(dm)) detail::fail(r, "dim_f > dim");
    } else {
        r.note = "integer dimensions above search ceiling; fractional bounds only";
    }
    return r;
}

/// ldim_f <= n / l(G).
inline TheoremReport check_l_upper_bound(GraphAnalysis& a) {
    auto r = detail::make_report("l-upper-bound", {a.graph().name()});
    if (a.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    const Rational bound = detail::ratio(a.n(), a.l());
    r.values["ldim_f"] = a.ldim_f();
    r.values["n_over_l"] = bound;
    if (a.ldim_f() > bound) detail::fail(r, "ldim_f=" + a.ldim_f().to_string() + " > n/l=" + bound.to_string());
    return r;
}

/// ldim_f <= n/2.
inline TheoremReport check_half_n_upper_bound(GraphAnalysis& a) {
    auto r = detail::make_report("half-n-upper-bound", {a.graph().name()});
    if (a.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    if (!a.lp_in_range()) return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    r.values["ldim_f"] = a.ldim_f();
    if (a.ldim_f() > detail::ratio(a.n(), 2)) detail::fail(r, "ldim_f=" + a.ldim_f().to_string() + " > n/2");
    return r;
}

/// ldim_f >= n / (n - ldim + 1).
inline TheoremReport check_ldim_lower_bound(GraphAnalysis& a) {
    auto r = detail::make_report("ldim-lower-bound", {a.graph().name()});
    if (a.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    if (!a.lp_in_range() || !a.search_in_range())
        return detail::skipped(r, Status::skipped_ceiling, "LP or search ceiling");
    const Rational bound = detail::ratio(a.n(), a.n() - a.ldim() + 1);
    r.values["ldim_f"] = a.ldim_f();
    r.values["lower_bound"] = bound;
    if (a.ldim_f() < bound) detail::fail(r, "ldim_f=" + a.ldim_f().to_string() + " < " + bound.to_string());
    return r;
}

/// Every U with |U| = n - ldim + 1 contains L(xy) for some edge xy.
inline TheoremReport check_subset_neighborhood(GraphAnalysis& a) {
    auto r = detail::make_report("subset-neighborhood", {a.graph().name()});
    if (a.graph().size() == 0) return detail::skipped(r, Status::skipped_hypothesis, "no edges");
    if (a.n() > a.limits().subset_order || !a.search_in_range())
        return detail::skipped(r, Status::skipped_ceiling, "subset enumeration ceiling");
    const std::size_t n = a.n(), s = n - a.ldim() + 1;
    std::vector<std::uint32_t> masks;
    for (const auto& [e, l] : a.local()) masks.push_back(detail::to_mask(l));
    std::size_t subsets = 0;
    for (std::uint32_t u = 0; u < (std::uint32_t{1} << n); ++u) {
        if (static_cast<std::size_t>(std::popcount(u)) != s) continue;
        ++subsets;
        if (std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & ~u) == 0; })) {
            detail::fail(r, "U=" + detail::from_mask(u, n).to_string() + " contains no L(xy)");
            break;
        }
    }
    r.values["subset_size"] = detail::count(s);
    r.values["subsets"] = detail::count(subsets);
    return r;
}

inline bool is_odd_cycle(const Graph& g) {
    if (g.order() < 3 || g.order() % 2 == 0 || g.size() != g.order() || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

/// l(G) = n - 1 iff G is an odd cycle.
inline TheoremReport check_odd_cycle_l(GraphAnalysis& a) {
    auto r = detail::make_report("odd-cycle-l", {a.graph().name()});
    if (a.graph().size() == 0) return detail::skipped(r, Status::skipped_hypothesis, "no edges");
    const bool lhs = a.l() == a.n() - 1, rhs = is_odd_cycle(a.graph());
    r.values["l"] = detail::count(a.l());
    if (lhs != rhs)
        detail::fail(r, "l=" + std::to_string(a.l()) + " n=" + std::to_string(a.n()) + " odd-cycle=" + (rhs ? "yes" : "no"));
    return r;
}

/// Vertex-transitive graphs have ldim_f = n / l(G).
inline TheoremReport check_vertex_transitive(GraphAnalysis& a) {
    auto r = detail::make_report("vertex-transitive", {a.graph().name()});
    if (!a.symmetry_in_range() || !a.lp_in_range())
        return detail::skipped(r, Status::skipped_ceiling, "symmetry or LP ceiling");
    if (a.n() < 2 || !a.orbit_partition().transitive)
        return detail::skipped(r, Status::skipped_hypothesis, "not vertex-transitive");
    const Rational expected = detail::ratio(a.n(), a.l());
    r.values["ldim_f"] = a.ldim_f();
    r.values["n_over_l"] = expected;
    if (a.ldim_f() != expected) detail::fail(r, "ldim_f=" + a.ldim_f().to_string() + " != n/l=" + expected.to_string());
    return r;
}

/// Vertex-transitive with l(G) = r(G) gives ldim_f = dim_f.
inline TheoremReport check_vertex_transitive_dim(GraphAnalysis& a) {
    auto r = detail::make_report("vertex-transitive-dim", {a.graph().name()});
    if (!a.symmetry_in_range() || !a.lp_in_range())
        return detail::skipped(r, Status::skipped_ceiling, "symmetry or LP ceiling");
    if (a.n() < 2 || !a.orbit_partition().transitive)
        return detail::skipped(r, Status::skipped_hypothesis, "not vertex-transitive");
    if (a.l() != a.r()) return detail::skipped(r, Status::skipped_hypothesis, "l(G) != r(G)");
    r.values["ldim_f"] = a.ldim_f();
    r.values["dim_f"] = a.dim_f();
    if (a.ldim_f() != a.dim_f()) detail::fail(r, "ldim_f=" + a.ldim_f().to_string() + " != dim_f=" + a.dim_f().to_string());
    return r;
}

// ---------------------------------------------------------------------------
// Pair claims

/// If both operands have ldim_f = n_i/2 then so does their join.
inline TheoremReport check_join_theta(GraphAnalysis& a1, GraphAnalysis& a2) {
    auto r = detail::make_report("join-closure", {a1.graph().name(), a2.graph().name()});
    if (a1.n() < 2 || a2.n() < 2) return detail::skipped(r, Status::skipped_hypothesis, "operands need n >= 2");
    if (!a1.lp_in_range() || !a2.lp_in_range() || a1.n() + a2.n() > a1.limits().max_lp_order)
        return detail::skipped(r, Status::skipped_ceiling, "LP ceiling");
    if (!is_connected(a1.graph()) || !is_connected(a2.graph()))
        return detail::skipped(r, Status::skipped_hypothesis, "operands must be connected");
    if (a1.ldim_f() != detail::ratio(a1.n(), 2) || a2.ldim_f() != detail::ratio(a2.n(), 2))
        return detail::skipped(r, Status::skipped_hypothesis, "an operand is not in Theta");
    const Rational joined = ldim_f(join(a1.graph(), a2.graph())).value;
    const Rational expected = detail::ratio(a1.n() + a2.n(), 2);
    r.values["ldim_f_join"] = joined;
    r.values["expected"] = expected;
    if (joined != expected) detail::fail(r, "ldim_f(join)=" + joined.to_string() + " != " + expected.to_string());
    return r;
}

/// Exact-value checks on K_{n,n} and, for even n >= 4, C_n.
inline TheoremReport check_gap_witnesses(std::size_t n) {
    auto r = detail::make_report("gap-witnesses", {"n=" + std::to_string(n)});
    if (n < 2) return detail::skipped(r, Status::skipped_hypothesis, "needs n >= 2");
    const Graph knn = make_complete_multipartite({n, n});
    const Rational dk = dim_f(knn).value, lk = ldim_f(knn).value;
    r.values["dim_f(K_n,n)"] = dk;
    r.values["ldim_f(K_n,n)"] = lk;
    if (dk != detail::count(n)) detail::fail(r, "dim_f(K_n,n)=" + dk.to_string());
    if (lk != Rational(1)) detail::fail(r, "ldim_f(K_n,n)=" + lk.to_string());
    if (n >= 4 && n % 2 == 0) {
        const Graph c = make_cycle(n);
        const Rational dc = dim_f(c).value, lc = ldim_f(c).value;
        r.values["dim_f(C_n)"] = dc;
        r.values["ldim_f(C_n)"] = lc;
        if (dc != detail::ratio(n, n - 2)) detail::fail(r, "dim_f(C_n)=" + dc.to_string());
        if (lc != Rational(1)) detail::fail(r, "ldim_f(C_n)=" + lc.to_string());
    } else {
        r.note = "cycle witness needs even n >= 4";
    }
    return r;
}

namespace detail {

/// Product vertex set A x B in the (u, v) -> u*|V(H)| + v numbering.
inline VertexSet layer_product(const VertexSet& a, const VertexSet& b) {
    const std::size_t n2 = b.size();
    VertexSet s(a.size() * n2);
    a.for_each([&](Vertex u) { b.for_each([&](Vertex v) { s.insert(product_index(u, v, n2)); }); });
    return s;
}

}  // namespace detail

/// BFS distances on G⊠H equal max(d_G, d_H).
inline TheoremReport check_strong_distance(const Graph& g, const Graph& h, const Limits& limits = {}) {
    auto r = detail::make_report("strong-distance", {g.name(), h.name()});
    if (g.order() * h.order() > limits.product_order) return detail::skipped(r, Status::skipped_ceiling, "product ceiling");
    const DistMatrix dg(g), dh(h), ds(strong_product(g, h));
    const std::size_t n2 = h.order();
    for (Vertex a = 0; a < ds.order() && !r.failed(); ++a)
        for (Vertex b = 0; b < ds.order(); ++b)
            if (ds(a, b) != std::max(dg(a / n2, b / n2), dh(a % n2, b % n2))) {
                detail::fail(r, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
                break;
            }
    return r;
}

/// BFS distances on G□H equal d_G + d_H.
inline TheoremReport check_cartesian_distance(const Graph& g, const Graph& h, const Limits& limits = {}) {
    auto r = detail::make_report("cartesian-distance", {g.name(), h.name()});
    if (g.order() * h.order() > limits.product_order) return detail::skipped(r, Status::skipped_ceiling, "product ceiling");
    const DistMatrix dg(g), dh(h), dc(cartesian_product(g, h));
    const std::size_t n2 = h.order();
    for (Vertex a = 0; a < dc.order() && !r.failed(); ++a)
        for (Vertex b = 0; b < dc.order(); ++b)
            if (dc(a, b) != dg(a / n2, b / n2) + dh(a % n2, b % n2)) {
                detail::fail(r, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
                break;
            }
    return r;
}

/**
 * Layer containment for G⊠H: every product edge (u_i,v_j)(u_k,v_l) has L inside
 * V(G) x L_H(v_jv_l) when i = k, L_G(u_iu_k) x V(H) when j = l, and the union
 * of the two otherwise. Checked as containment only.
 */
inline TheoremReport check_strong_layer_lemma(const Graph& g, const Graph& h, const Limits& limits = {}) {
    auto r = detail::make_report("strong-layer", {g.name(), h.name()});
    if (g.order() < 2 || h.order() < 2) return detail::skipped(r, Status::skipped_hypothesis, "factors need order >= 2");
    if (g.order() * h.order() > limits.product_order) return detail::skipped(r, Status::skipped_ceiling, "product ceiling");
    const Graph p = strong_product(g, h);
    const DistMatrix dg(g), dh(h), dp(p);
    const std::size_t n1 = g.order(), n2 = h.order();
    const VertexSet all_g = VertexSet::full(n1), all_h = VertexSet::full(n2);
    std::size_t equal = 0, same_g = 0;
    for (const Edge& e : p.edges()) {
        const Vertex ui = e.u / n2, vj = e.u % n2, uk = e.v / n2, vl = e.v % n2;
        const VertexSet lp = resolving_pair_set(dp, e.u, e.v);
        VertexSet bound(p.order());
        if (ui == uk) {
            bound = detail::layer_product(all_g, resolving_pair_set(dh, vj, vl));
            ++same_g;
        } else if (vj == vl) {
            bound = detail::layer_product(resolving_pair_set(dg, ui, uk), all_h);
        } else {
            bound = detail::layer_product(all_g, resolving_pair_set(dh, vj, vl)) |
                    detail::layer_product(resolving_pair_set(dg, ui, uk), all_h);
        }
        if (!lp.is_subset_of(bound)) {
            detail::fail(r, "edge " + e.to_string() + ": vertex " + std::to_string((lp - bound).first()) +
                                " outside the layer bound");
            break;
        }
        if (lp == bound) ++equal;
    }
    r.values["edges"] = detail::count(p.size());
    r.values["edges_with_equality"] = detail::count(equal);
    r.values["same_g_coordinate_edges"] = detail::count(same_g);
    return r;
}

namespace detail {

/// First edge of G□H whose L differs from V(G) x L_H or L_G x V(H), if any.
inline std::optional<Edge> first_cartesian_layer_mismatch(const Graph& p, const DistMatrix& dp, const DistMatrix& dg,
                                                          const DistMatrix& dh, std::size_t n1, std::size_t n2) {
    const VertexSet all_g = VertexSet::full(n1), all_h = VertexSet::full(n2);
    for (const Edge& e : p.edges()) {
        const Vertex ui = e.u / n2, vj = e.u % n2, uk = e.v / n2, vl = e.v % n2;
        const VertexSet expected = ui == uk ? layer_product(all_g, resolving_pair_set(dh, vj, vl))
                                            : layer_product(resolving_pair_set(dg, ui, uk), all_h);
        if (resolving_pair_set(dp, e.u, e.v) != expected) return e;
    }
    return std::nullopt;
}

}  // namespace detail

/// Layer formula for G□H, checked as set equality on every product edge.
inline TheoremReport check_cartesian_layer_lemma(const Graph& g, const Graph& h, const Limits& limits = {}) {
    auto r = detail::make_report("cartesian-layer", {g.name(), h.name()});
    if (g.order() * h.order() > limits.product_order) return detail::skipped(r, Status::skipped_ceiling, "product ceiling");
    const Graph p = cartesian_product(g, h);
    if (const auto bad = detail::first_cartesian_layer_mismatch(p, DistMatrix(p), DistMatrix(g), DistMatrix(h),
                                                                g.order(), h.order()))
        detail::fail(r, "edge " + bad->to_string() + " neighborhood differs from the layer formula");
    r.values["edges"] = detail::count(p.size());
    return r;
}

/**
 * For every edge xy some w has (d(y,w) >= k and x on a y-w geodesic) or
 * (d(x,w) >= k and y on an x-w geodesic).
 */
inline bool check_adjacency_k_resolved(const Graph& g, std::size_t k, const DistMatrix& d) {
    for (const Edge& e : g.edges()) {
        bool ok = false;
        for (Vertex w = 0; w < g.order() && !ok; ++w) {
            ok = (d(e.v, w) >= k && d(e.v, e.u) + d(e.u, w) == d(e.v, w)) ||
                 (d(e.u, w) >= k && d(e.u, e.v) + d(e.v, w) == d(e.u, w));
        }
        if (!ok) return false;
    }
    return true;
}
inline bool check_adjacency_k_resolved(const Graph& g, std::size_t k) {
    return check_adjacency_k_resolved(g, k, DistMatrix(g));
}

/**
 * Strong-product bounds:
 *   2 <= ldim_f(G⊠H) <= n1 ldim_f(H) + n2 ldim_f(G) - 2 ldim_f(G) ldim_f(H)   always;
 *   ldim_f(G⊠H) <= n2 ldim_f(G) and L(edge) inside L_G(u_iu_r) x V(H)         when
 *   diam(G) < k and H is adjacency k-resolved for some k <= |V(H)|.
 * The containment is only defined for edges whose G-coordinates differ; edges
 * inside one H-layer are counted but not tested.
 */
inline TheoremReport check_strong_bounds(GraphAnalysis& ag, GraphAnalysis& ah, const Limits& limits = {}) {
    const Graph& g = ag.graph();
    const Graph& h = ah.graph();
    auto r = detail::make_report("strong-bounds", {g.name(), h.name()});
    if (g.order() < 2 || h.order() < 2) return detail::skipped(r, Status::skipped_hypothesis, "factors need order >= 2");
    const std::size_t n1 = g.order(), n2 = h.order();
    if (n1 * n2 > limits.product_order || n1 * n2 > limits.max_lp_order || !ag.lp_in_range() || !ah.lp_in_range())
        return detail::skipped(r, Status::skipped_ceiling, "product or LP ceiling");
    const Graph p = strong_product(g, h);
    const DistMatrix dp(p);
    const Rational lg = ag.ldim_f(), lh = ah.ldim_f(), lp = ldim_f(p, dp).value;
    const Rational upper = detail::count(n1) * lh + detail::count(n2) * lg - Rational(2) * lg * lh;
    r.values["ldim_f(G)"] = lg;
    r.values["ldim_f(H)"] = lh;
    r.values["ldim_f(GxH)"] = lp;
    r.values["sandwich_upper"] = upper;
    if (lp < Rational(2)) detail::fail(r, "sandwich: ldim_f=" + lp.to_string() + " < 2");
    if (lp > upper) detail::fail(r, "sandwich: ldim_f=" + lp.to_string() + " > " + upper.to_string());

    const std::size_t diam = ag.dist().diameter();
    std::optional<std::size_t> k;
    for (std::size_t t = diam + 1; t <= n2 && !k; ++t)
        if (check_adjacency_k_resolved(h, t, ah.dist())) k = t;
    if (!k) {
        r.note = "H not adjacency k-resolved for any k > diam(G); diameter bound not applicable";
        return r;
    }
    r.values["k"] = detail::count(*k);
    const Rational diameter_bound = detail::count(n2) * lg;
    r.values["diameter_bound"] = diameter_bound;
    if (lp > diameter_bound) detail::fail(r, "diameter bound: ldim_f=" + lp.to_string() + " > " + diameter_bound.to_string());

    std::size_t untested = 0;
    for (const Edge& e : p.edges()) {
        const Vertex ui = e.u / n2, ur = e.v / n2;
        if (ui == ur) {
            ++untested;
            continue;
        }
        const VertexSet bound = detail::layer_product(resolving_pair_set(ag.dist(), ui, ur), VertexSet::full(n2));
        const VertexSet l = resolving_pair_set(dp, e.u, e.v);
        if (!l.is_subset_of(bound)) {
            detail::fail(r, "containment: edge " + e.to_string() + " resolved by vertex " +
                                std::to_string((l - bound).first()) + " outside L_G x V(H)");
            break;
        }
    }
    r.values["containment_untested_h_layer_edges"] = detail::count(untested);
    return r;
}

/**
 * Cartesian-product claims, each applied when its hypothesis holds:
 *  (a) L(edge) = V(G) x L_H(v_jv_l) or L_G(u_iu_k) x V(H), as set equality;
 *  (b) ldim_f(G□H) >= ldim_f(G); >= |V(H)|/2 when ldim_f(H) = |V(H)|/2;
 *      >= max(ldim_f(G), ldim_f(H)) when both factors have ldim_f = order/2;
 *  (c) G = K_2: ldim_f(K_2□H) <= ldim_f(H);
 *  (d) H = K_n, n >= 3, |V(G)| < n: ldim_f = n/2;
 *  (e) G = K_k, H = K_n, 2 <= k <= n, n >= 3: ldim_f = n/2.
 */
inline TheoremReport check_cartesian_claims(GraphAnalysis& ag, GraphAnalysis& ah, const Limits& limits = {}) {
    const Graph& g = ag.graph();
    const Graph& h = ah.graph();
    auto r = detail::make_report("cartesian-claims", {g.name(), h.name()});
    const std::size_t n1 = g.order(), n2 = h.order();
    if (n1 * n2 > limits.product_order) return detail::skipped(r, Status::skipped_ceiling, "product ceiling");
    const Graph p = cartesian_product(g, h);
    const DistMatrix dp(p);
    if (const auto bad = detail::first_cartesian_layer_mismatch(p, dp, ag.dist(), ah.dist(), n1, n2))
        detail::fail(r, "(a) edge " + bad->to_string() + " neighborhood differs from the layer formula");
    r.values["edges"] = detail::count(p.size());
    if (n1 < 2 || n2 < 2) return r;
    if (n1 * n2 > limits.max_lp_order || !ag.lp_in_range() || !ah.lp_in_range()) {
        r.note = "LP ceiling: value claims not evaluated";
        return r;
    }
    const Rational lg = ag.ldim_f(), lh = ah.ldim_f(), lp = ldim_f(p, dp).value;
    r.values["ldim_f(G)"] = lg;
    r.values["ldim_f(H)"] = lh;
    r.values["ldim_f(GxH)"] = lp;
    const bool g_theta = lg == detail::ratio(n1, 2), h_theta = lh == detail::ratio(n2, 2);
    if (lp < lg) detail::fail(r, "(b) ldim_f(GxH)=" + lp.to_string() + " < ldim_f(G)=" + lg.to_string());
    if (h_theta && lp < detail::ratio(n2, 2)) detail::fail(r, "(b) ldim_f(GxH) < |V(H)|/2");
    if (g_theta && h_theta && lp < std::max(lg, lh)) detail::fail(r, "(b) ldim_f(GxH) < max(ldim_f(G), ldim_f(H))");
    std::string applied = "a,b";
    if (n1 == 2 && detail::is_complete(g)) {
        applied += ",c";
        if (lp > lh) detail::fail(r, "(c) ldim_f(K2xH)=" + lp.to_string() + " > ldim_f(H)=" + lh.to_string());
    }
    const bool h_complete = detail::is_complete(h) && n2 >= 3;
    if (h_complete && n1 < n2) {
        applied += ",d";
        if (lp != detail::ratio(n2, 2)) detail::fail(r, "(d) ldim_f(GxK_n)=" + lp.to_string() + " != n/2");
    }
    if (h_complete && detail::is_complete(g) && n1 >= 2 && n1 <= n2) {
        applied += ",e";
        if (lp != detail::ratio(n2, 2)) detail::fail(r, "(e) ldim_f(K_kxK_n)=" + lp.to_string() + " != n/2");
    }
    r.note = "parts applied: " + applied;
    return r;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace detail {

/// Counts from the all-graphs enumeration for one order.
struct EnumerationCounts {
    std::size_t order = 0;
    std::uint64_t graphs = 0;
    std::uint64_t connected = 0;
    std::uint64_t l_is_n_minus_1 = 0;
    std::uint64_t odd_cycles = 0;
    std::optional<std::uint64_t> mismatch_mask;
};

/**
 * Enumerates every labelled graph on n <= 8 vertices as a bitmask over the
 * pairs (a, b), a < b, in lexicographic order, and compares l(G) = n - 1
 * against "G is an odd cycle" on the connected ones. An edge with two common
 * neighbours already has |L| <= n - 2, which settles most dense graphs
 * before any distances are computed.
 */
inline EnumerationCounts enumerate_odd_cycle_claim(std::size_t n) {
    if (n < 2 || n > 8) throw std::invalid_argument("exhaustive enumeration supports 2 <= n <= 8");
    EnumerationCounts c;
    c.order = n;
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const std::size_t m = pairs.size();
    // Adjacency of all n rows packed one byte per vertex; built from 7-bit chunks.
    constexpr std::size_t kChunk = 7;
    const std::size_t chunks = (m + kChunk - 1) / kChunk;
    std::vector<std::array<std::uint64_t, 128>> table(chunks);
    for (std::size_t ch = 0; ch < chunks; ++ch)
        for (unsigned val = 0; val < 128; ++val) {
            std::uint64_t packed = 0;
            for (std::size_t bit = 0; bit < kChunk; ++bit) {
                const std::size_t idx = ch * kChunk + bit;
                if (idx >= m || !(val >> bit & 1U)) continue;
                const auto [a, b] = pairs[idx];
                packed |= std::uint64_t{1} << (8 * a + b);
                packed |= std::uint64_t{1} << (8 * b + a);
            }
            table[ch][val] = packed;
        }
    const std::uint8_t all = static_cast<std::uint8_t>((1U << n) - 1);
    const std::uint64_t total = std::uint64_t{1} << m;
    c.graphs = total;
    std::array<std::uint8_t, 8> adj{};
    std::array<std::array<std::uint8_t, 8>, 8> dist{};
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t packed = 0;
        for (std::size_t ch = 0; ch < chunks; ++ch) packed |= table[ch][(mask >> (ch * kChunk)) & 127U];
        for (std::size_t v = 0; v < n; ++v) adj[v] = static_cast<std::uint8_t>(packed >> (8 * v));

        std::uint8_t reach = 1, frontier = 1;
        while (frontier) {
            std::uint8_t next = 0;
            for (std::uint8_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            frontier = next & ~reach;
            reach |= next;
        }
        if (reach != all) continue;
        ++c.connected;

        const auto edges = static_cast<std::size_t>(std::popcount(mask));
        bool cycle = edges == n && n % 2 == 1;
        for (std::size_t v = 0; cycle && v < n; ++v) cycle = std::popcount(adj[v]) == 2;
        if (cycle) ++c.odd_cycles;

        bool dense = false;
        for (std::size_t u = 0; u < n && !dense; ++u)
            for (std::uint8_t nb = adj[u] & static_cast<std::uint8_t>(~((2U << u) - 1)); nb; nb &= nb - 1)
                if (std::popcount(static_cast<unsigned>(adj[u] & adj[std::countr_zero(nb)])) >= 2) {
                    dense = true;
                    break;
                }
        bool l_hit = false;
        if (!dense) {
            for (std::size_t s = 0; s < n; ++s) {
                std::uint8_t seen = static_cast<std::uint8_t>(1U << s), front = seen;
                dist[s][s] = 0;
                for (std::uint8_t level = 1; front; ++level) {
                    std::uint8_t next = 0;
                    for (std::uint8_t f = front; f; f &= f - 1) next |= adj[std::countr_zero(f)];
                    next &= ~seen;
                    for (std::uint8_t x = next; x; x &= x - 1) dist[s][std::countr_zero(x)] = level;
                    seen |= next;
                    front = next;
                }
            }
            std::size_t l = n;
            for (std::size_t u = 0; u < n; ++u)
                for (std::uint8_t nb = adj[u] & static_cast<std::uint8_t>(~((2U << u) - 1)); nb; nb &= nb - 1) {
                    const auto v = static_cast<std::size_t>(std::countr_zero(nb));
                    std::size_t size = 0;
                    for (std::size_t x = 0; x < n; ++x) size += dist[u][x] != dist[v][x];
                    l = std::min(l, size);
                }
            l_hit = l == n - 1;
        }
        if (l_hit) ++c.l_is_n_minus_1;
        if (l_hit != cycle && !c.mismatch_mask) c.mismatch_mask = mask;
    }
    return c;
}

}  // namespace detail

/// l(G) = n - 1 iff G is an odd cycle, over every connected labelled graph with 2 <= n <= max_n.
inline TheoremReport check_odd_cycle_exhaustive(std::size_t max_n) {
    auto r = detail::make_report("odd-cycle-exhaustive", {"all-connected(n<=" + std::to_string(max_n) + ")"});
    if (max_n > 8) return detail::skipped(r, Status::skipped_ceiling, "enumeration supports n <= 8");
    std::uint64_t connected = 0;
    for (std::size_t n = 2; n <= max_n; ++n) {
        const auto c = detail::enumerate_odd_cycle_claim(n);
        connected += c.connected;
        r.values["connected(n=" + std::to_string(n) + ")"] = Rational(static_cast<long long>(c.connected));
        r.values["l=n-1(n=" + std::to_string(n) + ")"] = Rational(static_cast<long long>(c.l_is_n_minus_1));
        if (c.mismatch_mask) detail::fail(r, "n=" + std::to_string(n) + " edge mask " + std::to_string(*c.mismatch_mask));
    }
    r.values["connected_total"] = Rational(static_cast<long long>(connected));
    return r;
}

// ---------------------------------------------------------------------------
// Suites

enum class ClaimScope { graph, pair, global };

struct ClaimInfo {
    std::string id;
    ClaimScope scope;
    std::string statement;
};

/// Every claim the harness knows, in suite order.
inline const std::vector<ClaimInfo>& claim_catalog() {
    static const std::vector<ClaimInfo> catalog = {
        {"bipartite-iff-one", ClaimScope::graph, "ldim_f(G) = 1 iff G is bipartite"},
        {"half-n-twins", ClaimScope::graph,
         "ldim_f(G) = n/2 iff every vertex has a true twin iff G = H[I] with non-trivial complete fibers"},
        {"clique-sum", ClaimScope::graph,
         "for disjoint cliques W_i (|W_i| >= 3): ldim_f = sum |W_i|/2 iff every other edge's L contains some L(xy), xy in a W_i"},
        {"vertex-deletion", ClaimScope::graph, "ldim_f(G) - 1 <= ldim_f(G - v) for non-cut v"},
        {"twin-neighborhood", ClaimScope::graph, "{u,v} in L(uv); L(uv) = {u,v} iff u, v true twins"},
        {"bipartite-full-neighborhood", ClaimScope::graph, "L(uv) = V(G) for all edges iff G bipartite"},
        {"r-le-l", ClaimScope::graph, "r(G) <= l(G)"},
        {"basic-bounds", ClaimScope::graph, "1 <= ldim_f <= ldim <= n-1 and ldim_f <= dim_f"},
        {"l-upper-bound", ClaimScope::graph, "ldim_f(G) <= n / l(G)"},
        {"half-n-upper-bound", ClaimScope::graph, "ldim_f(G) <= n/2"},
        {"ldim-lower-bound", ClaimScope::graph, "ldim_f(G) >= n / (n - ldim(G) + 1)"},
        {"subset-neighborhood", ClaimScope::graph, "every U with |U| = n - ldim + 1 contains some L(xy)"},
        {"odd-cycle-l", ClaimScope::graph, "l(G) = n - 1 iff G is an odd cycle"},
        {"vertex-transitive", ClaimScope::graph, "vertex-transitive G has ldim_f = n / l(G)"},
        {"vertex-transitive-dim", ClaimScope::graph, "vertex-transitive G with l(G) = r(G) has ldim_f = dim_f"},
        {"join-closure", ClaimScope::pair, "G1, G2 with ldim_f = n_i/2 give ldim_f(G1 + G2) = (n1 + n2)/2"},
        {"strong-distance", ClaimScope::pair, "d in G strong H is the max of the factor distances"},
        {"cartesian-distance", ClaimScope::pair, "d in G box H is the sum of the factor distances"},
        {"strong-layer", ClaimScope::pair, "L in G strong H lies inside the layer products of the factor neighborhoods"},
        {"cartesian-layer", ClaimScope::pair, "L in G box H equals V(G) x L_H or L_G x V(H)"},
        {"strong-bounds", ClaimScope::pair,
         "2 <= ldim_f(G strong H) <= n1 ldim_f(H) + n2 ldim_f(G) - 2 ldim_f(G) ldim_f(H); diameter/k-resolved bound and containment"},
        {"cartesian-claims", ClaimScope::pair,
         "L formula in G box H; monotonicity; K2 box G bound; G box K_n and K_k box K_n equal n/2"},
        {"gap-witnesses", ClaimScope::global, "dim_f(K_n,n) = n, ldim_f(K_n,n) = 1; dim_f(C_n) = n/(n-2), ldim_f(C_n) = 1 for even n"},
        {"odd-cycle-exhaustive", ClaimScope::global, "l(G) = n - 1 iff odd cycle, over all connected graphs up to the enumeration order"},
    };
    return catalog;
}

inline const ClaimInfo& claim_info(const std::string& id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown claim id '" + id + "'");
}

/**
 * Default corpus: small members of every family plus products and joins whose
 * order stays inside the LP ceiling.
 */
inline std::vector<std::string> builtin_corpus() {
    return {
        "path(2)", "path(3)", "path(4)", "path(5)", "path(6)",
        "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "cycle(7)", "cycle(8)", "cycle(9)",
        "complete(3)", "complete(4)", "complete(5)", "complete(6)", "complete(7)", "complete(8)",
        "multipartite(2,3)", "multipartite(3,3)", "multipartite(2,2,2)", "multipartite(2,3,4)",
        "multipartite(2,2,3,3)", "multipartite(1,2,3)",
        "star(3)", "star(4)",
        "fan(3)", "fan(4)", "fan(5)", "fan(6)", "fan(7)",
        "lollipop(3,1)", "lollipop(3,2)", "lollipop(4,2)", "lollipop(4,3)", "lollipop(5,2)",
        "hypercube(2)", "hypercube(3)", "hypercube(4)",
        "petersen",
        "join(complete(1),cycle(4))", "join(complete(3),complete(4))", "join(strong(complete(2),complete(2)),complete(2))",
        "join(path(3),complete(3))", "join(cycle(5),complete(2))",
        "lex(path(3),complete(2),complete(2),complete(2))", "lex(cycle(5),complete(2),complete(1),complete(3),complete(1),complete(2))",
        "strong(complete(2),complete(2))", "strong(complete(2),complete(3))", "strong(complete(3),complete(4))",
        "strong(path(2),path(3))", "strong(cycle(4),complete(2))", "strong(cycle(5),complete(2))",
        "strong(path(3),path(3))", "strong(complete(3),path(6))", "strong(path(3),cycle(5))",
        "strong(petersen,complete(2))", "strong(cycle(5),cycle(5))", "strong(complete(2),path(5))",
        "cartesian(path(4),path(5))", "cartesian(complete(2),cycle(3))", "cartesian(complete(2),cycle(5))",
        "cartesian(complete(2),cycle(7))", "cartesian(path(3),complete(4))", "cartesian(complete(3),complete(5))",
        "cartesian(cycle(4),complete(5))", "cartesian(complete(2),complete(3))", "cartesian(complete(3),complete(3))",
        "cartesian(complete(4),complete(4))", "cartesian(complete(2),petersen)", "cartesian(cycle(5),cycle(5))",
        "cartesian(complete(2),fan(4))", "cartesian(path(3),cycle(5))", "cartesian(complete(2),complete(4))",
    };
}

/// Cliques the clique-sum claim uses for a corpus entry: K_n itself, or the K_m head of a lollipop.
inline std::vector<VertexSet> builtin_cliques(const FamilySpec& spec, const Graph& g) {
    if (spec.kind == FamilyKind::complete && g.order() >= 3) return {VertexSet::full(g.order())};
    if (spec.kind == FamilyKind::lollipop) {
        VertexSet w(g.order());
        for (Vertex v = 0; v < static_cast<Vertex>(spec.params[0]); ++v) w.insert(v);
        return {w};
    }
    return {};
}

/// Order-indices the gap-witness claim runs on.
inline std::vector<std::size_t> gap_witness_orders() { return {2, 3, 4, 5, 6, 8}; }

/**
 * Runs claims over corpus entries. Graph claims apply to every entry; pair
 * claims apply to entries whose top-level kind matches (joins, strong,
 * cartesian); global claims run once. Output order is claim-major in the
 * order given, then corpus order.
 */
inline std::vector<TheoremReport> run_suite(const std::vector<FamilySpec>& corpus, const std::vector<std::string>& claims,
                                            const Limits& limits = {}) {
    struct Entry {
        FamilySpec spec;
        std::shared_ptr<GraphAnalysis> analysis;
        std::vector<std::shared_ptr<GraphAnalysis>> operands;
    };
    std::map<std::string, std::shared_ptr<GraphAnalysis>> cache;
    auto analyse = [&](const FamilySpec& s) {
        const std::string key = s.to_string();
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::make_shared<GraphAnalysis>(make_family(s), limits)).first;
        return it->second;
    };
    for (const auto& c : claims) claim_info(c);
    if (corpus.empty()) {
        bool any_global = false;
        for (const auto& c : claims) any_global = any_global || claim_info(c).scope == ClaimScope::global;
        if (!any_global) return {};
    }
    std::vector<Entry> entries;
    for (const auto& s : corpus) {
        Entry e{s, analyse(s), {}};
        if (s.kind == FamilyKind::join || s.kind == FamilyKind::strong_product || s.kind == FamilyKind::cartesian_product)
            for (const auto& op : s.operands) e.operands.push_back(analyse(op));
        entries.push_back(std::move(e));
    }

    std::vector<TheoremReport> out;
    for (const auto& id : claims) {
        const auto& info = claim_info(id);
        if (info.scope == ClaimScope::global) {
            if (id == "gap-witnesses")
                for (std::size_t n : gap_witness_orders()) out.push_back(check_gap_witnesses(n));
            if (id == "odd-cycle-exhaustive") out.push_back(check_odd_cycle_exhaustive(limits.exhaustive_order));
            continue;
        }
        for (auto& e : entries) {
            GraphAnalysis& a = *e.analysis;
            if (info.scope == ClaimScope::pair) {
                const bool join_entry = e.spec.kind == FamilyKind::join;
                const bool strong_entry = e.spec.kind == FamilyKind::strong_product;
                const bool cart_entry = e.spec.kind == FamilyKind::cartesian_product;
                if (id == "join-closure" && join_entry) out.push_back(check_join_theta(*e.operands[0], *e.operands[1]));
                if (id == "strong-distance" && (strong_entry || cart_entry))
                    out.push_back(check_strong_distance(e.operands[0]->graph(), e.operands[1]->graph(), limits));
                if (id == "cartesian-distance" && (strong_entry || cart_entry))
                    out.push_back(check_cartesian_distance(e.operands[0]->graph(), e.operands[1]->graph(), limits));
                if (id == "strong-layer" && (strong_entry || cart_entry))
                    out.push_back(check_strong_layer_lemma(e.operands[0]->graph(), e.operands[1]->graph(), limits));
                if (id == "cartesian-layer" && (strong_entry || cart_entry))
                    out.push_back(check_cartesian_layer_lemma(e.operands[0]->graph(), e.operands[1]->graph(), limits));
                if (id == "strong-bounds" && strong_entry)
                    out.push_back(check_strong_bounds(*e.operands[0], *e.operands[1], limits));
                if (id == "cartesian-claims" && cart_entry)
                    out.push_back(check_cartesian_claims(*e.operands[0], *e.operands[1], limits));
                continue;
            }
            if (!is_connected(a.graph())) {
                out.push_back(detail::skipped(detail::make_report(id, {a.graph().name()}), Status::skipped_hypothesis,
                                              "graph is disconnected"));
                continue;
            }
            if (id == "bipartite-iff-one") out.push_back(check_bipartite_iff_one(a));
            else if (id == "half-n-twins") out.push_back(check_half_n_characterization(a));
            else if (id == "clique-sum") out.push_back(check_clique_theorem(a, builtin_cliques(e.spec, a.graph())));
            else if (id == "vertex-deletion") out.push_back(check_vertex_deletion(a));
            else if (id == "twin-neighborhood") out.push_back(check_twin_neighborhood(a));
            else if (id == "bipartite-full-neighborhood") out.push_back(check_bipartite_full_neighborhood(a));
            else if (id == "r-le-l") out.push_back(check_r_le_l(a));
            else if (id == "basic-bounds") out.push_back(check_basic_bounds(a));
            else if (id == "l-upper-bound") out.push_back(check_l_upper_bound(a));
            else if (id == "half-n-upper-bound") out.push_back(check_half_n_upper_bound(a));
            else if (id == "ldim-lower-bound") out.push_back(check_ldim_lower_bound(a));
            else if (id == "subset-neighborhood") out.push_back(check_subset_neighborhood(a));
            else if (id == "odd-cycle-l") out.push_back(check_odd_cycle_l(a));
            else if (id == "vertex-transitive") out.push_back(check_vertex_transitive(a));
            else if (id == "vertex-transitive-dim") out.push_back(check_vertex_transitive_dim(a));
        }
    }
    return out;
}

inline std::vector<std::string> all_claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : claim_catalog()) ids.push_back(c.id);
    return ids;
}

inline std::vector<FamilySpec> parse_corpus(const std::vector<std::string>& lines) {
    std::vector<FamilySpec> out;
    for (const auto& raw : lines) {
        std::string line = raw.substr(0, raw.find('#'));
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (!line.empty()) out.push_back(parse_family_string(line));
    }
    return out;
}

}  // namespace fraclocdim
