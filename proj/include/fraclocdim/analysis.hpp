#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fraclocdim/graph.hpp"
#include "fraclocdim/lp.hpp"
#include "fraclocdim/rational.hpp"
#include "fraclocdim/resolve.hpp"
#include "fraclocdim/symmetry.hpp"

namespace fraclocdim {

/// Size ceilings shared by the harness and the CLI.
struct Limits {
    std::size_t max_lp_order = 200;         ///< largest order for ldim_f / dim_f
    std::size_t product_order = 400;        ///< largest product for edge-by-edge lemma checks
    std::size_t search_order = kHittingSetCeiling;
    std::size_t symmetry_order = kSymmetryCeiling;
    std::size_t exhaustive_order = 8;       ///< largest n in the all-graphs enumeration
    std::size_t subset_order = 10;          ///< largest n for exhaustive subset checks
};

/**
 * Memoised invariants of one connected graph. Everything is computed on
 * first request; getters throw the underlying error when a ceiling is hit.
 */
class GraphAnalysis {
public:
    explicit GraphAnalysis(Graph g, Limits limits = {}) : g_(std::move(g)), limits_(limits) {}

    const Graph& graph() const { return g_; }
    std::size_t n() const { return g_.order(); }
    const Limits& limits() const { return limits_; }

    const DistMatrix& dist() {
        if (!dist_) dist_ = DistMatrix(g_);
        return *dist_;
    }
    const std::vector<std::pair<Edge, VertexSet>>& local() {
        if (!local_) local_ = local_neighborhoods(g_, dist());
        return *local_;
    }
    std::size_t l() {
        if (!l_) l_ = l_parameter(g_, dist());
        return *l_;
    }
    std::size_t r() {
        if (!r_) r_ = r_parameter(g_, dist());
        return *r_;
    }
    bool bipartite() {
        if (!bipartite_) bipartite_ = is_bipartite(g_);
        return *bipartite_;
    }

    bool lp_in_range() const { return n() <= limits_.max_lp_order; }
    bool search_in_range() const { return n() <= limits_.search_order; }
    bool symmetry_in_range() const { return n() <= limits_.symmetry_order; }

    const LpSolution& ldim_f_solution() {
        require_lp();
        if (!ldim_f_) ldim_f_ = fraclocdim::ldim_f(g_, dist());
        return *ldim_f_;
    }
    const Rational& ldim_f() { return ldim_f_solution().value; }

    const LpSolution& dim_f_solution() {
        require_lp();
        if (!dim_f_) dim_f_ = fraclocdim::dim_f(g_, dist());
        return *dim_f_;
    }
    const Rational& dim_f() { return dim_f_solution().value; }

    std::size_t ldim() {
        if (!search_in_range()) throw SearchCeilingError("ldim search ceiling exceeded");
        if (!ldim_) ldim_ = integer_ldim(g_, dist());
        return *ldim_;
    }
    std::size_t dim() {
        if (!search_in_range()) throw SearchCeilingError("dim search ceiling exceeded");
        if (!dim_) dim_ = integer_dim(g_, dist());
        return *dim_;
    }

    const OrbitPartition& orbit_partition() {
        if (!orbits_) orbits_ = orbits(g_);
        return *orbits_;
    }

private:
    void require_lp() const {
        if (!lp_in_range())
            throw LpError("graph order " + std::to_string(n()) + " exceeds LP ceiling " +
                          std::to_string(limits_.max_lp_order));
    }

    Graph g_;
    Limits limits_;
    std::optional<DistMatrix> dist_;
    std::optional<std::vector<std::pair<Edge, VertexSet>>> local_;
    std::optional<std::size_t> l_, r_, ldim_, dim_;
    std::optional<bool> bipartite_;
    std::optional<LpSolution> ldim_f_, dim_f_;
    std::optional<OrbitPartition> orbits_;
};

}  // namespace fraclocdim
