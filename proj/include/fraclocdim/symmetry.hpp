#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fraclocdim/graph.hpp"

namespace fraclocdim {

/// Largest order the automorphism search accepts.
inline constexpr std::size_t kSymmetryCeiling = 64;

struct OrbitPartition {
    std::vector<std::size_t> orbit_of;  ///< orbit id per vertex, numbered by first member
    std::size_t count = 0;
    bool transitive = false;

    std::vector<std::vector<Vertex>> orbits() const {
        std::vector<std::vector<Vertex>> out(count);
        for (Vertex v = 0; v < orbit_of.size(); ++v) out[orbit_of[v]].push_back(v);
        return out;
    }
};

/**
 * Backtracking search for adjacency-preserving permutations of one graph.
 *
 * Vertices are assigned in order of distance from the source, then by
 * descending degree. A vertex x may only go to w if their sorted distance
 * rows agree and d(x, y) == d(w, image(y)) for every assigned y; since
 * distance 1 means adjacency, a complete assignment is an automorphism.
 */
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& g) : g_(g), d_(g), n_(g.order()) {
        if (n_ > kSymmetryCeiling)
            throw GraphError("automorphism search limited to n <= " + std::to_string(kSymmetryCeiling) +
                             ", got n=" + std::to_string(n_));
        std::vector<std::vector<std::uint32_t>> profile(n_);
        for (Vertex v = 0; v < n_; ++v) {
            profile[v].assign(d_.row(v).begin(), d_.row(v).end());
            std::sort(profile[v].begin(), profile[v].end());
        }
        const std::size_t levels = d_.diameter() + 1;
        same_profile_.assign(n_, 0);
        at_distance_.assign(n_, std::vector<std::uint64_t>(levels, 0));
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = 0; b < n_; ++b) {
                if (profile[a] == profile[b]) same_profile_[a] |= bit(b);
                at_distance_[a][d_(a, b)] |= bit(b);
            }
    }

    bool maps(Vertex u, Vertex v) {
        if (u >= n_ || v >= n_) throw GraphError("vertex out of range");
        if (!(same_profile_[u] & bit(v))) return false;
        order_.clear();
        order_.push_back(u);
        std::vector<Vertex> rest;
        for (Vertex x = 0; x < n_; ++x)
            if (x != u) rest.push_back(x);
        std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
            if (d_(u, a) != d_(u, b)) return d_(u, a) < d_(u, b);
            return g_.degree(a) > g_.degree(b);
        });
        order_.insert(order_.end(), rest.begin(), rest.end());
        image_.assign(n_, n_);
        image_[u] = v;
        return extend(1, bit(v));
    }

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

    bool extend(std::size_t depth, std::uint64_t used) {
        if (depth == n_) return true;
        const Vertex x = order_[depth];
        std::uint64_t cand = same_profile_[x] & ~used;
        for (std::size_t i = 0; i < depth && cand; ++i) {
            const Vertex y = order_[i];
            cand &= at_distance_[image_[y]][d_(x, y)];
        }
        for (; cand; cand &= cand - 1) {
            const auto w = static_cast<Vertex>(std::countr_zero(cand));
            image_[x] = w;
            if (extend(depth + 1, used | bit(w))) return true;
        }
        image_[x] = n_;
        return false;
    }

    const Graph& g_;
    DistMatrix d_;
    std::size_t n_;
    std::vector<std::uint64_t> same_profile_;
    std::vector<std::vector<std::uint64_t>> at_distance_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
};

inline bool exists_automorphism_mapping(const Graph& g, Vertex u, Vertex v) {
    return AutomorphismSearch(g).maps(u, v);
}

/// Orbits of the automorphism group, one representative test per tentative class.
inline OrbitPartition orbits(const Graph& g) {
    AutomorphismSearch search(g);
    OrbitPartition p;
    p.orbit_of.assign(g.order(), 0);
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t id = reps.size();
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (search.maps(reps[k], v)) {
                id = k;
                break;
            }
        if (id == reps.size()) reps.push_back(v);
        p.orbit_of[v] = id;
    }
    p.count = reps.size();
    p.transitive = p.count == 1;
    return p;
}

inline bool is_vertex_transitive(const Graph& g) { return orbits(g).transitive; }

}  // namespace fraclocdim
