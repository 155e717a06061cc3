#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fraclocdim/graph.hpp"
#include "fraclocdim/rational.hpp"
#include "fraclocdim/resolve.hpp"

namespace fraclocdim {

class LpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a solve fails its own optimality certificate. Always a solver bug.
class DualityGapError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Covering program: minimise sum x_v subject to sum_{v in row} x_v >= 1 for
 * every row and x >= 0. Rows are 0/1 incidence vectors over num_vars columns.
 */
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<VertexSet> rows;
};

enum class RowReduction { none, dedup_only, dominance };

/**
 * Validates rows and removes duplicates and, with RowReduction::dominance,
 * every row that contains another row. Kept rows are ordered by size, then by
 * their bit pattern.
 */
inline LinearProgram build_covering_lp(std::vector<VertexSet> rows, std::size_t n,
                                       RowReduction reduction = RowReduction::dominance) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n)
            throw LpError("row " + std::to_string(i) + " has width " + std::to_string(rows[i].size()) +
                          ", expected " + std::to_string(n));
        if (rows[i].empty()) throw LpError("row " + std::to_string(i) + " is empty; the program is infeasible");
    }
    LinearProgram lp{n, {}};
    if (reduction == RowReduction::none) {
        lp.rows = std::move(rows);
        return lp;
    }
    std::vector<std::pair<std::size_t, VertexSet>> keyed;
    keyed.reserve(rows.size());
    for (auto& r : rows) keyed.emplace_back(r.count(), std::move(r));
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
    for (auto& [size, row] : keyed) {
        if (reduction == RowReduction::dominance &&
            std::any_of(lp.rows.begin(), lp.rows.end(), [&](const VertexSet& kept) { return kept.is_subset_of(row); }))
            continue;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

struct LpSolution {
    Rational value;
    std::vector<Rational> assignment;  ///< primal x, one entry per column
    std::vector<Rational> dual;        ///< packing y, one entry per row
    std::vector<std::size_t> tight_rows;
    std::size_t pivots = 0;
};

namespace detail {

/// Dense simplex tableau for max 1'y s.t. A'y <= 1, y >= 0, slack basis at y = 0.
class PackingSimplex {
public:
    explicit PackingSimplex(const LinearProgram& lp)
        : n_(lp.num_vars), m_(lp.rows.size()), cols_(m_ + n_),
          tab_(n_, std::vector<mpq_class>(cols_)), rhs_(n_, 1), obj_(cols_), basis_(n_) {
        for (std::size_t r = 0; r < m_; ++r) {
            lp.rows[r].for_each([&](Vertex v) { tab_[v][r] = 1; });
            obj_[r] = 1;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            tab_[v][m_ + v] = 1;
            basis_[v] = m_ + v;
        }
    }

    /// Runs Bland's rule to optimality; returns the pivot count.
    std::size_t run() {
        std::size_t pivots = 0;
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(obj_[j]) > 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_) return pivots;
            std::size_t leave = n_;
            mpq_class best_ratio;
            for (std::size_t i = 0; i < n_; ++i) {
                if (sgn(tab_[i][enter]) <= 0) continue;
                mpq_class ratio = rhs_[i] / tab_[i][enter];
                if (leave == n_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == n_) throw LpError("packing program unbounded; a covering row must be empty");
            pivot(leave, enter);
            ++pivots;
        }
    }

    mpq_class objective() const { return objective_; }

    /// Covering multipliers: x_v is minus the reduced cost of slack v.
    std::vector<mpq_class> primal() const {
        std::vector<mpq_class> x(n_);
        for (std::size_t v = 0; v < n_; ++v) x[v] = -obj_[m_ + v];
        return x;
    }

    std::vector<mpq_class> dual() const {
        std::vector<mpq_class> y(m_);
        for (std::size_t i = 0; i < n_; ++i)
            if (basis_[i] < m_) y[basis_[i]] = rhs_[i];
        return y;
    }

private:
    void pivot(std::size_t p, std::size_t enter) {
        auto& prow = tab_[p];
        const mpq_class inv = 1 / prow[enter];
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(prow[k]) != 0) {
                prow[k] *= inv;
                nz.push_back(k);
            }
        rhs_[p] *= inv;
        mpq_class factor, tmp;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == p || sgn(tab_[i][enter]) == 0) continue;
            factor = tab_[i][enter];
            auto& row = tab_[i];
            for (std::size_t k : nz) {
                tmp = factor * prow[k];
                row[k] -= tmp;
            }
            tmp = factor * rhs_[p];
            rhs_[i] -= tmp;
        }
        factor = obj_[enter];
        for (std::size_t k : nz) {
            tmp = factor * prow[k];
            obj_[k] -= tmp;
        }
        tmp = factor * rhs_[p];
        objective_ += tmp;
        basis_[p] = enter;
    }

    std::size_t n_, m_, cols_;
    std::vector<std::vector<mpq_class>> tab_;
    std::vector<mpq_class> rhs_;
    std::vector<mpq_class> obj_;
    std::vector<std::size_t> basis_;
    mpq_class objective_ = 0;
};

}  // namespace detail

/**
 * Exact optimum of a covering program, solved through its packing dual with
 * Bland's rule from the all-slack basis. The covering assignment is read off
 * the final reduced costs, clamped to [0,1], and re-verified: it must be
 * feasible, the dual must be feasible, and both objectives must agree.
 * Any violation throws DualityGapError.
 */
inline LpSolution solve_lp(const LinearProgram& lp) {
    if (lp.num_vars == 0 || lp.rows.empty()) throw LpError("cannot solve an empty covering program");
    for (const auto& r : lp.rows)
        if (r.empty() || r.size() != lp.num_vars) throw LpError("malformed covering row");

    detail::PackingSimplex simplex(lp);
    LpSolution sol;
    sol.pivots = simplex.run();
    const mpq_class dual_value = simplex.objective();
    auto x = simplex.primal();
    const auto y = simplex.dual();

    mpq_class primal_value = 0;
    for (auto& xv : x) {
        if (sgn(xv) < 0) throw DualityGapError("negative covering multiplier");
        if (xv > 1) xv = 1;
        primal_value += xv;
    }
    std::vector<mpq_class> load(lp.num_vars, 0);
    mpq_class y_sum = 0;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (sgn(y[r]) < 0) throw DualityGapError("negative packing variable");
        y_sum += y[r];
        mpq_class covered = 0;
        lp.rows[r].for_each([&](Vertex v) {
            covered += x[v];
            load[v] += y[r];
        });
        if (covered < 1) throw DualityGapError("covering row " + std::to_string(r) + " violated by recovered assignment");
        if (covered == 1) sol.tight_rows.push_back(r);
    }
    for (const auto& l : load)
        if (l > 1) throw DualityGapError("packing constraint violated");
    if (y_sum != dual_value) throw DualityGapError("packing objective does not match its variables");
    if (primal_value != dual_value)
        throw DualityGapError("duality gap: covering " + primal_value.get_str() + " vs packing " + dual_value.get_str());

    sol.value = Rational(dual_value);
    for (auto& xv : x) sol.assignment.emplace_back(std::move(xv));
    for (const auto& yr : y) sol.dual.emplace_back(yr);
    return sol;
}

/// Row-count ceiling for graph-derived programs.
inline constexpr std::size_t kMaxLpRows = 20000;

inline LinearProgram local_resolving_lp(const Graph& g, const DistMatrix& d,
                                        RowReduction reduction = RowReduction::dominance) {
    if (g.order() < 2) throw LpError("ldim_f needs a graph with at least two vertices");
    std::vector<VertexSet> rows;
    rows.reserve(g.size());
    for (const Edge& e : g.edges()) rows.push_back(resolving_pair_set(d, e.u, e.v));
    return build_covering_lp(std::move(rows), g.order(), reduction);
}

inline LinearProgram resolving_lp(const Graph& g, const DistMatrix& d,
                                  RowReduction reduction = RowReduction::dominance) {
    if (g.order() < 2) throw LpError("dim_f needs a graph with at least two vertices");
    std::vector<VertexSet> rows;
    rows.reserve(g.order() * (g.order() - 1) / 2);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) rows.push_back(resolving_pair_set(d, u, v));
    return build_covering_lp(std::move(rows), g.order(), reduction);
}

inline LpSolution checked_solve(const LinearProgram& lp) {
    if (lp.rows.size() > kMaxLpRows)
        throw LpError("program has " + std::to_string(lp.rows.size()) + " rows, ceiling is " +
                      std::to_string(kMaxLpRows));
    return solve_lp(lp);
}

/// Fractional local metric dimension: covering LP over {L(e) : e in E(G)}.
inline LpSolution ldim_f(const Graph& g, const DistMatrix& d) { return checked_solve(local_resolving_lp(g, d)); }
inline LpSolution ldim_f(const Graph& g) { return ldim_f(g, DistMatrix(g)); }

/// Fractional metric dimension: covering LP over {R(u,v) : u != v}.
inline LpSolution dim_f(const Graph& g, const DistMatrix& d) { return checked_solve(resolving_lp(g, d)); }
inline LpSolution dim_f(const Graph& g) { return dim_f(g, DistMatrix(g)); }

/// Plain-text program: "# covering n=<n> rows=<m>" then one line of vertex indices per row.
inline std::string to_text(const LinearProgram& lp) {
    std::ostringstream out;
    out << "# covering n=" << lp.num_vars << " rows=" << lp.rows.size() << '\n';
    for (const auto& r : lp.rows) {
        bool first = true;
        r.for_each([&](Vertex v) {
            out << (first ? "" : " ") << v;
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

inline LinearProgram parse_lp_text(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<std::vector<Vertex>> raw;
    while (std::getline(in, line)) {
        if (!have_header) {
            const auto pos = line.find("n=");
            if (line.rfind("#", 0) == 0 && pos != std::string::npos) {
                n = std::stoul(line.substr(pos + 2));
                have_header = true;
                continue;
            }
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<Vertex> row;
        Vertex v = 0;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw LpError("bad row: '" + line + "'");
        raw.push_back(std::move(row));
    }
    if (!have_header) throw LpError("missing '# covering n=' header");
    std::vector<VertexSet> rows;
    for (const auto& r : raw) {
        VertexSet s(n);
        for (Vertex v : r) {
            if (v >= n) throw LpError("row index " + std::to_string(v) + " out of range");
            s.insert(v);
        }
        rows.push_back(std::move(s));
    }
    return build_covering_lp(std::move(rows), n, RowReduction::none);
}

}  // namespace fraclocdim
