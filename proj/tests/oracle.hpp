#pragma once

// Reference implementations that share nothing with the library beyond the
// Graph adjacency: Floyd-Warshall distances, row construction, and a
// brute-force covering LP solved by enumerating basic solutions.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fraclocdim/graph.hpp"
#include "fraclocdim/rational.hpp"

namespace oracle {

using fraclocdim::Graph;
using fraclocdim::Rational;
using Row = std::uint32_t;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = static_cast<int>(g.order());
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline Row resolving_row(const std::vector<std::vector<int>>& d, int u, int v) {
    Row r = 0;
    for (std::size_t x = 0; x < d.size(); ++x)
        if (d[x][u] != d[x][v]) r |= Row{1} << x;
    return r;
}

/// Rows of the local problem: one per edge.
inline std::vector<Row> local_rows(const Graph& g) {
    const auto d = floyd(g);
    std::vector<Row> rows;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) rows.push_back(resolving_row(d, static_cast<int>(u), static_cast<int>(v)));
    return rows;
}

/// Rows of the metric problem: one per unordered vertex pair.
inline std::vector<Row> pair_rows(const Graph& g) {
    const auto d = floyd(g);
    std::vector<Row> rows;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            rows.push_back(resolving_row(d, static_cast<int>(u), static_cast<int>(v)));
    return rows;
}

/// Fraction-free determinant (Bareiss); exact for the tiny 0/1 systems here.
inline std::int64_t determinant(std::vector<std::vector<std::int64_t>> a) {
    const std::size_t k = a.size();
    std::int64_t sign = 1, prev = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < k && a[p][i] == 0) ++p;
            if (p == k) return 0;
            std::swap(a[i], a[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r) {
            for (std::size_t c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    return sign * a[k - 1][k - 1];
}

/**
 * min 1'x s.t. sum_{v in row} x_v >= 1, x >= 0, by enumerating basic
 * solutions: a support S and |S| rows tight on S, solved with Cramer's rule.
 * Every row must be non-empty; n <= 8.
 */
inline Rational covering_optimum(std::vector<Row> rows, std::size_t n) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    bool have = false;
    std::int64_t best_num = 0, best_den = 1;
    for (Row support = 1; support < (Row{1} << n); ++support) {
        std::vector<int> cols;
        for (std::size_t v = 0; v < n; ++v)
            if (support >> v & 1U) cols.push_back(static_cast<int>(v));
        const std::size_t k = cols.size();
        std::set<Row> restricted;
        bool coverable = true;
        for (Row r : rows) {
            if ((r & support) == 0) coverable = false;
            restricted.insert(r & support);
        }
        if (!coverable) continue;
        const std::vector<Row> cand(restricted.begin(), restricted.end());
        if (cand.size() < k) continue;
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m[i][j] = cand[pick[i]] >> cols[j] & 1U;
            std::int64_t det = determinant(m);
            if (det != 0) {
                std::vector<std::int64_t> num(k);
                for (std::size_t j = 0; j < k; ++j) {
                    auto mj = m;
                    for (std::size_t i = 0; i < k; ++i) mj[i][j] = 1;
                    num[j] = determinant(mj);
                }
                if (det < 0) {
                    det = -det;
                    for (auto& x : num) x = -x;
                }
                bool feasible = std::all_of(num.begin(), num.end(), [](std::int64_t x) { return x >= 0; });
                for (std::size_t r = 0; feasible && r < rows.size(); ++r) {
                    std::int64_t s = 0;
                    for (std::size_t j = 0; j < k; ++j)
                        if (rows[r] >> cols[j] & 1U) s += num[j];
                    feasible = s >= det;
                }
                if (feasible) {
                    const std::int64_t total = std::accumulate(num.begin(), num.end(), std::int64_t{0});
                    if (!have || total * best_den < best_num * det) {
                        best_num = total;
                        best_den = det;
                        have = true;
                    }
                }
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == cand.size() - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return Rational(best_num, best_den);
}

/// Exhaustive minimum hitting-set size, by increasing subset size.
inline std::size_t min_hitting(const std::vector<Row>& rows, std::size_t n) {
    std::size_t best = n;
    for (Row s = 0; s < (Row{1} << n); ++s) {
        const auto c = static_cast<std::size_t>(std::popcount(s));
        if (c >= best) continue;
        if (std::all_of(rows.begin(), rows.end(), [&](Row r) { return (r & s) != 0; })) best = c;
    }
    return best;
}

/// Connected G(n, p) sample with n drawn from [lo, hi]; resamples until connected.
inline Graph random_connected(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> order(lo, hi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const std::size_t n = order(rng);
        const double p = 0.25 + 0.6 * unit(rng);
        std::vector<std::pair<fraclocdim::Vertex, fraclocdim::Vertex>> e;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (unit(rng) < p) e.emplace_back(u, v);
        Graph g = fraclocdim::build_graph(n, e, "random");
        if (fraclocdim::is_connected(g)) return g;
    }
}

}  // namespace oracle
