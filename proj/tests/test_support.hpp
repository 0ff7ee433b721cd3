#pragma once

// Fixtures and independent oracles shared by the unit and acceptance suites.
// Nothing in here calls into the production path/circuit code.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kmap/cognitive_map.hpp"
#include "kmap/dense.hpp"

namespace kmap::testing {

// Signed public-health map.
inline Matrix health_signed_w() {
    return {{0, 0, 1, 1, 0, 0, 0},  {1, 0, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 0, -1, -1}, {-1, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 1, 0}};
}

// Same topology with published weights.
inline Matrix health_weighted_w() {
    return {{0, 0, 0.6, 0.9, 0, 0, 0},  {0.1, 0, 0, 0, 0, 0, 0},   {0, 0.7, 0, 0, 0.9, 0, 0},
            {0, 0, 0, 0, 0, 0, 0.9},    {0, 0, 0, 0, 0, -0.9, -0.9}, {-0.3, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0.8, 0}};
}

// Published K-matrices, 3 decimals.
inline Matrix published_k_signed() {
    return {{0, 2, 1, 1, 2, 2, 1.6},
            {1, 0, 2, 2, 3, 3, 2.6},
            {0.857, 1, 0, 1.857, 1, 1.353, 1.333},
            {1, 3, 2, 0, 3, 2, 1},
            {-1.667, 0.333, -0.667, -0.667, 0, -0.667, -0.8},
            {-1, 1, 0, 0, 1, 0, 0.6},
            {0, 2, 1, 1, 2, 1, 0}};
}

inline Matrix published_k_weighted() {
    return {{0, 1.3, 0.6, 0.9, 1.5, 1.6, 1.32},
            {0.1, 0, 0.7, 1, 1.6, 1.7, 1.42},
            {0.443, 0.7, 0, 1.343, 0.9, 0.941, 0.857},
            {1.4, 2.7, 2, 0, 2.9, 1.7, 0.9},
            {-0.933, 0.367, -0.333, -0.033, 0, -0.633, -0.6},
            {-0.3, 1, 0.3, 0.6, 1.2, 0, 1.02},
            {0.5, 1.8, 1.1, 1.4, 2, 0.8, 0}};
}

inline std::vector<ConceptId> ids(std::initializer_list<std::size_t> one_based) {
    std::vector<ConceptId> out;
    for (std::size_t v : one_based)
        out.push_back(ConceptId::from_external(v));
    return out;
}

/// Random map with N concepts, each ordered pair present with probability
/// `density`, weights uniform in [-2, 2] (|w| >= 0.05).
inline CognitiveMap random_map(std::mt19937_64& rng, std::size_t n, double density = 0.35) {
    std::bernoulli_distribution edge(density);
    std::uniform_real_distribution<double> mag(0.05, 2.0);
    std::bernoulli_distribution neg(0.5);
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && edge(rng))
                w(i, j) = neg(rng) ? -mag(rng) : mag(rng);
    return map_from_adjacency(w);
}

/// Plain recursive DFS over the adjacency matrix; returns every simple path
/// as a 0-based node list.
inline std::vector<std::vector<std::size_t>> dfs_paths(const Matrix& w, std::size_t from,
                                                      std::size_t to) {
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> path{from};
    std::vector<bool> used(w.rows(), false);
    used[from] = true;
    auto rec = [&](auto&& self, std::size_t u) -> void {
        if (u == to) {
            paths.push_back(path);
            return;
        }
        for (std::size_t v = 0; v < w.rows(); ++v)
            if (w(u, v) != 0.0 && !used[v]) {
                used[v] = true;
                path.push_back(v);
                self(self, v);
                path.pop_back();
                used[v] = false;
            }
    };
    rec(rec, from);
    return paths;
}

inline std::set<std::pair<std::size_t, std::size_t>> dfs_edge_union(const Matrix& w,
                                                                   std::size_t from,
                                                                   std::size_t to) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& p : dfs_paths(w, from, to))
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            edges.insert({p[i], p[i + 1]});
    return edges;
}

/// Breadth-first reachability over the adjacency matrix.
inline std::vector<std::vector<bool>> reachability(const Matrix& w) {
    const std::size_t n = w.rows();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> queue{s};
        reach[s][s] = true;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t v = 0; v < n; ++v)
                if (w(queue[q], v) != 0.0 && !reach[s][v]) {
                    reach[s][v] = true;
                    queue.push_back(v);
                }
    }
    return reach;
}

struct OracleBranch {
    std::size_t from;
    std::size_t to;
    double emf;
};

/// Solves the full branch system by least squares: unknowns are the node
/// potentials (ground fixed at 0) and the branch currents; equations are
/// Ohm's law with emf per branch, I = phi_from - phi_to + emf, and current
/// balance at every non-ground node. Returns potentials indexed by node.
inline std::vector<double> branch_system_potentials(const std::vector<OracleBranch>& branches,
                                                    std::size_t node_count, std::size_t ground) {
    const std::size_t m = branches.size();
    const std::size_t unknowns = node_count + m;
    const std::size_t equations = m + node_count + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<long>(equations), static_cast<long>(unknowns));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<long>(equations));
    for (std::size_t i = 0; i < m; ++i) {
        const auto row = static_cast<long>(i);
        a(row, static_cast<long>(node_count + i)) = 1.0;
        a(row, static_cast<long>(branches[i].from)) -= 1.0;
        a(row, static_cast<long>(branches[i].to)) += 1.0;
        b(row) = branches[i].emf;
    }
    for (std::size_t node = 0; node < node_count; ++node) {
        const auto row = static_cast<long>(m + node);
        for (std::size_t i = 0; i < m; ++i) {
            if (branches[i].from == node)
                a(row, static_cast<long>(node_count + i)) += 1.0;
            if (branches[i].to == node)
                a(row, static_cast<long>(node_count + i)) -= 1.0;
        }
    }
    a(static_cast<long>(m + node_count), static_cast<long>(ground)) = 1.0;
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    std::vector<double> phi(node_count);
    for (std::size_t i = 0; i < node_count; ++i)
        phi[i] = x(static_cast<long>(i));
    return phi;
}

/// Largest eigenvalue magnitude from a full eigensolver.
inline double eigen_spectral_radius(const Matrix& w) {
    const auto n = static_cast<long>(w.rows());
    Eigen::MatrixXd m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m(i, j) = w(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    const Eigen::VectorXcd ev = m.eigenvalues();
    double r = 0.0;
    for (long i = 0; i < ev.size(); ++i)
        r = std::max(r, std::abs(ev(i)));
    return r;
}

/// Kendall tau by explicit pair counting.
inline double kendall_pairs(const std::vector<ConceptId>& a, const std::vector<ConceptId>& b) {
    const std::size_t n = a.size();
    auto pos = [](const std::vector<ConceptId>& order, ConceptId id) {
        return static_cast<long>(std::find(order.begin(), order.end(), id) - order.begin());
    };
    long concordant = 0;
    long discordant = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const long s = (pos(a, a[i]) - pos(a, a[j])) * (pos(b, a[i]) - pos(b, a[j]));
            if (s > 0)
                ++concordant;
            else if (s < 0)
                ++discordant;
        }
    return static_cast<double>(concordant - discordant) / (static_cast<double>(n * (n - 1)) / 2.0);
}

}  // namespace kmap::testing
