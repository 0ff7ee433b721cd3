#include "kmap/k_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "kmap/circuit.hpp"
#include "kmap/errors.hpp"

namespace kmap {

namespace {

struct EntryResult {
    double value = 0.0;
    std::size_t paths = 0;
    std::size_t branches = 0;
};

EntryResult solve_pair(const CognitiveMap& map, ConceptId source, ConceptId sink,
                       std::size_t path_cap) {
    const PathSubgraph g = extract_subgraph(map, source, sink, path_cap);
    if (g.empty())
        return {};
    const BranchNetwork net = symmetrize(g);
    const PotentialVector phi = solve_potentials(net);
    return {phi.at(sink).value(), g.path_count, net.branches.size()};
}

constexpr double kTieResolution = 1e-11;

}  // namespace

std::span<const double> component(const InfluenceProfile& profile, Metric metric) {
    switch (metric) {
    case Metric::pressure:
        return profile.pressure;
    case Metric::consequence:
        return profile.consequence;
    case Metric::amp_pressure:
        return profile.amp_pressure;
    case Metric::amp_consequence:
        return profile.amp_consequence;
    }
    return {};
}

double k_entry(const CognitiveMap& map, ConceptId source, ConceptId sink, std::size_t path_cap) {
    return solve_pair(map, source, sink, path_cap).value;
}

KMatrix k_matrix(const CognitiveMap& map, const KOptions& options) {
    const std::size_t n = map.size();
    KMatrix k{Matrix(n, n), std::vector<std::size_t>(n * n, 0),
              std::vector<std::size_t>(n * n, 0)};
    if (n < 2)
        return k;

    const std::size_t pairs = n * n;
    std::size_t workers = options.workers == 0 ? std::thread::hardware_concurrency()
                                               : options.workers;
    workers = std::clamp<std::size_t>(workers, 1, pairs);

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::size_t failed_pair = pairs;
    std::exception_ptr failure;

    auto work = [&] {
        for (std::size_t idx = next.fetch_add(1); idx < pairs; idx = next.fetch_add(1)) {
            const std::size_t a = idx / n;
            const std::size_t b = idx % n;
            if (a == b)
                continue;
            try {
                const EntryResult r = solve_pair(map, ConceptId{a}, ConceptId{b}, options.path_cap);
                k.values(a, b) = r.value;
                k.path_counts[idx] = r.paths;
                k.branch_counts[idx] = r.branches;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                // Keep the first failure in row-major order so the reported
                // pair does not depend on scheduling.
                if (idx < failed_pair) {
                    failed_pair = idx;
                    failure = std::current_exception();
                }
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }

    if (failure)
        std::rethrow_exception(failure);
    return k;
}

InfluenceProfile influence_profile(const Matrix& k) {
    const std::size_t n = k.rows();
    InfluenceProfile p;
    p.pressure.assign(n, 0.0);
    p.consequence.assign(n, 0.0);
    p.amp_pressure.assign(n, 0.0);
    p.amp_consequence.assign(n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            const double v = k(a, b);
            p.pressure[b] += v;
            p.consequence[a] += v;
            p.amp_pressure[b] += std::abs(v);
            p.amp_consequence[a] += std::abs(v);
        }
    return p;
}

std::vector<RankEntry> rank_concepts(std::span<const double> values) {
    // Values are snapped to a grid relative to the largest magnitude; equal
    // grid points are ties.
    const double unit = max_abs(values) * kTieResolution;
    std::vector<std::pair<double, RankEntry>> keyed;
    keyed.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        keyed.push_back({unit > 0.0 ? std::round(values[i] / unit) : 0.0, {ConceptId{i}, values[i]}});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<RankEntry> ranked;
    ranked.reserve(keyed.size());
    for (const auto& [key, entry] : keyed)
        ranked.push_back(entry);
    return ranked;
}

}  // namespace kmap
