#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kmap/cognitive_map.hpp"
#include "kmap/dense.hpp"
#include "kmap/path_subgraph.hpp"

namespace kmap {

/// Pairwise influence matrix: values(a, b) is the influence of a on b.
struct KMatrix {
    Matrix values;
    /// Number of simple paths and of branches behind each entry.
    std::vector<std::size_t> path_counts;
    std::vector<std::size_t> branch_counts;

    std::size_t size() const noexcept { return values.rows(); }
    double operator()(ConceptId a, ConceptId b) const { return values(a.value, b.value); }
};

/// Collective characteristics of a concept. For the K-method: pressure is a
/// column sum of K, consequence a row sum, and the amp_ variants sum
/// absolute values. The impulse analogs use the same field names.
struct InfluenceProfile {
    std::vector<double> pressure;
    std::vector<double> consequence;
    std::vector<double> amp_pressure;
    std::vector<double> amp_consequence;
};

enum class Metric { pressure, consequence, amp_pressure, amp_consequence };

std::span<const double> component(const InfluenceProfile& profile, Metric metric);

struct RankEntry {
    ConceptId id;
    double value = 0.0;
};

struct KOptions {
    std::size_t path_cap = kDefaultPathCap;
    /// Worker threads for k_matrix; 0 picks hardware concurrency.
    std::size_t workers = 1;
};

/// Influence of `source` on `sink`: potential of `sink` in the grounded
/// circuit built from the path subgraph. Zero when `sink` is unreachable.
double k_entry(const CognitiveMap& map, ConceptId source, ConceptId sink,
               std::size_t path_cap = kDefaultPathCap);

/// All ordered pairs. Entries are independent; the result does not depend on
/// the worker count. A PathExplosion names the first offending pair in
/// row-major order.
KMatrix k_matrix(const CognitiveMap& map, const KOptions& options = {});

InfluenceProfile influence_profile(const Matrix& k);
inline InfluenceProfile influence_profile(const KMatrix& k) { return influence_profile(k.values); }

/// Descending by value; ties by ascending concept id. Values closer than
/// 1e-11 of the largest magnitude count as ties, so rounding noise from
/// rescaling or cancellation does not reorder equal entries.
std::vector<RankEntry> rank_concepts(std::span<const double> values);

}  // namespace kmap
