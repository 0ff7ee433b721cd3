#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmap/cognitive_map.hpp"
#include "kmap/impulse.hpp"
#include "kmap/k_analysis.hpp"

namespace kmap {

enum class Method { k, impulse, both };
enum class ReportFormat { text, csv, json };

std::string_view metric_name(Metric metric);
std::optional<Metric> parse_metric(std::string_view name);
std::string_view method_name(Method method);

struct RankTable {
    std::string name;  // "<metric>/<method>", e.g. "pressure/k"
    std::vector<RankEntry> entries;
};

struct Concordance {
    std::string metric;
    double tau = 0.0;
};

struct AnalysisReport {
    std::string map_name;
    std::vector<std::string> labels;  // by concept index; empty for a bare report
    std::optional<KMatrix> k_matrix;
    std::optional<InfluenceProfile> k_profile;
    std::optional<InfluenceProfile> impulse_profile;
    std::optional<StabilityReport> stability;
    std::optional<double> normalization;
    std::vector<RankTable> rank_tables;
    std::vector<Concordance> concordance;
};

struct AnalysisOptions {
    Method method = Method::both;
    std::vector<Metric> metrics{Metric::pressure, Metric::consequence, Metric::amp_pressure,
                                Metric::amp_consequence};
    bool include_matrix = true;
    /// Divisor applied to W before impulse analysis. The K-method always
    /// runs on the raw map.
    std::optional<double> normalization;
    KOptions k;
    Orientation orientation = kDefaultOrientation;
};

/// Runs the requested methods. Stability is always reported for W/c. Impulse
/// fields are filled only when W/c is stable; the caller decides whether an
/// unstable map is an error.
AnalysisReport analyze(const CognitiveMap& map, const AnalysisOptions& options);

/// Deterministic rendering. Text rounds to 3 decimals; csv and json carry
/// shortest round-trip representations.
std::string render_report(const AnalysisReport& report, ReportFormat format);

}  // namespace kmap
