#pragma once

#include <span>
#include <vector>

#include "kmap/cognitive_map.hpp"
#include "kmap/k_analysis.hpp"

namespace kmap {

/// Kendall rank correlation between two orderings of the same concept set:
/// (concordant - discordant) / (n (n - 1) / 2). 1 for identical orders, -1
/// for reversed ones, and 1 by convention when fewer than two concepts are
/// ranked. Throws RankingMismatch when the sets differ or contain repeats.
double compare_rankings(std::span<const ConceptId> a, std::span<const ConceptId> b);

double compare_rankings(std::span<const RankEntry> a, std::span<const RankEntry> b);

std::vector<ConceptId> order_of(std::span<const RankEntry> ranked);

}  // namespace kmap
