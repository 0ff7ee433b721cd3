#pragma once

#include <cstddef>
#include <vector>

#include "kmap/cognitive_map.hpp"

namespace kmap {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct SimplePath {
    std::vector<ConceptId> nodes;
    std::vector<double> edge_weights;

    friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

/// Union of the edges of every simple directed path source -> sink.
/// Edges are sorted by (source, target); nodes ascending.
struct PathSubgraph {
    ConceptId source;
    ConceptId sink;
    std::vector<Relation> edges;
    std::vector<ConceptId> nodes;
    std::size_t path_count = 0;

    bool empty() const noexcept { return edges.empty(); }
};

/// Every simple directed path from `source` to `sink`, in lexicographic order
/// of node sequence. Throws PathExplosion once more than `cap` paths exist,
/// std::invalid_argument when source == sink or an id is out of range.
std::vector<SimplePath> enumerate_simple_paths(const CognitiveMap& map, ConceptId source,
                                               ConceptId sink,
                                               std::size_t cap = kDefaultPathCap);

/// Same path set as enumerate_simple_paths, but only the edge union is kept.
/// The search is restricted to concepts that can reach `sink`, which leaves
/// the path set untouched and prunes dead branches.
PathSubgraph extract_subgraph(const CognitiveMap& map, ConceptId source, ConceptId sink,
                              std::size_t cap = kDefaultPathCap);

}  // namespace kmap
