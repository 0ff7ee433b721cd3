#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kmap/dense.hpp"

namespace kmap {

/// Concept index. Zero-based internally; every file format and CLI output
/// uses the one-based numbering via external()/from_external().
struct ConceptId {
    std::size_t value = 0;

    static constexpr ConceptId from_external(std::size_t one_based) { return {one_based - 1}; }
    constexpr std::size_t external() const noexcept { return value + 1; }

    friend constexpr auto operator<=>(ConceptId, ConceptId) = default;
};

struct Concept {
    ConceptId id;
    std::string label;
};

struct Relation {
    ConceptId source;
    ConceptId target;
    double weight = 0.0;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Weighted signed digraph of concepts. Immutable once built; the adjacency
/// matrix follows the row-source convention W(i, j) = weight of i -> j.
class CognitiveMap {
public:
    std::size_t size() const noexcept { return concepts_.size(); }
    const std::string& name() const noexcept { return name_; }

    std::span<const Concept> concepts() const noexcept { return concepts_; }
    const std::string& label(ConceptId id) const { return concepts_.at(id.value).label; }

    /// Relations sorted by (source, target).
    std::span<const Relation> relations() const noexcept { return relations_; }

    const Matrix& adjacency() const noexcept { return adjacency_; }
    double weight(ConceptId source, ConceptId target) const {
        return adjacency_(source.value, target.value);
    }

    /// Targets of relations leaving `id`, ascending.
    std::span<const ConceptId> successors(ConceptId id) const { return successors_.at(id.value); }
    std::span<const ConceptId> predecessors(ConceptId id) const {
        return predecessors_.at(id.value);
    }

    bool contains(ConceptId id) const noexcept { return id.value < concepts_.size(); }

    friend bool operator==(const CognitiveMap& a, const CognitiveMap& b);

private:
    friend CognitiveMap build_map(std::vector<Concept>, std::vector<Relation>, std::string);

    std::string name_;
    std::vector<Concept> concepts_;
    std::vector<Relation> relations_;
    Matrix adjacency_;
    std::vector<std::vector<ConceptId>> successors_;
    std::vector<std::vector<ConceptId>> predecessors_;
};

/// Validates and materializes a map. Concept ids must cover 0..N-1 exactly
/// once (any order). Throws InvalidMap on duplicate ids, unknown endpoints,
/// duplicate ordered relations, self-loops, zero or non-finite weights.
/// Empty labels are replaced by "C<external id>".
CognitiveMap build_map(std::vector<Concept> concepts, std::vector<Relation> relations,
                       std::string name = {});

/// Builds a map from a square adjacency matrix; nonzero entries become
/// relations. Nonzero diagonal entries are self-loops and are rejected.
CognitiveMap map_from_adjacency(const Matrix& w, std::vector<std::string> labels = {},
                                std::string name = {});

inline const Matrix& adjacency_of(const CognitiveMap& map) { return map.adjacency(); }

/// Multiplies every relation weight by `factor`. Topology is unchanged.
/// Throws std::invalid_argument for a zero or non-finite factor.
CognitiveMap scale_map(const CognitiveMap& map, double factor);

/// W / divisor, the normalization used to bring the impulse series into
/// its convergence region.
CognitiveMap normalize_map(const CognitiveMap& map, double divisor);

}  // namespace kmap
