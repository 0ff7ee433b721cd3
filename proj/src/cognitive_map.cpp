#include "kmap/cognitive_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kmap/errors.hpp"

namespace kmap {

namespace {

std::string ext(ConceptId id) {
    return std::to_string(id.external());
}

}  // namespace

PathExplosion::PathExplosion(ConceptId source, ConceptId sink, std::size_t cap)
    : Error("more than " + std::to_string(cap) + " simple paths from concept " + ext(source) +
            " to concept " + ext(sink)),
      source_(source),
      sink_(sink),
      cap_(cap) {}

DivergenceDetected::DivergenceDetected(std::size_t step)
    : Error("impulse iteration diverged at step " + std::to_string(step)), step_(step) {}

Unstable::Unstable(double spectral_radius)
    : Error("impulse series diverges: spectral radius " + std::to_string(spectral_radius) +
            " >= 1 (normalize W first)"),
      spectral_radius_(spectral_radius) {}

ParseError::ParseError(std::size_t line, std::string field, const std::string& what)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string{}) +
            (field.empty() ? std::string{} : field + ": ") + what),
      line_(line),
      field_(std::move(field)) {}

CognitiveMap build_map(std::vector<Concept> concepts, std::vector<Relation> relations,
                       std::string name) {
    const std::size_t n = concepts.size();
    std::sort(concepts.begin(), concepts.end(),
              [](const Concept& a, const Concept& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && concepts[i].id == concepts[i - 1].id)
            throw InvalidMap("duplicate concept id " + ext(concepts[i].id));
        if (concepts[i].id.value != i)
            throw InvalidMap("concept ids must be contiguous from 1; missing id " +
                             ext(ConceptId{i}));
        if (concepts[i].label.empty())
            concepts[i].label = "C" + ext(concepts[i].id);
    }

    std::sort(relations.begin(), relations.end(), [](const Relation& a, const Relation& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });

    CognitiveMap map;
    map.name_ = std::move(name);
    map.adjacency_ = Matrix(n, n);
    map.successors_.resize(n);
    map.predecessors_.resize(n);
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const Relation& r = relations[i];
        if (r.source.value >= n || r.target.value >= n)
            throw InvalidMap("relation " + ext(r.source) + "->" + ext(r.target) +
                             " references an unknown concept");
        if (r.source == r.target)
            throw InvalidMap("self-loop on concept " + ext(r.source));
        if (r.weight == 0.0)
            throw InvalidMap("relation " + ext(r.source) + "->" + ext(r.target) +
                             " has zero weight");
        if (!std::isfinite(r.weight))
            throw InvalidMap("relation " + ext(r.source) + "->" + ext(r.target) +
                             " has a non-finite weight");
        if (i > 0 && relations[i - 1].source == r.source && relations[i - 1].target == r.target)
            throw InvalidMap("duplicate relation " + ext(r.source) + "->" + ext(r.target));
        map.adjacency_(r.source.value, r.target.value) = r.weight;
        map.successors_[r.source.value].push_back(r.target);
        map.predecessors_[r.target.value].push_back(r.source);
    }
    for (auto& p : map.predecessors_)
        std::sort(p.begin(), p.end());

    map.concepts_ = std::move(concepts);
    map.relations_ = std::move(relations);
    return map;
}

bool operator==(const CognitiveMap& a, const CognitiveMap& b) {
    if (a.name_ != b.name_ || a.relations_ != b.relations_ || a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.concepts_[i].label != b.concepts_[i].label)
            return false;
    return true;
}

CognitiveMap map_from_adjacency(const Matrix& w, std::vector<std::string> labels,
                                std::string name) {
    const std::size_t n = w.rows();
    if (w.cols() != n)
        throw InvalidMap("adjacency matrix must be square");
    if (!labels.empty() && labels.size() != n)
        throw InvalidMap("label count does not match adjacency size");

    std::vector<Concept> concepts(n);
    for (std::size_t i = 0; i < n; ++i)
        concepts[i] = {ConceptId{i}, labels.empty() ? std::string{} : std::move(labels[i])};
    std::vector<Relation> relations;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (w(i, j) != 0.0)
                relations.push_back({ConceptId{i}, ConceptId{j}, w(i, j)});
    return build_map(std::move(concepts), std::move(relations), std::move(name));
}

namespace {

template <class F>
CognitiveMap transform_weights(const CognitiveMap& map, F f) {
    std::vector<Concept> concepts(map.concepts().begin(), map.concepts().end());
    std::vector<Relation> relations(map.relations().begin(), map.relations().end());
    for (auto& r : relations)
        r.weight = f(r.weight);
    return build_map(std::move(concepts), std::move(relations), map.name());
}

}  // namespace

CognitiveMap scale_map(const CognitiveMap& map, double factor) {
    if (factor == 0.0 || !std::isfinite(factor))
        throw std::invalid_argument("scale factor must be finite and nonzero");
    return transform_weights(map, [factor](double w) { return w * factor; });
}

CognitiveMap normalize_map(const CognitiveMap& map, double divisor) {
    if (divisor == 0.0 || !std::isfinite(divisor))
        throw std::invalid_argument("normalization divisor must be finite and nonzero");
    return transform_weights(map, [divisor](double w) { return w / divisor; });
}

}  // namespace kmap
