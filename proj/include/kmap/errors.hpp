#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "kmap/cognitive_map.hpp"

namespace kmap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural problem with a map: duplicate ids, dangling endpoints,
/// self-loops, zero weights, duplicate ordered relations.
class InvalidMap : public Error {
public:
    using Error::Error;
};

/// More simple paths between a pair than the configured cap allows.
class PathExplosion : public Error {
public:
    PathExplosion(ConceptId source, ConceptId sink, std::size_t cap);

    ConceptId source() const noexcept { return source_; }
    ConceptId sink() const noexcept { return sink_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    ConceptId source_;
    ConceptId sink_;
    std::size_t cap_;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// Nodal matrix of a branch network is not invertible. Only reachable for
/// disconnected networks, which extract_subgraph never produces.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Impulse iteration exceeded the magnitude guard.
class DivergenceDetected : public Error {
public:
    explicit DivergenceDetected(std::size_t step);
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Operation requires a convergent impulse series, i.e. spectral radius < 1.
class Unstable : public Error {
public:
    explicit Unstable(double spectral_radius);
    double spectral_radius() const noexcept { return spectral_radius_; }

private:
    double spectral_radius_;
};

/// Syntax error in a map document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string field, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

class RankingMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace kmap
