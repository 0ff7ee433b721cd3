#pragma once

#include <optional>
#include <vector>

#include "kmap/cognitive_map.hpp"
#include "kmap/dense.hpp"
#include "kmap/path_subgraph.hpp"

namespace kmap {

/// Resistor with an emf source. Orientation is the direction of the original
/// relation; current may flow either way. The branch current is
/// (phi_from - phi_to + emf) / resistance, so with zero current the emf
/// raises the potential along the orientation.
struct Branch {
    ConceptId from;
    ConceptId to;
    double emf = 0.0;
    double resistance = 1.0;
};

struct BranchNetwork {
    std::vector<Branch> branches;
    std::vector<ConceptId> nodes;  // ascending, includes ground
    ConceptId ground;

    bool empty() const noexcept { return branches.empty(); }

    /// Nodes other than ground, in the column order of the incidence matrix.
    std::vector<ConceptId> free_nodes() const;
};

/// Node potentials of a solved network; the ground potential is exactly 0.
class PotentialVector {
public:
    PotentialVector(std::vector<ConceptId> nodes, std::vector<double> values);

    std::span<const ConceptId> nodes() const noexcept { return nodes_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Potential at `id`, or nullopt when the node is not in the network.
    std::optional<double> at(ConceptId id) const;

private:
    std::vector<ConceptId> nodes_;
    std::vector<double> values_;
};

/// One branch per directed edge (antiparallel edges stay two branches), unit
/// resistance, emf equal to the relation weight, grounded at the subgraph
/// source.
BranchNetwork symmetrize(const PathSubgraph& subgraph);

/// Branch-by-node incidence: +1 where the branch leaves a node, -1 where it
/// enters. The ground column is removed; remaining columns follow
/// free_nodes().
Matrix incidence_matrix(const BranchNetwork& network);

/// Nodal analysis: (Omega^T Y^-1 Omega) phi = -Omega^T Y^-1 E with phi_ground
/// fixed at 0. Only unit resistances are accepted for now
/// (std::invalid_argument otherwise). Throws SingularSystem for an empty or
/// disconnected network.
PotentialVector solve_potentials(const BranchNetwork& network);

/// Branch currents under the sign convention documented on Branch.
std::vector<double> branch_currents(const BranchNetwork& network,
                                    const PotentialVector& potentials);

/// Net current leaving each node (ordered like network.nodes).
std::vector<double> kcl_residuals(const BranchNetwork& network,
                                  const PotentialVector& potentials);

}  // namespace kmap
