#include "kmap/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmap/errors.hpp"

namespace kmap {

std::vector<ConceptId> BranchNetwork::free_nodes() const {
    std::vector<ConceptId> out;
    out.reserve(nodes.size());
    for (ConceptId id : nodes)
        if (id != ground)
            out.push_back(id);
    return out;
}

PotentialVector::PotentialVector(std::vector<ConceptId> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.size() != values_.size())
        throw std::invalid_argument("PotentialVector: size mismatch");
}

std::optional<double> PotentialVector::at(ConceptId id) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end() || *it != id)
        return std::nullopt;
    return values_[static_cast<std::size_t>(it - nodes_.begin())];
}

BranchNetwork symmetrize(const PathSubgraph& subgraph) {
    BranchNetwork net;
    net.ground = subgraph.source;
    net.branches.reserve(subgraph.edges.size());
    for (const Relation& e : subgraph.edges)
        net.branches.push_back({e.source, e.target, e.weight, 1.0});
    net.nodes = subgraph.nodes;
    if (!std::binary_search(net.nodes.begin(), net.nodes.end(), net.ground)) {
        net.nodes.push_back(net.ground);
        std::sort(net.nodes.begin(), net.nodes.end());
    }
    return net;
}

namespace {

/// Column of each node in the reduced incidence matrix; -1 for ground or
/// nodes outside the network.
std::vector<long> column_index(const BranchNetwork& net, std::size_t extent) {
    std::vector<long> col(extent, -1);
    long c = 0;
    for (ConceptId id : net.nodes)
        if (id != net.ground)
            col[id.value] = c++;
    return col;
}

std::size_t index_extent(const BranchNetwork& net) {
    std::size_t extent = net.ground.value + 1;
    for (ConceptId id : net.nodes)
        extent = std::max(extent, id.value + 1);
    for (const Branch& b : net.branches) {
        if (!std::binary_search(net.nodes.begin(), net.nodes.end(), b.from) ||
            !std::binary_search(net.nodes.begin(), net.nodes.end(), b.to))
            throw std::invalid_argument("branch endpoint is not a network node");
    }
    return extent;
}

}  // namespace

Matrix incidence_matrix(const BranchNetwork& network) {
    const std::vector<long> col = column_index(network, index_extent(network));
    const std::size_t free = network.nodes.size() - 1;
    Matrix omega(network.branches.size(), free);
    for (std::size_t i = 0; i < network.branches.size(); ++i) {
        const Branch& b = network.branches[i];
        if (col[b.from.value] >= 0)
            omega(i, static_cast<std::size_t>(col[b.from.value])) += 1.0;
        if (col[b.to.value] >= 0)
            omega(i, static_cast<std::size_t>(col[b.to.value])) -= 1.0;
    }
    return omega;
}

PotentialVector solve_potentials(const BranchNetwork& network) {
    if (network.empty())
        throw SingularSystem("solve_potentials: empty network");
    for (const Branch& b : network.branches)
        if (b.resistance != 1.0)
            throw std::invalid_argument("solve_potentials: only unit resistances are supported");

    const Matrix omega = incidence_matrix(network);
    const std::size_t m = omega.rows();
    const std::size_t n = omega.cols();

    // Omega^T Y^-1 Omega and -Omega^T Y^-1 E, Y = diag(R).
    Matrix nodal(n, n);
    std::vector<double> rhs(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double g = 1.0 / network.branches[i].resistance;
        const double e = network.branches[i].emf;
        for (std::size_t a = 0; a < n; ++a) {
            const double oa = omega(i, a);
            if (oa == 0.0)
                continue;
            rhs[a] -= oa * g * e;
            for (std::size_t b = 0; b < n; ++b)
                nodal(a, b) += oa * g * omega(i, b);
        }
    }

    std::vector<double> phi;
    try {
        phi = solve_spd(nodal, rhs);
    } catch (const NotPositiveDefinite&) {
        throw SingularSystem("solve_potentials: nodal matrix is singular (disconnected network)");
    }

    std::vector<double> values;
    values.reserve(network.nodes.size());
    std::size_t c = 0;
    for (ConceptId id : network.nodes)
        values.push_back(id == network.ground ? 0.0 : phi[c++]);
    return PotentialVector(network.nodes, std::move(values));
}

std::vector<double> branch_currents(const BranchNetwork& network,
                                    const PotentialVector& potentials) {
    std::vector<double> current;
    current.reserve(network.branches.size());
    for (const Branch& b : network.branches) {
        const double from = potentials.at(b.from).value();
        const double to = potentials.at(b.to).value();
        current.push_back((from - to + b.emf) / b.resistance);
    }
    return current;
}

std::vector<double> kcl_residuals(const BranchNetwork& network,
                                  const PotentialVector& potentials) {
    const std::vector<double> current = branch_currents(network, potentials);
    std::vector<double> net(network.nodes.size(), 0.0);
    auto slot = [&](ConceptId id) {
        return static_cast<std::size_t>(
            std::lower_bound(network.nodes.begin(), network.nodes.end(), id) -
            network.nodes.begin());
    };
    for (std::size_t i = 0; i < network.branches.size(); ++i) {
        net[slot(network.branches[i].from)] += current[i];
        net[slot(network.branches[i].to)] -= current[i];
    }
    return net;
}

}  // namespace kmap
