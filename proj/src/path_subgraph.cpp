#include "kmap/path_subgraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmap/errors.hpp"

namespace kmap {

namespace {

void check_pair(const CognitiveMap& map, ConceptId source, ConceptId sink, std::size_t cap) {
    if (!map.contains(source) || !map.contains(sink))
        throw std::invalid_argument("concept id out of range");
    if (source == sink)
        throw std::invalid_argument("source and sink must differ");
    if (cap == 0)
        throw std::invalid_argument("path cap must be positive");
}

/// Concepts from which `sink` is reachable (including `sink`).
std::vector<char> reaches(const CognitiveMap& map, ConceptId sink) {
    std::vector<char> mark(map.size(), 0);
    std::vector<ConceptId> stack{sink};
    mark[sink.value] = 1;
    while (!stack.empty()) {
        const ConceptId u = stack.back();
        stack.pop_back();
        for (ConceptId p : map.predecessors(u))
            if (!mark[p.value]) {
                mark[p.value] = 1;
                stack.push_back(p);
            }
    }
    return mark;
}

/// Backtracking search over simple paths. Successor lists are ascending, so
/// completed paths come out in lexicographic order. `on_path` is called with
/// the current node stack each time the sink is reached.
template <class OnPath>
void walk_simple_paths(const CognitiveMap& map, ConceptId source, ConceptId sink,
                       std::size_t cap, OnPath&& on_path) {
    const std::vector<char> useful = reaches(map, sink);
    if (!useful[source.value])
        return;

    std::vector<char> visited(map.size(), 0);
    std::vector<ConceptId> stack{source};
    // Next successor slot to try for each stack level.
    std::vector<std::size_t> cursor{0};
    visited[source.value] = 1;
    std::size_t found = 0;

    while (!stack.empty()) {
        const ConceptId u = stack.back();
        const auto next = map.successors(u);
        std::size_t& k = cursor.back();
        while (k < next.size() && (visited[next[k].value] || !useful[next[k].value]))
            ++k;
        if (k == next.size()) {
            visited[u.value] = 0;
            stack.pop_back();
            cursor.pop_back();
            continue;
        }
        const ConceptId v = next[k++];
        if (v == sink) {
            if (++found > cap)
                throw PathExplosion(source, sink, cap);
            stack.push_back(v);
            on_path(std::span<const ConceptId>(stack));
            stack.pop_back();
            continue;
        }
        visited[v.value] = 1;
        stack.push_back(v);
        cursor.push_back(0);
    }
}

}  // namespace

std::vector<SimplePath> enumerate_simple_paths(const CognitiveMap& map, ConceptId source,
                                               ConceptId sink, std::size_t cap) {
    check_pair(map, source, sink, cap);
    std::vector<SimplePath> paths;
    walk_simple_paths(map, source, sink, cap, [&](std::span<const ConceptId> nodes) {
        SimplePath p;
        p.nodes.assign(nodes.begin(), nodes.end());
        p.edge_weights.reserve(nodes.size() - 1);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            p.edge_weights.push_back(map.weight(nodes[i], nodes[i + 1]));
        paths.push_back(std::move(p));
    });
    return paths;
}

PathSubgraph extract_subgraph(const CognitiveMap& map, ConceptId source, ConceptId sink,
                              std::size_t cap) {
    check_pair(map, source, sink, cap);
    const std::size_t n = map.size();
    std::vector<char> on_subgraph(n * n, 0);
    PathSubgraph g{source, sink, {}, {}, 0};

    walk_simple_paths(map, source, sink, cap, [&](std::span<const ConceptId> nodes) {
        ++g.path_count;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            on_subgraph[nodes[i].value * n + nodes[i + 1].value] = 1;
    });

    std::vector<char> node_mark(n, 0);
    for (const Relation& r : map.relations())
        if (on_subgraph[r.source.value * n + r.target.value]) {
            g.edges.push_back(r);
            node_mark[r.source.value] = 1;
            node_mark[r.target.value] = 1;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (node_mark[i])
            g.nodes.push_back(ConceptId{i});
    return g;
}

}  // namespace kmap
