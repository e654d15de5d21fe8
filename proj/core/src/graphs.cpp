#include "ghzcert/graphs.h"

#include <algorithm>
#include <sstream>

#include "ghzcert/disjoint_set.h"

namespace ghzcert {
namespace {

PartitionGraph empty_graph(const StateSet& set, Partition p, GraphKind kind) {
    const auto [y, z] = joint_parties(p);
    PartitionGraph g;
    g.partition = p;
    g.kind = kind;
    g.first_extent = set.dims[y];
    g.second_extent = set.dims[z];
    return g;
}

std::vector<Vertex> projections(const GhzTuple& tuple, Partition p) {
    std::vector<Vertex> out;
    out.reserve(tuple.kets.size());
    for (const auto& ket : tuple.kets) {
        out.push_back(project(ket, p));
    }
    return out;
}

std::string name(const Vertex& v) {
    return "v_" + std::to_string(v.first) + "_" + std::to_string(v.second);
}

}  // namespace

Vertex project(const Ket& ket, Partition p) {
    const auto [y, z] = joint_parties(p);
    return {ket[y], ket[z]};
}

bool PartitionGraph::add_edge(Vertex a, Vertex b) {
    if (a == b) {
        return false;
    }
    if (b < a) {
        std::swap(a, b);
    }
    return edges.insert({a, b}).second;
}

PartitionGraph build_graph(const StateSet& set, Partition p) {
    auto g = empty_graph(set, p, GraphKind::Full);
    for (const auto& t : set.tuples) {
        const auto vs = projections(t, p);
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                g.add_edge(vs[a], vs[b]);
            }
        }
    }
    return g;
}

PartitionGraph build_path_graph(const StateSet& set, Partition p) {
    auto g = empty_graph(set, p, GraphKind::PathSubgraph);
    for (const auto& t : set.tuples) {
        auto vs = projections(t, p);
        std::sort(vs.begin(), vs.end());
        for (std::size_t a = 0; a + 1 < vs.size(); ++a) {
            g.add_edge(vs[a], vs[a + 1]);
        }
    }
    return g;
}

ComponentLabeling connected_components(const PartitionGraph& graph) {
    const std::size_t n = graph.vertex_count();
    DisjointSet ds(n);
    for (const auto& [a, b] : graph.edges) {
        ds.unite(graph.index_of(a), graph.index_of(b));
    }
    // Vertices are visited in lexicographic order, so the first member seen
    // of each component is its smallest vertex.
    std::vector<std::size_t> smallest(n, n);
    ComponentLabeling out;
    out.label.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto root = ds.find(v);
        if (smallest[root] == n) {
            smallest[root] = v;
            ++out.count;
        }
        out.label[v] = graph.vertex_at(smallest[root]);
    }
    return out;
}

bool is_connected(const PartitionGraph& graph) { return connected_components(graph).count <= 1; }

std::string to_dot(const PartitionGraph& graph) {
    std::ostringstream out;
    out << "graph G_" << to_string(graph.partition)
        << (graph.kind == GraphKind::PathSubgraph ? "_path" : "") << " {\n";
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << name(graph.vertex_at(v)) << ";\n";
    }
    for (const auto& [a, b] : graph.edges) {
        out << "  " << name(a) << " -- " << name(b) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ghzcert
