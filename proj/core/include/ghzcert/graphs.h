#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghzcert/state_model.h"

namespace ghzcert {

/// Joint coordinate of the two parties opposite the cut, in projection order.
struct Vertex {
    int first = 0;
    int second = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Projection of a ket onto the vertex set of a partition graph:
/// A: (j, k), B: (k, i), C: (i, j).
Vertex project(const Ket& ket, Partition p);

enum class GraphKind { Full, PathSubgraph };

/// Undirected simple graph on Z_{first_extent} x Z_{second_extent}.
struct PartitionGraph {
    Partition partition = Partition::A;
    GraphKind kind = GraphKind::Full;
    int first_extent = 0;
    int second_extent = 0;
    /// Each edge stored once with edge.first < edge.second.
    std::set<std::pair<Vertex, Vertex>> edges;

    std::size_t vertex_count() const {
        return static_cast<std::size_t>(first_extent) * static_cast<std::size_t>(second_extent);
    }
    std::size_t index_of(const Vertex& v) const {
        return static_cast<std::size_t>(v.first) * static_cast<std::size_t>(second_extent) +
               static_cast<std::size_t>(v.second);
    }
    Vertex vertex_at(std::size_t index) const {
        return {static_cast<int>(index / static_cast<std::size_t>(second_extent)),
                static_cast<int>(index % static_cast<std::size_t>(second_extent))};
    }
    bool has_edge(Vertex a, Vertex b) const {
        if (b < a) {
            std::swap(a, b);
        }
        return edges.contains({a, b});
    }
    /// Adds {a, b}; loops are ignored. Returns true if the edge is new.
    bool add_edge(Vertex a, Vertex b);
};

/// Each vertex mapped to the smallest vertex of its component.
struct ComponentLabeling {
    std::vector<Vertex> label;
    std::size_t count = 0;
};

/// Every tuple contributes the complete graph on its kets' projections.
PartitionGraph build_graph(const StateSet& set, Partition p);

/// Every tuple contributes a path through its projections sorted by first
/// coordinate (ties broken on the whole pair).
PartitionGraph build_path_graph(const StateSet& set, Partition p);

ComponentLabeling connected_components(const PartitionGraph& graph);

bool is_connected(const PartitionGraph& graph);

/// Graphviz rendering; vertices are named v_<first>_<second>.
std::string to_dot(const PartitionGraph& graph);

}  // namespace ghzcert
