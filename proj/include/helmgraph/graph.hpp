#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "helmgraph/types.hpp"

namespace helm {

/// An oriented edge: the stored direction is tail -> head.
struct Edge {
    VertexId tail;
    VertexId head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with a fixed orientation per edge.
///
/// Edges keep their construction order (row order of the incidence matrix),
/// vertices are kept sorted ascending (column order).  Instances are
/// immutable after construction; the structural transformations return new
/// graphs.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from oriented edges plus optional isolated vertices.
    /// Throws SelfLoopError / DuplicateEdgeError with the offending edge's
    /// 1-based position.
    explicit Graph(std::vector<Edge> edges, const std::vector<VertexId>& extra_vertices = {});

    std::size_t vertex_count() const noexcept { return vertices_.size(); }  // n
    std::size_t edge_count() const noexcept { return edges_.size(); }       // m

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const;

    bool has_vertex(VertexId v) const;
    /// Position of v in the ascending vertex order; throws std::out_of_range.
    std::size_t vertex_index(VertexId v) const;

    bool has_edge(VertexId u, VertexId v) const;  // unordered pair
    std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;

    std::size_t degree(VertexId v) const;
    /// Neighbors in ascending id order.
    const std::vector<VertexId>& neighbors(VertexId v) const;

    std::size_t component_count() const;  // omega
    /// Component label per vertex (aligned with vertices()); labels are
    /// assigned in order of each component's smallest vertex id.
    std::vector<std::size_t> component_labels() const;

    /// Removes a degree-1 vertex and its unique edge; throws NotPendantError.
    Graph delete_pendant(VertexId v) const;
    /// Contracts edge e = uv under the hypothesis N(u) and N(v) are disjoint;
    /// the merged vertex keeps id min(u, v).  Throws CommonNeighborError.
    Graph contract_edge(std::size_t e) const;
    /// Replaces edge e = (a -> b) with a -> u -> b where u is a fresh vertex
    /// id; the two new edges take e's position in the edge order.
    Graph subdivide_edge(std::size_t e) const;
    /// Same graph without edge e; all vertices are kept.
    Graph without_edge(std::size_t e) const;

private:
    std::vector<VertexId> vertices_;  // ascending
    std::vector<Edge> edges_;         // input order
    std::map<VertexId, std::size_t> index_of_;
    std::vector<std::vector<VertexId>> adjacency_;           // by vertex index, ascending
    std::map<std::pair<VertexId, VertexId>, std::size_t> edge_of_;  // (min,max) -> edge
};

/// Oriented 3-clique (a, b, c) with a < b < c, cyclic orientation
/// a -> b -> c -> a.
struct Triangle {
    VertexId a;
    VertexId b;
    VertexId c;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// All 3-cliques of g, canonically oriented, in lexicographic order.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// The 2-skeleton of the clique complex: the graph together with exactly
/// its triangles.
class OrientedComplex {
public:
    explicit OrientedComplex(Graph g);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    std::size_t triangle_count() const noexcept { return triangles_.size(); }  // t

    /// Number of triangles containing edge e; throws std::out_of_range.
    std::size_t triangle_degree(std::size_t e) const;

private:
    Graph graph_;
    std::vector<Triangle> triangles_;
    std::vector<std::size_t> degree_;  // per edge
};

/// Splits into connected components (order of smallest vertex id), keeping
/// vertex ids, edge order and orientations.
std::vector<Graph> split_components(const Graph& g);

}  // namespace helm
