#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "domishold/vertex_set.hpp"

namespace domishold {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, at most kMaxVertices of them.
///
/// Immutable once built: every operation that changes a graph returns a new one.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws InputError on loops, out-of-range endpoints or n > kMaxVertices.
    /// Repeated edges are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Builds from neighbourhood masks; validates symmetry and absence of loops.
    static Graph from_adjacency(std::vector<VertexSet> adjacency);

    int n() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(n()); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    int edge_count() const;
    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    const std::vector<VertexSet>& adjacency() const { return adj_; }

    bool has_isolated_vertex() const;
    VertexSet isolated_vertices() const;

    /// Throws InputError unless every member of s is a vertex of this graph.
    void check_vertex_set(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

/// Injective map from pattern vertices to host vertices; map[i] is the image of i.
struct Embedding {
    std::vector<int> map;

    VertexSet image() const { return VertexSet::from_vector(map); }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Every vertex has a neighbour in s.
bool is_total_dominating_set(const Graph& g, VertexSet s);
/// Every vertex is in s or has a neighbour in s.
bool is_dominating_set(const Graph& g, VertexSet s);

/// Subgraph induced by s, relabelled 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Graph with the vertices of s removed (relabelled like induced_subgraph).
inline Graph remove_vertices(const Graph& g, VertexSet s) { return induced_subgraph(g, g.vertices() - s); }

/// Lexicographically first induced embedding of `pattern` into `host`.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

/// Checks that `e` is an injective, adjacency-preserving (induced) embedding.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// {2K2, C4, P4}-free, decided by peeling isolated/dominating vertices.
bool is_threshold_graph(const Graph& g);

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

/// Clique plus a part of maximum degree <= 1. Exhaustive; throws
/// CapabilityError above max_n vertices.
bool is_12_polar(const Graph& g, int max_n = 20);

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
    friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

/// A split partition maximising |clique|, ties broken by the lexicographically
/// smallest clique; nullopt if g is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

bool is_valid_split_partition(const Graph& g, const SplitPartition& p);

}  // namespace domishold
