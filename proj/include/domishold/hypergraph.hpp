#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "domishold/graph.hpp"
#include "domishold/vertex_set.hpp"

namespace domishold {

/// Default bound on the size of an intermediate family during dualization.
inline constexpr std::size_t kDefaultDualizationCap = 200000;

/// Hypergraph on vertices 0..n-1 whose edges form a multiset.
///
/// Edges are kept sorted (VertexSet order) so that equal multisets compare
/// equal. Duplicate edges and the empty edge are both legal.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Throws InputError if an edge leaves [0, n) or n > kMaxVertices.
    Hypergraph(int n, std::vector<VertexSet> edges);

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Distinct edges with their multiplicities, in edge order.
    std::vector<std::pair<VertexSet, int>> multiplicities() const;
    /// X contains at least one edge.
    bool contains_edge(VertexSet x) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Sorted antichain of minimal transversals.
using TransversalFamily = std::vector<VertexSet>;

/// Sorts, deduplicates and drops every set that strictly contains another.
std::vector<VertexSet> minimize_family(std::vector<VertexSet> sets);

/// Collapses duplicates and removes non-minimal edges.
Hypergraph sperner_reduce(const Hypergraph& h);

bool is_sperner(const Hypergraph& h);

struct DuallySpernerResult {
    bool dually_sperner = true;
    /// First violating pair (in edge order) when dually_sperner is false.
    std::optional<std::pair<VertexSet, VertexSet>> violation;
};

/// Every pair of edges has min(|e\f|, |f\e|) <= 1.
DuallySpernerResult is_dually_sperner(const Hypergraph& h);

/// Inclusion-minimal vertex sets meeting every edge, by Berge multiplication.
///
/// No edges gives {{}}; an empty edge gives {}. Throws CapabilityError when an
/// intermediate family would exceed `cap` sets.
TransversalFamily minimal_transversals(const Hypergraph& h, std::size_t cap = kDefaultDualizationCap);

struct SplitIncidence {
    Graph graph;
    /// The hypergraph's vertices 0..n-1.
    VertexSet clique;
    /// One vertex n+j per edge j, in edge order.
    VertexSet independent;
};

/// Split graph: hypergraph vertices form a clique, edges an independent set,
/// vertex v adjacent to edge-vertex e' iff v is in e.
SplitIncidence split_incidence_graph(const Hypergraph& h);

/// Hypergraph on `clique` (relabelled ascending) with one edge N(v) per v in
/// `independent`, duplicates kept. Throws InputError on an invalid partition.
Hypergraph i_neighborhood_hypergraph(const Graph& g, VertexSet clique, VertexSet independent);

/// Distinct neighbourhoods that strictly contain no other vertex's neighbourhood.
Hypergraph reduced_neighborhood_hypergraph(const Graph& g);

/// The split graph on V(G) plus one independent vertex per reduced
/// neighbourhood, built directly from the neighbourhood family.
Graph s_graph(const Graph& g);

/// Appends a vertex (index n) to every edge.
Hypergraph add_universal_hyper_vertex(const Hypergraph& h);

/// Deletes v, which must lie in every edge, and shifts higher labels down by one.
Hypergraph remove_universal_hyper_vertex(const Hypergraph& h, int v);

}  // namespace domishold
