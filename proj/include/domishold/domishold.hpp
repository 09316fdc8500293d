#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domishold/catalog.hpp"
#include "domishold/graph.hpp"
#include "domishold/hypergraph.hpp"
#include "domishold/threshold.hpp"

namespace domishold {

/// Weights and threshold with w(S) >= t exactly on the total dominating sets.
struct TdStructure {
    std::vector<std::int64_t> weights;
    std::int64_t t = 0;

    std::int64_t weight(VertexSet s) const;
    friend bool operator==(const TdStructure&, const TdStructure&) = default;
};

struct TdRecognitionReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<TdStructure> structure;
    /// On a negative verdict: 2-summability witness on f_G, when one was found.
    std::optional<SummabilityWitness> witness;
    /// On a negative verdict: weighted LP obstruction on f_G.
    std::optional<InfeasibilityCertificate> certificate;
    std::string note;
};

/// f_G: minimal terms of the neighbourhood multiset.
PositiveDnf neighborhood_dnf(const Graph& g);

/// Isolated vertex: all-ones weights with t = n+1. Otherwise threshold
/// recognition of f_G and conversion (w, t) -> (w, sum w - t).
TdRecognitionReport recognize_td(const Graph& g, const ThresholdOptions& options = {});

/// Exhaustive oracle over all 2^n subsets; throws CapabilityError for n > max_n.
bool verify_td_structure(const Graph& g, const TdStructure& s, int max_n = 16);

/// Exact check without enumeration: the heaviest non-TD set is some V \ N(v)
/// and the lightest TD set is a minimal transversal of the neighbourhoods.
bool check_td_structure(const Graph& g, const TdStructure& s, std::size_t cap = kDefaultDualizationCap);

struct ForbiddenWitness {
    int index = 0;  ///< catalogue index 1..13
    Embedding embedding;
};

struct HtdRecognitionReport {
    bool htd = true;
    std::optional<ForbiddenWitness> witness;
};

/// Searches F1..F13 in order and stops at the first induced copy.
HtdRecognitionReport recognize_htd(const Graph& g);

/// G plus a universal vertex, with w'(v) = t - min w. Requires a verifying
/// structure with positive weights.
std::pair<Graph, TdStructure> structure_add_universal(const Graph& g, const TdStructure& s);

/// Integral form of the positive-weight rescaling: w' = 2|V| w + 1, t' = 2|V| t.
TdStructure make_positive(const Graph& g, const TdStructure& s);

/// G + H where H has a unique minimal TD set T: weight w(V(G)) on T, 0 on the
/// rest of H, threshold t + |T| w(V(G)).
std::pair<Graph, TdStructure> structure_union_unique_min(const Graph& g, const TdStructure& s, const Graph& h);

/// The only inclusion-minimal TD set, if there is exactly one. Brute force.
std::optional<VertexSet> unique_minimal_tds(const Graph& h, int max_n = 16);

struct TdEmbedding {
    Graph graph;
    TdStructure structure;
    Embedding embedding;  ///< G into graph
};

/// Adds a vertex joined to G's isolated vertices, then a private pendant for
/// every vertex; the result is TD and contains G as an induced subgraph.
/// Weight 1 on the unique minimal TD set: V, the new vertex, and the new
/// vertex's pendant when G has no isolated vertex.
TdEmbedding embed_into_td(const Graph& g);

struct EquivalenceLeg {
    std::string name;
    Verdict verdict = Verdict::Unknown;
    std::string note;
};

struct EquivalenceReport {
    std::array<EquivalenceLeg, 7> legs;

    /// No leg is Unknown and all agree.
    bool unanimous() const;
    /// Two decided legs disagree.
    bool disagreement() const;
};

/// The seven equivalent formulations of "G is TD", each evaluated separately.
EquivalenceReport check_equivalence_chain(const Graph& g, const ThresholdOptions& options = {});

/// Threshold test for hypergraphs through f_H.
ThresholdReport hypergraph_threshold(const Hypergraph& h, const ThresholdOptions& options = {});

/// TD verdict of the split-incidence graph SI(H).
Verdict hypergraph_threshold_via_graph(const Hypergraph& h, const ThresholdOptions& options = {});

}  // namespace domishold
