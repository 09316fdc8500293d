#include "domishold/domishold.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "domishold/generators.hpp"

namespace domishold {

std::int64_t TdStructure::weight(VertexSet s) const {
    std::int64_t sum = 0;
    for (int v : s) sum += weights[static_cast<std::size_t>(v)];
    return sum;
}

PositiveDnf neighborhood_dnf(const Graph& g) { return make_dnf(g.n(), g.adjacency()); }

namespace {

bool well_formed(const Graph& g, const TdStructure& s) {
    if (static_cast<int>(s.weights.size()) != g.n() || s.t < 0) return false;
    return std::all_of(s.weights.begin(), s.weights.end(), [](std::int64_t w) { return w >= 0; });
}

TdStructure isolated_vertex_structure(const Graph& g) {
    return {std::vector<std::int64_t>(static_cast<std::size_t>(g.n()), 1), g.n() + 1};
}

}  // namespace

bool verify_td_structure(const Graph& g, const TdStructure& s, int max_n) {
    const int n = g.n();
    if (n > max_n) throw CapabilityError("exhaustive TD-structure check capped at " + std::to_string(max_n) + " vertices");
    if (!well_formed(g, s)) return false;
    const auto& adj = g.adjacency();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    // Gray-code walk keeps w(S) incremental.
    std::int64_t weight = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 0; i < subsets; ++i) {
        if (i > 0) {
            const int flip = std::countr_zero(i);
            gray ^= std::uint64_t{1} << flip;
            const std::int64_t w = s.weights[static_cast<std::size_t>(flip)];
            weight += ((gray >> flip) & 1U) ? w : -w;
        }
        bool total = true;
        for (int v = 0; v < n && total; ++v) total = (adj[static_cast<std::size_t>(v)].bits() & gray) != 0;
        if (total != (weight >= s.t)) return false;
    }
    return true;
}

bool check_td_structure(const Graph& g, const TdStructure& s, std::size_t cap) {
    if (!well_formed(g, s)) return false;
    const VertexSet all = g.vertices();
    if (g.n() == 0) return s.t == 0;
    for (int v = 0; v < g.n(); ++v) {
        if (s.weight(all - g.neighbors(v)) >= s.t) return false;
    }
    if (g.has_isolated_vertex()) return true;
    for (VertexSet t : minimal_transversals(Hypergraph(g.n(), g.adjacency()), cap)) {
        if (s.weight(t) < s.t) return false;
    }
    return true;
}

TdRecognitionReport recognize_td(const Graph& g, const ThresholdOptions& options) {
    TdRecognitionReport report;
    if (g.has_isolated_vertex()) {
        report.verdict = Verdict::Yes;
        report.structure = isolated_vertex_structure(g);
        report.note = "isolated vertex: no TD sets";
        return report;
    }
    const PositiveDnf f = neighborhood_dnf(g);
    ThresholdReport t = is_threshold(f, options);
    report.verdict = t.verdict;
    report.note = t.note;
    if (t.verdict == Verdict::Yes) {
        const SeparatingStructure& sep = *t.structure;
        const std::int64_t total = std::accumulate(sep.weights.begin(), sep.weights.end(), std::int64_t{0});
        TdStructure s{sep.weights, total - sep.t};
        if (!check_td_structure(g, s, options.dual_cap)) {
            throw std::logic_error("converted TD structure failed verification");
        }
        report.structure = std::move(s);
    } else if (t.verdict == Verdict::No) {
        report.witness = std::move(t.witness);
        report.certificate = std::move(t.certificate);
    }
    return report;
}

HtdRecognitionReport recognize_htd(const Graph& g) {
    for (const ForbiddenGraph& f : forbidden_catalog()) {
        if (auto e = find_induced(g, f.graph)) return {false, ForbiddenWitness{f.index, std::move(*e)}};
    }
    return {};
}

std::pair<Graph, TdStructure> structure_add_universal(const Graph& g, const TdStructure& s) {
    if (!check_td_structure(g, s)) throw PreconditionError("structure does not verify for the input graph");
    Graph gp = add_universal(g);
    if (g.n() == 0) return {gp, isolated_vertex_structure(gp)};
    if (std::any_of(s.weights.begin(), s.weights.end(), [](std::int64_t w) { return w <= 0; })) {
        throw PreconditionError("structure_add_universal needs positive weights; apply make_positive first");
    }
    const std::int64_t lightest = *std::min_element(s.weights.begin(), s.weights.end());
    TdStructure out{s.weights, s.t};
    out.weights.push_back(std::max<std::int64_t>(0, s.t - lightest));
    if (!check_td_structure(gp, out)) {
        TdRecognitionReport r = recognize_td(gp);
        if (r.verdict != Verdict::Yes) throw std::logic_error("adding a universal vertex lost the TD property");
        out = *r.structure;
    }
    return {std::move(gp), std::move(out)};
}

TdStructure make_positive(const Graph& g, const TdStructure& s) {
    if (!check_td_structure(g, s)) throw PreconditionError("structure does not verify for the input graph");
    const int n = g.n();
    if (n == 0) return s;
    std::int64_t heaviest_non_td = 0;
    for (int v = 0; v < n; ++v) heaviest_non_td = std::max(heaviest_non_td, s.weight(g.vertices() - g.neighbors(v)));
    if (s.t - heaviest_non_td < 1) throw std::logic_error("verified integral structure has no positive gap");
    TdStructure out;
    out.t = 2 * n * s.t;
    for (auto w : s.weights) out.weights.push_back(2 * n * w + 1);
    if (!check_td_structure(g, out)) throw std::logic_error("positive rescaling failed verification");
    return out;
}

std::optional<VertexSet> unique_minimal_tds(const Graph& h, int max_n) {
    const int n = h.n();
    if (n > max_n) throw CapabilityError("minimal TD set enumeration capped at " + std::to_string(max_n) + " vertices");
    std::optional<VertexSet> found;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        const VertexSet s(bits);
        if (!is_total_dominating_set(h, s)) continue;
        bool minimal = true;
        for (int v : s) {
            if (is_total_dominating_set(h, s - VertexSet::single(v))) { minimal = false; break; }
        }
        if (!minimal) continue;
        if (found) return std::nullopt;
        found = s;
    }
    return found;
}

std::pair<Graph, TdStructure> structure_union_unique_min(const Graph& g, const TdStructure& s, const Graph& h) {
    if (!check_td_structure(g, s)) throw PreconditionError("structure does not verify for the input graph");
    const auto t = unique_minimal_tds(h);
    if (!t) throw PreconditionError("the added graph has no unique minimal TD set");
    const std::int64_t big = s.weight(g.vertices());
    Graph u = disjoint_union(g, h);
    TdStructure out{s.weights, s.t + t->size() * big};
    for (int v = 0; v < h.n(); ++v) out.weights.push_back(t->contains(v) ? big : 0);
    return {std::move(u), std::move(out)};
}

TdEmbedding embed_into_td(const Graph& g) {
    const int n = g.n();
    std::vector<Edge> edges = g.edges();
    for (int v : g.isolated_vertices()) edges.emplace_back(v, n);
    const Graph with_hub = Graph::from_edges(n + 1, edges);
    TdEmbedding out;
    out.graph = add_pendant(with_hub);
    out.structure.t = n + 1;
    out.structure.weights.assign(static_cast<std::size_t>(2 * (n + 1)), 0);
    std::fill_n(out.structure.weights.begin(), n + 1, 1);
    // A hub with no neighbours is dominated only by its own pendant.
    if (with_hub.neighbors(n).empty()) {
        out.structure.weights.back() = 1;
        out.structure.t = n + 2;
    }
    out.embedding.map.resize(static_cast<std::size_t>(n));
    std::iota(out.embedding.map.begin(), out.embedding.map.end(), 0);
    return out;
}

bool EquivalenceReport::unanimous() const {
    return std::all_of(legs.begin(), legs.end(), [this](const EquivalenceLeg& l) {
        return l.verdict != Verdict::Unknown && l.verdict == legs.front().verdict;
    });
}

bool EquivalenceReport::disagreement() const {
    const bool yes = std::any_of(legs.begin(), legs.end(), [](const auto& l) { return l.verdict == Verdict::Yes; });
    const bool no = std::any_of(legs.begin(), legs.end(), [](const auto& l) { return l.verdict == Verdict::No; });
    return yes && no;
}

namespace {

// Distinct neighbourhoods that properly contain no other neighbourhood.
PositiveDnf complete_dnf_by_filter(const Graph& g) {
    std::vector<VertexSet> terms;
    for (int v = 0; v < g.n(); ++v) {
        const VertexSet nv = g.neighbors(v);
        bool minimal = true;
        for (int u = 0; u < g.n() && minimal; ++u) {
            const VertexSet nu = g.neighbors(u);
            minimal = !(nu.is_subset_of(nv) && nu != nv);
        }
        if (minimal && std::find(terms.begin(), terms.end(), nv) == terms.end()) terms.push_back(nv);
    }
    return make_dnf(g.n(), std::move(terms));
}

}  // namespace

EquivalenceReport check_equivalence_chain(const Graph& g, const ThresholdOptions& options) {
    EquivalenceReport report;
    const std::array<std::pair<const char*, std::function<Verdict()>>, 7> legs{{
        {"G is TD", [&] { return recognize_td(g, options).verdict; }},
        {"f_G is threshold", [&] { return is_threshold(neighborhood_dnf(g), options).verdict; }},
        {"complete DNF of f_G is threshold", [&] { return is_threshold(complete_dnf_by_filter(g), options).verdict; }},
        {"H(phi) is threshold",
         [&] { return hypergraph_threshold(Hypergraph(g.n(), complete_dnf_by_filter(g).implicants()), options).verdict; }},
        {"RN(G) is threshold", [&] { return hypergraph_threshold(reduced_neighborhood_hypergraph(g), options).verdict; }},
        {"SI(RN(G)) is TD",
         [&] { return recognize_td(split_incidence_graph(reduced_neighborhood_hypergraph(g)).graph, options).verdict; }},
        {"S(G) is TD", [&] { return recognize_td(s_graph(g), options).verdict; }},
    }};
    for (std::size_t i = 0; i < legs.size(); ++i) {
        EquivalenceLeg& leg = report.legs[i];
        leg.name = legs[i].first;
        try {
            leg.verdict = legs[i].second();
        } catch (const CapabilityError& e) {
            leg.verdict = Verdict::Unknown;
            leg.note = e.what();
        }
    }
    return report;
}

ThresholdReport hypergraph_threshold(const Hypergraph& h, const ThresholdOptions& options) {
    return is_threshold(dnf_of(h), options);
}

Verdict hypergraph_threshold_via_graph(const Hypergraph& h, const ThresholdOptions& options) {
    return recognize_td(split_incidence_graph(h).graph, options).verdict;
}

}  // namespace domishold
