#include "domishold/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace domishold {

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::Greedy: return "greedy";
        case SolveMethod::Brute: return "brute";
        case SolveMethod::Approx: return "approx";
    }
    return "?";
}

SolveResult greedy_min_tds(const Graph& g, const TdStructure& s) {
    if (g.has_isolated_vertex()) throw DomainError("a graph with an isolated vertex has no total dominating set");
    if (!check_td_structure(g, s)) throw PreconditionError("structure does not verify for the input graph");
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return s.weights[static_cast<std::size_t>(a)] > s.weights[static_cast<std::size_t>(b)];
    });
    SolveResult r;
    std::int64_t weight = 0;
    for (int v : order) {
        if (weight >= s.t) break;
        r.set.insert(v);
        weight += s.weights[static_cast<std::size_t>(v)];
    }
    r.size = r.set.size();
    return r;
}

namespace {

template <class Pred>
SolveResult smallest_set(const Graph& g, int max_n, Pred pred) {
    const int n = g.n();
    if (n > max_n) throw CapabilityError("brute-force solver capped at " + std::to_string(max_n) + " vertices");
    for (int k = 0; k <= n; ++k) {
        // Combinations of size k in lexicographic order.
        std::vector<int> c(static_cast<std::size_t>(k));
        std::iota(c.begin(), c.end(), 0);
        while (true) {
            const VertexSet s = VertexSet::from_vector(c);
            if (pred(s)) return {s, k, SolveMethod::Brute};
            int i = k - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw std::logic_error("no solution found");
}

}  // namespace

SolveResult gamma_t_bruteforce(const Graph& g, int max_n) {
    if (g.has_isolated_vertex()) throw DomainError("a graph with an isolated vertex has no total dominating set");
    return smallest_set(g, max_n, [&](VertexSet s) { return is_total_dominating_set(g, s); });
}

SolveResult gamma_bruteforce(const Graph& g, int max_n) {
    return smallest_set(g, max_n, [&](VertexSet s) { return is_dominating_set(g, s); });
}

SolveResult approx_dominating_set(const Graph& g, const ThresholdOptions& options) {
    const TdRecognitionReport whole = recognize_td(g, options);
    if (whole.verdict == Verdict::Unknown) throw CapabilityError("TD recognition was inconclusive: " + whole.note);
    if (whole.verdict != Verdict::Yes) throw PreconditionError("graph is not total domishold");
    if (g.edge_count() == 0) return {g.vertices(), g.n(), SolveMethod::Approx};
    const VertexSet isolated = g.isolated_vertices();
    const VertexSet kept = g.vertices() - isolated;
    const Graph core = induced_subgraph(g, kept);
    const TdRecognitionReport r = recognize_td(core, options);
    if (r.verdict == Verdict::Unknown) throw CapabilityError("TD recognition was inconclusive: " + r.note);
    if (r.verdict != Verdict::Yes) {
        throw PreconditionError("graph without its isolated vertices is not total domishold");
    }
    const SolveResult d = greedy_min_tds(core, *r.structure);
    const std::vector<int> labels = kept.to_vector();
    VertexSet out = isolated;
    for (int v : d.set) out.insert(labels[static_cast<std::size_t>(v)]);
    return {out, out.size(), SolveMethod::Approx};
}

}  // namespace domishold
