#include "domishold/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace domishold {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices) {
        throw InputError("hypergraph vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
    }
    const VertexSet all = VertexSet::range(n);
    for (VertexSet e : edges_) {
        if (!e.is_subset_of(all)) {
            throw InputError("hyperedge " + e.to_string() + " leaves [0," + std::to_string(n) + ")");
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::pair<VertexSet, int>> Hypergraph::multiplicities() const {
    std::vector<std::pair<VertexSet, int>> out;
    for (VertexSet e : edges_) {
        if (!out.empty() && out.back().first == e) {
            ++out.back().second;
        } else {
            out.emplace_back(e, 1);
        }
    }
    return out;
}

bool Hypergraph::contains_edge(VertexSet x) const {
    return std::any_of(edges_.begin(), edges_.end(), [x](VertexSet e) { return e.is_subset_of(x); });
}

std::vector<VertexSet> minimize_family(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        const bool dominated = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return k.is_subset_of(s); });
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

Hypergraph sperner_reduce(const Hypergraph& h) {
    return Hypergraph(h.n(), minimize_family(h.edges()));
}

bool is_sperner(const Hypergraph& h) {
    const auto& e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i != j && e[i].is_subset_of(e[j])) return false;
        }
    }
    return true;
}

DuallySpernerResult is_dually_sperner(const Hypergraph& h) {
    const auto& e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (std::min((e[i] - e[j]).size(), (e[j] - e[i]).size()) >= 2) {
                return {false, std::make_pair(e[i], e[j])};
            }
        }
    }
    return {};
}

TransversalFamily minimal_transversals(const Hypergraph& h, std::size_t cap) {
    std::vector<VertexSet> family{VertexSet{}};
    for (VertexSet edge : minimize_family(h.edges())) {
        std::vector<VertexSet> next;
        for (VertexSet t : family) {
            if (t.intersects(edge)) {
                next.push_back(t);
            } else {
                for (int x : edge) next.push_back(t | VertexSet::single(x));
            }
            if (next.size() > cap) {
                throw CapabilityError("dualization exceeded the cap of " + std::to_string(cap) + " intermediate sets");
            }
        }
        family = minimize_family(std::move(next));
    }
    return family;
}

SplitIncidence split_incidence_graph(const Hypergraph& h) {
    const int n = h.n();
    const int total = n + static_cast<int>(h.edge_count());
    if (total > kMaxVertices) {
        throw CapabilityError("split-incidence graph would have " + std::to_string(total) + " vertices");
    }
    std::vector<VertexSet> adj(static_cast<std::size_t>(total));
    const VertexSet clique = VertexSet::range(n);
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = clique - VertexSet::single(v);
    VertexSet independent;
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
        const int ev = n + static_cast<int>(j);
        independent.insert(ev);
        for (int v : h.edges()[j]) {
            adj[static_cast<std::size_t>(ev)].insert(v);
            adj[static_cast<std::size_t>(v)].insert(ev);
        }
    }
    return {Graph::from_adjacency(std::move(adj)), clique, independent};
}

Hypergraph i_neighborhood_hypergraph(const Graph& g, VertexSet clique, VertexSet independent) {
    if (!is_valid_split_partition(g, {clique, independent})) {
        throw InputError("(" + clique.to_string() + ", " + independent.to_string() + ") is not a split partition");
    }
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (int v : clique) relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<VertexSet> edges;
    for (int v : independent) {
        VertexSet e;
        for (int u : g.neighbors(v)) e.insert(relabel[static_cast<std::size_t>(u)]);
        edges.push_back(e);
    }
    return Hypergraph(clique.size(), std::move(edges));
}

Hypergraph reduced_neighborhood_hypergraph(const Graph& g) {
    return sperner_reduce(Hypergraph(g.n(), g.adjacency()));
}

Graph s_graph(const Graph& g) {
    const int n = g.n();
    std::vector<VertexSet> w;
    for (int v = 0; v < n; ++v) {
        const VertexSet nv = g.neighbors(v);
        bool keep = true;
        for (int u = 0; u < n && keep; ++u) {
            const VertexSet nu = g.neighbors(u);
            keep = u == v || !(nu.is_subset_of(nv) && nu != nv);
        }
        if (keep && std::find(w.begin(), w.end(), nv) == w.end()) w.push_back(nv);
    }
    std::sort(w.begin(), w.end());

    const int total = n + static_cast<int>(w.size());
    if (total > kMaxVertices) throw CapabilityError("S(G) would have " + std::to_string(total) + " vertices");
    std::vector<VertexSet> adj(static_cast<std::size_t>(total));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = VertexSet::range(n) - VertexSet::single(v);
    for (std::size_t j = 0; j < w.size(); ++j) {
        const int x = n + static_cast<int>(j);
        adj[static_cast<std::size_t>(x)] = w[j];
        for (int v : w[j]) adj[static_cast<std::size_t>(v)].insert(x);
    }
    return Graph::from_adjacency(std::move(adj));
}

Hypergraph add_universal_hyper_vertex(const Hypergraph& h) {
    if (h.n() >= kMaxVertices) throw CapabilityError("hypergraph already has the maximum vertex count");
    const VertexSet v = VertexSet::single(h.n());
    std::vector<VertexSet> edges;
    edges.reserve(h.edge_count());
    for (VertexSet e : h.edges()) edges.push_back(e | v);
    return Hypergraph(h.n() + 1, std::move(edges));
}

Hypergraph remove_universal_hyper_vertex(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
    std::vector<VertexSet> edges;
    edges.reserve(h.edge_count());
    const VertexSet::Word low = (VertexSet::Word{1} << v) - 1;
    for (VertexSet e : h.edges()) {
        if (!e.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in edge " + e.to_string());
        const VertexSet::Word bits = e.bits();
        edges.emplace_back((bits & low) | ((bits >> 1) & ~low));
    }
    return Hypergraph(h.n() - 1, std::move(edges));
}

}  // namespace domishold
