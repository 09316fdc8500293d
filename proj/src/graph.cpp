#include "domishold/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace domishold {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    Graph g(n);
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet nv = adjacency[static_cast<std::size_t>(v)];
        if (!nv.is_subset_of(all)) throw InputError("neighbour index out of range at vertex " + std::to_string(v));
        if (nv.contains(v)) throw InputError("loop at vertex " + std::to_string(v));
        for (int u : nv) {
            if (!adjacency[static_cast<std::size_t>(u)].contains(v)) {
                throw InputError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
            }
        }
    }
    g.adj_ = std::move(adjacency);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet nv : adj_) twice += nv.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(adj_.begin(), adj_.end(), [](VertexSet nv) { return nv.empty(); });
}

VertexSet Graph::isolated_vertices() const {
    VertexSet out;
    for (int v = 0; v < n(); ++v) {
        if (neighbors(v).empty()) out.insert(v);
    }
    return out;
}

void Graph::check_vertex_set(VertexSet s) const {
    if (!s.is_subset_of(vertices())) {
        throw InputError("vertex set " + s.to_string() + " is not contained in [0," + std::to_string(n()) + ")");
    }
}

bool is_total_dominating_set(const Graph& g, VertexSet s) {
    g.check_vertex_set(s);
    for (int v = 0; v < g.n(); ++v) {
        if (!g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, VertexSet s) {
    g.check_vertex_set(s);
    for (int v = 0; v < g.n(); ++v) {
        if (!g.closed_neighbors(v).intersects(s)) return false;
    }
    return true;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    g.check_vertex_set(s);
    const std::vector<int> keep = s.to_vector();
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<VertexSet> adj(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int u : g.neighbors(keep[i]) & s) adj[i].insert(relabel[static_cast<std::size_t>(u)]);
    }
    return Graph::from_adjacency(std::move(adj));
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> map;
    VertexSet used;

    bool extend(int next) {
        if (next == pattern.n()) return true;
        const int need = pattern.degree(next);
        for (int h = 0; h < host.n(); ++h) {
            if (used.contains(h) || host.degree(h) < need) continue;
            bool ok = true;
            for (int prev = 0; prev < next && ok; ++prev) {
                ok = pattern.adjacent(prev, next) == host.adjacent(map[static_cast<std::size_t>(prev)], h);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(next)] = h;
            used.insert(h);
            if (extend(next + 1)) return true;
            used.erase(h);
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n() > host.n()) return std::nullopt;
    InducedSearch search{host, pattern, std::vector<int>(static_cast<std::size_t>(pattern.n()), -1), {}};
    if (!search.extend(0)) return std::nullopt;
    return Embedding{std::move(search.map)};
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.n()) return false;
    VertexSet seen;
    for (int h : e.map) {
        if (h < 0 || h >= host.n() || seen.contains(h)) return false;
        seen.insert(h);
    }
    for (int a = 0; a < pattern.n(); ++a) {
        for (int b = a + 1; b < pattern.n(); ++b) {
            if (pattern.adjacent(a, b) != host.adjacent(e.map[static_cast<std::size_t>(a)], e.map[static_cast<std::size_t>(b)])) {
                return false;
            }
        }
    }
    return true;
}

bool is_threshold_graph(const Graph& g) {
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        bool peeled = false;
        for (int v : rest) {
            const VertexSet nv = g.neighbors(v) & rest;
            if (nv.empty() || nv == rest - VertexSet::single(v)) {
                rest.erase(v);
                peeled = true;
                break;
            }
        }
        if (!peeled) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    const int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    VertexSet unvisited = g.vertices();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v : unvisited) {
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        }
        pos[static_cast<std::size_t>(best)] = step;
        unvisited.erase(best);
        for (int u : g.neighbors(best) & unvisited) ++weight[static_cast<std::size_t>(u)];
    }
    // The reverse visiting order must be a perfect elimination ordering.
    for (int v = 0; v < n; ++v) {
        VertexSet earlier;
        int parent = -1;
        for (int u : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)]) {
                earlier.insert(u);
                if (parent < 0 || pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(parent)]) parent = u;
            }
        }
        if (parent >= 0 && !(earlier - VertexSet::single(parent)).is_subset_of(g.neighbors(parent))) return false;
    }
    return true;
}

namespace {

bool low_degree_part(const Graph& g, VertexSet part) {
    for (int v : part) {
        if ((g.neighbors(v) & part).size() > 1) return false;
    }
    return true;
}

// Tries every clique containing `clique` and drawn from `candidates`.
bool polar_from(const Graph& g, VertexSet clique, VertexSet candidates) {
    if (low_degree_part(g, g.vertices() - clique)) return true;
    for (int v : candidates) {
        candidates.erase(v);
        if (polar_from(g, clique | VertexSet::single(v), candidates & g.neighbors(v))) return true;
    }
    return false;
}

}  // namespace

bool is_12_polar(const Graph& g, int max_n) {
    if (g.n() > max_n) {
        throw CapabilityError("is_12_polar is exhaustive and capped at " + std::to_string(max_n) + " vertices");
    }
    return polar_from(g, {}, g.vertices());
}

bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
    if ((p.clique | p.independent) != g.vertices() || p.clique.intersects(p.independent)) return false;
    for (int v : p.clique) {
        if (!(p.clique - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    }
    for (int v : p.independent) {
        if (g.neighbors(v).intersects(p.independent)) return false;
    }
    return true;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // Hammer-Simeone: m = max{i : d_i >= i-1} and the degree-sum identity.
    int m = 0;
    for (int i = 1; i <= n; ++i) {
        if (g.degree(order[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
    }
    long head = 0;
    long tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[static_cast<std::size_t>(i)]);
    if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

    VertexSet clique;
    for (int i = 0; i < m; ++i) clique.insert(order[static_cast<std::size_t>(i)]);
    const VertexSet independent = g.vertices() - clique;
    SplitPartition best{clique, independent};

    // Maximum cliques with independent complements differ by at most one swap.
    for (int x : independent) {
        const VertexSet missing = clique - g.neighbors(x);
        if (missing.size() != 1) continue;
        SplitPartition alt{(clique - missing) | VertexSet::single(x), (independent - VertexSet::single(x)) | missing};
        if (is_valid_split_partition(g, alt) && alt.clique < best.clique) best = alt;
    }
    return best;
}

}  // namespace domishold
