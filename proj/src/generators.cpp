#include "domishold/generators.hpp"

#include <cctype>
#include <charconv>
#include <random>

#include "domishold/catalog.hpp"

namespace domishold {

Graph complete_graph(int n) {
    if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = VertexSet::range(n) - VertexSet::single(v);
    return Graph::from_adjacency(std::move(adj));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int k) {
    std::vector<Edge> edges;
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(k + 1, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.n();
    if (n + h.n() > kMaxVertices) throw InputError("disjoint union exceeds the vertex limit");
    std::vector<VertexSet> adj = g.adjacency();
    for (VertexSet nv : h.adjacency()) adj.emplace_back(nv.bits() << n);
    return Graph::from_adjacency(std::move(adj));
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.n();
    const Graph u = disjoint_union(g, h);
    const VertexSet left = VertexSet::range(n);
    const VertexSet right = u.vertices() - left;
    std::vector<VertexSet> adj = u.adjacency();
    for (int v = 0; v < u.n(); ++v) adj[static_cast<std::size_t>(v)] |= left.contains(v) ? right : left;
    return Graph::from_adjacency(std::move(adj));
}

Graph add_universal(const Graph& g) { return join(g, Graph(1)); }

Graph add_isolated(const Graph& g) { return disjoint_union(g, Graph(1)); }

Graph add_pendant(const Graph& g) {
    const int n = g.n();
    if (2 * n > kMaxVertices) throw InputError("adding pendants exceeds the vertex limit");
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    return Graph::from_edges(2 * n, edges);
}

Graph complement(const Graph& g) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = g.vertices() - g.closed_neighbors(v);
    return Graph::from_adjacency(std::move(adj));
}

std::vector<CreationStep> parse_creation_sequence(const std::string& text) {
    std::vector<CreationStep> steps;
    for (char ch : text) {
        switch (std::tolower(static_cast<unsigned char>(ch))) {
            case 'i': case '0': steps.push_back(CreationStep::Isolated); break;
            case 'u': case 'd': case '1': steps.push_back(CreationStep::Universal); break;
            case ' ': case ',': case '\t': break;
            default: throw InputError(std::string("bad creation-sequence symbol '") + ch + "'");
        }
    }
    return steps;
}

Graph threshold_from_sequence(const std::vector<CreationStep>& steps) {
    if (static_cast<int>(steps.size()) > kMaxVertices) throw InputError("creation sequence too long");
    Graph g(0);
    for (CreationStep s : steps) g = s == CreationStep::Universal ? add_universal(g) : add_isolated(g);
    return g;
}

Graph random_threshold(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::vector<CreationStep> steps;
    for (int i = 0; i < n; ++i) steps.push_back((rng() >> 63) != 0 ? CreationStep::Universal : CreationStep::Isolated);
    return threshold_from_sequence(steps);
}

Graph random_graph(std::uint64_t seed, int n, double p) {
    if (p < 0 || p > 1) throw InputError("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if ((code >> k) & 1U) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

class FamilyParser {
public:
    FamilyParser(const std::vector<std::string>& tokens, std::uint64_t seed) : tokens_(tokens), seed_(seed) {}

    Graph parse() {
        Graph g = family();
        if (pos_ != tokens_.size()) throw InputError("unexpected token '" + tokens_[pos_] + "'");
        return g;
    }

private:
    const std::string& next(const char* what) {
        if (pos_ >= tokens_.size()) throw InputError(std::string("missing ") + what);
        return tokens_[pos_++];
    }

    int integer(const char* what) {
        const std::string& s = next(what);
        int value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || end != s.data() + s.size() || value < 0) {
            throw InputError(std::string("bad ") + what + " '" + s + "'");
        }
        return value;
    }

    double probability() {
        const std::string& s = next("edge probability");
        try {
            std::size_t used = 0;
            const double p = std::stod(s, &used);
            if (used != s.size()) throw InputError("bad edge probability '" + s + "'");
            return p;
        } catch (const std::logic_error&) {
            throw InputError("bad edge probability '" + s + "'");
        }
    }

    Graph family() {
        const std::string name = next("family name");
        if (name == "complete") return complete_graph(integer("vertex count"));
        if (name == "path") return path_graph(integer("vertex count"));
        if (name == "cycle") return cycle_graph(integer("vertex count"));
        if (name == "empty") return empty_graph(integer("vertex count"));
        if (name == "star") return star_graph(integer("leaf count"));
        if (name == "forbidden") return forbidden_graph(integer("catalogue index")).graph;
        if (name == "threshold_from_sequence") return threshold_from_sequence(parse_creation_sequence(next("creation sequence")));
        if (name == "random_threshold") return random_threshold(seed_++, integer("vertex count"));
        if (name == "random") {
            const int n = integer("vertex count");
            return random_graph(seed_++, n, probability());
        }
        if (name == "add_universal") return add_universal(family());
        if (name == "add_isolated") return add_isolated(family());
        if (name == "add_pendant") return add_pendant(family());
        if (name == "disjoint_union" || name == "join") {
            Graph left = family();
            Graph right = family();
            return name == "join" ? join(left, right) : disjoint_union(left, right);
        }
        throw InputError("unknown graph family '" + name + "'");
    }

    const std::vector<std::string>& tokens_;
    std::uint64_t seed_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph generate(const std::vector<std::string>& spec, std::uint64_t seed) {
    return FamilyParser(spec, seed).parse();
}

}  // namespace domishold
