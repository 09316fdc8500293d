#pragma once

// Brute-force references used by the tests. They work from edge lists and
// plain loops and share no algorithm with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "domishold/graph.hpp"
#include "domishold/hypergraph.hpp"
#include "domishold/threshold.hpp"

namespace oracle {

using domishold::Graph;
using domishold::VertexSet;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(g.n()), std::vector<bool>(static_cast<std::size_t>(g.n())));
    for (auto [u, v] : g.edges()) {
        m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    return m;
}

inline bool total_dominating(const Graph& g, std::uint64_t s) {
    const auto m = matrix(g);
    for (int v = 0; v < g.n(); ++v) {
        bool hit = false;
        for (int u = 0; u < g.n(); ++u) hit = hit || (m[v][u] && ((s >> u) & 1U));
        if (!hit) return false;
    }
    return true;
}

inline bool dominating(const Graph& g, std::uint64_t s) {
    const auto m = matrix(g);
    for (int v = 0; v < g.n(); ++v) {
        bool hit = (s >> v) & 1U;
        for (int u = 0; u < g.n(); ++u) hit = hit || (m[v][u] && ((s >> u) & 1U));
        if (!hit) return false;
    }
    return true;
}

/// Smallest size of a set with the property, or -1.
template <class Pred>
int min_size(int n, Pred pred) {
    int best = -1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int k = std::popcount(s);
        if ((best < 0 || k < best) && pred(s)) best = k;
    }
    return best;
}

inline int gamma_t(const Graph& g) { return min_size(g.n(), [&](std::uint64_t s) { return total_dominating(g, s); }); }
inline int gamma(const Graph& g) { return min_size(g.n(), [&](std::uint64_t s) { return dominating(g, s); }); }

/// Every labelled graph on n vertices.
template <class Visit>
void for_each_graph(int n, Visit visit) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        std::vector<domishold::Edge> edges;
        int k = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++k) {
                if ((code >> k) & 1U) edges.emplace_back(i, j);
            }
        }
        visit(Graph::from_edges(n, edges));
    }
}

/// Induced cycle of length >= 4, by checking every vertex sequence.
inline bool has_long_induced_cycle(const Graph& g) {
    const auto m = matrix(g);
    const int n = g.n();
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(n));
    // Cycle through path[0] = smallest vertex, closed back to it.
    auto extend = [&](auto& self) -> bool {
        const int last = path.back();
        for (int x = path[0] + 1; x < n; ++x) {
            if (used[x] || !m[last][x]) continue;
            bool chordless = true;
            for (std::size_t i = 1; i + 1 < path.size() && chordless; ++i) chordless = !m[path[i]][x];
            if (!chordless) continue;
            // Closing edge to path[0]: allowed only when the cycle is complete.
            path.push_back(x);
            used[x] = true;
            const bool closes = path.size() >= 3 && m[x][path[0]];
            if (closes && path.size() >= 4) return true;
            if (!closes && self(self)) return true;
            path.pop_back();
            used[x] = false;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), false);
        used[s] = true;
        if (extend(extend)) return true;
    }
    return false;
}

/// V splits into a clique and a part of maximum degree <= 1, over all 2^n splits.
inline bool polar_12(const Graph& g) {
    const auto m = matrix(g);
    const int n = g.n();
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            int deg = 0;
            for (int b = 0; b < n && ok; ++b) {
                if (a == b) continue;
                const bool ka = (k >> a) & 1U, kb = (k >> b) & 1U;
                if (ka && kb && !m[a][b]) ok = false;
                if (!ka && !kb && m[a][b]) ++deg;
            }
            if (!((k >> a) & 1U) && deg > 1) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

inline bool split(const Graph& g) {
    const auto m = matrix(g);
    const int n = g.n();
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            for (int b = a + 1; b < n && ok; ++b) {
                const bool ka = (k >> a) & 1U, kb = (k >> b) & 1U;
                if (ka && kb && !m[a][b]) ok = false;
                if (!ka && !kb && m[a][b]) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// Minimal transversals by testing every subset.
inline std::vector<VertexSet> transversals(const domishold::Hypergraph& h) {
    std::vector<VertexSet> out;
    const auto hits = [&](std::uint64_t s) {
        for (VertexSet e : h.edges()) {
            if ((e.bits() & s) == 0) return false;
        }
        return true;
    };
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.n()); ++s) {
        if (!hits(s)) continue;
        bool minimal = true;
        for (int v = 0; v < h.n() && minimal; ++v) {
            if (((s >> v) & 1U) && hits(s & ~(std::uint64_t{1} << v))) minimal = false;
        }
        if (minimal) out.push_back(VertexSet(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every positive Boolean function on n <= 4 variables, as its minimal true
/// points, by filtering all 2^(2^n) truth tables for monotonicity.
inline std::vector<domishold::PositiveDnf> all_positive_functions(int n) {
    std::vector<domishold::PositiveDnf> out;
    const std::uint64_t points = std::uint64_t{1} << n;
    for (std::uint64_t table = 0; table < (std::uint64_t{1} << points); ++table) {
        bool monotone = true;
        for (std::uint64_t x = 0; x < points && monotone; ++x) {
            if (!((table >> x) & 1U)) continue;
            for (int v = 0; v < n && monotone; ++v) monotone = (table >> (x | (std::uint64_t{1} << v))) & 1U;
        }
        if (!monotone) continue;
        std::vector<VertexSet> minimal;
        for (std::uint64_t x = 0; x < points; ++x) {
            if (!((table >> x) & 1U)) continue;
            bool min = true;
            for (int v = 0; v < n && min; ++v) {
                if (((x >> v) & 1U) && ((table >> (x & ~(std::uint64_t{1} << v))) & 1U)) min = false;
            }
            if (min) minimal.push_back(VertexSet(x));
        }
        out.push_back(domishold::make_dnf(n, minimal));
    }
    return out;
}

inline domishold::Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int max_edges, double p = 0.4) {
    std::uniform_int_distribution<int> count(0, max_edges);
    std::bernoulli_distribution in(p);
    std::vector<VertexSet> edges;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        VertexSet e;
        for (int v = 0; v < n; ++v) {
            if (in(rng)) e.insert(v);
        }
        edges.push_back(e);
    }
    return domishold::Hypergraph(n, edges);
}

}  // namespace oracle
