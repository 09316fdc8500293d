#include "domishold/catalog.hpp"

namespace domishold {

namespace {

// Vertex order for the six-vertex members.
enum : int { U = 0, V = 1, A = 2, B = 3, C = 4, D = 5 };

ForbiddenGraph six_vertex(int index, std::string shape, std::initializer_list<Edge> extra) {
    std::vector<Edge> edges{{U, A}, {U, B}, {V, C}, {V, D}};
    edges.insert(edges.end(), extra.begin(), extra.end());
    return {index,
            "F" + std::to_string(index),
            std::move(shape),
            Graph::from_edges(6, edges),
            {"u", "v", "a", "b", "c", "d"},
            {U, V, A, B, C, D}};
}

std::vector<ForbiddenGraph> build_catalog() {
    std::vector<ForbiddenGraph> out;
    // C4 = u-a-d-v-u and C5 = u-a-x-d-v-u, with c = u and b = v.
    out.push_back({1, "F1", "C4", Graph::from_edges(4, {{0, 2}, {2, 3}, {3, 1}, {1, 0}}),
                   {"u", "v", "a", "d"}, {0, 1, 2, 1, 0, 3}});
    out.push_back({2, "F2", "C5", Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 3}, {3, 1}, {1, 0}}),
                   {"u", "v", "a", "d", "x"}, {0, 1, 2, 1, 0, 3}});
    out.push_back(six_vertex(3, "C6", {{A, C}, {B, D}}));
    out.push_back(six_vertex(4, "P6", {{A, C}}));
    out.push_back(six_vertex(5, "2P3", {}));
    out.push_back(six_vertex(6, "P3+K3", {{A, B}}));
    out.push_back(six_vertex(7, "2K3", {{A, B}, {C, D}}));
    out.push_back(six_vertex(8, "", {{A, C}, {A, B}}));
    out.push_back(six_vertex(9, "", {{A, C}, {B, C}, {A, B}}));
    out.push_back(six_vertex(10, "", {{A, C}, {A, B}, {C, D}}));
    out.push_back(six_vertex(11, "", {{A, C}, {B, C}, {A, B}, {C, D}}));
    out.push_back(six_vertex(12, "", {{A, C}, {B, C}, {B, D}, {A, B}, {C, D}}));
    out.push_back(six_vertex(13, "", {{A, C}, {A, D}, {B, C}, {B, D}, {A, B}, {C, D}}));
    return out;
}

}  // namespace

const std::vector<ForbiddenGraph>& forbidden_catalog() {
    static const std::vector<ForbiddenGraph> catalog = build_catalog();
    return catalog;
}

const ForbiddenGraph& forbidden_graph(int i) {
    if (i < 1 || i > 13) throw InputError("forbidden graph index " + std::to_string(i) + " outside 1..13");
    return forbidden_catalog()[static_cast<std::size_t>(i - 1)];
}

SummabilityWitness catalog_witness(const ForbiddenGraph& f) {
    const auto [u, v, a, b, c, d] = f.roles;
    return {{VertexSet{a, c}, VertexSet{b, d}}, {f.graph.neighbors(u), f.graph.neighbors(v)}};
}

}  // namespace domishold
