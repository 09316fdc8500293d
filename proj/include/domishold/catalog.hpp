#pragma once

#include <array>
#include <string>
#include <vector>

#include "domishold/graph.hpp"
#include "domishold/threshold.hpp"

namespace domishold {

/// One of the thirteen minimal non-HTD graphs, with stable vertex labels.
///
/// Every member has two degree-2 vertices u, v with disjoint neighbourhoods
/// N(u) = {a, b} and N(v) = {c, d}. In the two short cycles u and v are
/// adjacent, so c = u and b = v and the role vector repeats vertices.
struct ForbiddenGraph {
    int index = 0;          ///< 1..13
    std::string name;       ///< "F1" .. "F13"
    std::string shape;      ///< "C4", "2P3", ... or "" for the unnamed ones
    Graph graph;
    std::vector<std::string> labels;  ///< label of each vertex
    /// Vertex indices playing u, v, a, b, c, d.
    std::array<int, 6> roles{};
};

/// F1..F13 in catalogue order (F1 = C4, F2 = C5, F3 = C6, F4 = P6, F5 = 2P3,
/// F6 = P3+K3, F7 = 2K3, F8..F13 on {u,v,a,b,c,d} over the base edges
/// ua, ub, vc, vd).
const std::vector<ForbiddenGraph>& forbidden_catalog();

/// Throws InputError unless 1 <= i <= 13.
const ForbiddenGraph& forbidden_graph(int i);

/// False points {a,c}, {b,d} against true points N(u), N(v) on the
/// neighbourhood function of the catalogue graph.
SummabilityWitness catalog_witness(const ForbiddenGraph& f);

}  // namespace domishold
