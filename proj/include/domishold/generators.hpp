#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domishold/graph.hpp"

namespace domishold {

Graph complete_graph(int n);
Graph path_graph(int n);
/// Throws InputError for n < 3.
Graph cycle_graph(int n);
Graph empty_graph(int n);
/// K_{1,k} with the centre at vertex 0.
Graph star_graph(int k);

/// G's vertices first, then H's shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
/// New vertex n adjacent to every vertex.
Graph add_universal(const Graph& g);
/// New vertex n with no neighbours.
Graph add_isolated(const Graph& g);
/// A private pendant neighbour n+v for every vertex v.
Graph add_pendant(const Graph& g);
Graph complement(const Graph& g);

enum class CreationStep { Isolated, Universal };

/// Parses "i u i u", "iuiu" or "0101" (0 = isolated, 1 = universal).
std::vector<CreationStep> parse_creation_sequence(const std::string& text);

/// Each step adds one vertex, isolated or dominating. The first step's kind is
/// irrelevant.
Graph threshold_from_sequence(const std::vector<CreationStep>& steps);

/// Creation sequence with independent fair coin flips.
Graph random_threshold(std::uint64_t seed, int n);

/// Erdos-Renyi G(n, p).
Graph random_graph(std::uint64_t seed, int n, double p);

/// Labelled graph number `code` on n vertices: bit k of code is the k-th pair
/// (i, j), i < j, in row-major order. Codes run over [0, 2^(n(n-1)/2)).
Graph graph_from_code(int n, std::uint64_t code);

/// Named-family dispatcher used by the command line, in prefix form:
///
///     complete N | path N | cycle N | empty N | star K | forbidden I
///     threshold_from_sequence SEQ | random_threshold N | random N P
///     disjoint_union FAMILY FAMILY | join FAMILY FAMILY
///     add_universal FAMILY | add_isolated FAMILY | add_pendant FAMILY
///
/// `seed` feeds the random families. Throws InputError on unknown names,
/// bad parameters or trailing tokens.
Graph generate(const std::vector<std::string>& spec, std::uint64_t seed = 0);

}  // namespace domishold
