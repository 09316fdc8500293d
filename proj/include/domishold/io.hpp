#pragma once

#include <iosfwd>
#include <string>

#include "domishold/graph.hpp"
#include "domishold/hypergraph.hpp"
#include "domishold/threshold.hpp"

namespace domishold {

/// Text formats, 1-based vertices, '#' starts a comment line:
///
///     p graph  <n> <m>   then m lines  e <u> <v>
///     p hgraph <n> <m>   then m lines  h <v1> <v2> ...   (may be empty)
///     p dnf    <n> <m>   then m lines  i <v1> <v2> ...   (may be empty)
///
/// Parse failures throw InputError with the offending line number.
Graph parse_graph(std::istream& in);
Hypergraph parse_hypergraph(std::istream& in);
PositiveDnf parse_dnf(std::istream& in);

Graph parse_graph(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);
PositiveDnf parse_dnf(const std::string& text);

void write_graph(std::ostream& out, const Graph& g);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_dnf(std::ostream& out, const PositiveDnf& f);

std::string to_text(const Graph& g);
std::string to_text(const Hypergraph& h);
std::string to_text(const PositiveDnf& f);

/// Standard graph6, optionally with the ">>graph6<<" header.
Graph decode_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

/// Reads a graph file: the `p graph` format, or graph6 when the first
/// non-comment line does not start with 'p'.
Graph read_graph_file(const std::string& path);
Hypergraph read_hypergraph_file(const std::string& path);
PositiveDnf read_dnf_file(const std::string& path);

}  // namespace domishold
