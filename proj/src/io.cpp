#include "domishold/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "domishold/error.hpp"

namespace domishold {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

long parse_int(const std::string& s, int line) {
    long v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
    return v;
}

struct Record {
    int line;
    std::vector<std::string> tokens;
};

// Header "p <kind> n m" followed by exactly m records tagged `tag`.
struct Parsed {
    int n = 0;
    std::vector<Record> records;
};

Parsed parse_records(std::istream& in, const std::string& kind, const std::string& tag) {
    Parsed p;
    bool header = false;
    long m = 0;
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto tokens = split(raw);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (!header) {
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != kind) {
                fail(lineno, "expected header 'p " + kind + " <n> <m>'");
            }
            const long n = parse_int(tokens[2], lineno);
            m = parse_int(tokens[3], lineno);
            if (n < 0 || n > kMaxVertices) fail(lineno, "vertex count must lie in 0.." + std::to_string(kMaxVertices));
            if (m < 0) fail(lineno, "negative record count");
            p.n = static_cast<int>(n);
            header = true;
            continue;
        }
        if (tokens[0] != tag) fail(lineno, "expected a '" + tag + "' line");
        if (static_cast<long>(p.records.size()) == m) fail(lineno, "more records than the header declares");
        tokens.erase(tokens.begin());
        p.records.push_back({lineno, std::move(tokens)});
    }
    if (!header) fail(lineno + 1, "missing header 'p " + kind + " <n> <m>'");
    if (static_cast<long>(p.records.size()) != m) {
        fail(lineno, "header declares " + std::to_string(m) + " records, found " + std::to_string(p.records.size()));
    }
    return p;
}

int vertex(const std::string& tok, int n, int line) {
    const long v = parse_int(tok, line);
    if (v < 1 || v > n) fail(line, "vertex " + tok + " outside 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

std::vector<VertexSet> set_records(const Parsed& p) {
    std::vector<VertexSet> sets;
    for (const Record& r : p.records) {
        VertexSet s;
        for (const auto& tok : r.tokens) s.insert(vertex(tok, p.n, r.line));
        sets.push_back(s);
    }
    return sets;
}

void write_sets(std::ostream& out, const char* kind, char tag, int n, const std::vector<VertexSet>& sets) {
    out << "p " << kind << ' ' << n << ' ' << sets.size() << '\n';
    for (VertexSet s : sets) {
        out << tag;
        for (int v : s) out << ' ' << v + 1;
        out << '\n';
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Graph parse_graph(std::istream& in) {
    const Parsed p = parse_records(in, "graph", "e");
    std::vector<Edge> edges;
    for (const Record& r : p.records) {
        if (r.tokens.size() != 2) fail(r.line, "an edge line needs exactly two vertices");
        const int u = vertex(r.tokens[0], p.n, r.line);
        const int v = vertex(r.tokens[1], p.n, r.line);
        if (u == v) fail(r.line, "loops are not allowed");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(p.n, edges);
}

Hypergraph parse_hypergraph(std::istream& in) {
    const Parsed p = parse_records(in, "hgraph", "h");
    return Hypergraph(p.n, set_records(p));
}

PositiveDnf parse_dnf(std::istream& in) {
    const Parsed p = parse_records(in, "dnf", "i");
    return make_dnf(p.n, set_records(p));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

PositiveDnf parse_dnf(const std::string& text) {
    std::istringstream in(text);
    return parse_dnf(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << "p graph " << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) { write_sets(out, "hgraph", 'h', h.n(), h.edges()); }

void write_dnf(std::ostream& out, const PositiveDnf& f) { write_sets(out, "dnf", 'i', f.n(), f.implicants()); }

std::string to_text(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::string to_text(const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

std::string to_text(const PositiveDnf& f) {
    std::ostringstream out;
    write_dnf(out, f);
    return out.str();
}

Graph decode_graph6(const std::string& input) {
    std::string s = input;
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::vector<int> bytes;
    for (char ch : s) {
        const int b = static_cast<unsigned char>(ch) - 63;
        if (b < 0 || b > 63) throw InputError(std::string("graph6: invalid character '") + ch + "'");
        bytes.push_back(b);
    }
    std::size_t pos = 0;
    auto take = [&](int count) {
        std::uint64_t v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= bytes.size()) throw InputError("graph6: truncated size field");
            v = (v << 6) | static_cast<std::uint64_t>(bytes[pos++]);
        }
        return v;
    };
    if (bytes.empty()) throw InputError("graph6: empty input");
    std::uint64_t n = 0;
    if (bytes[0] != 63) {
        n = take(1);
    } else {
        ++pos;
        if (pos < bytes.size() && bytes[pos] == 63) {
            ++pos;
            n = take(6);
        } else {
            n = take(3);
        }
    }
    if (n > static_cast<std::uint64_t>(kMaxVertices)) throw InputError("graph6: more than " + std::to_string(kMaxVertices) + " vertices");
    const int nv = static_cast<int>(n);
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = (pairs + 5) / 6;
    if (bytes.size() - pos != need) throw InputError("graph6: expected " + std::to_string(need) + " data bytes");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < nv; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = bytes[pos + k / 6];
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(nv, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph read_graph_file(const std::string& path) {
    const std::string text = slurp(path);
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        const auto tokens = split(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens[0] == "p") break;
        return decode_graph6(tokens[0]);
    }
    return parse_graph(text);
}

Hypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(slurp(path)); }

PositiveDnf read_dnf_file(const std::string& path) { return parse_dnf(slurp(path)); }

}  // namespace domishold
