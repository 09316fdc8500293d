// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "domishold/domishold.hpp"
#include "domishold/generators.hpp"
#include "domishold/solvers.hpp"
#include "oracles.hpp"

using namespace domishold;

namespace {

constexpr int kCensusN = 6;

struct Soundness {
    long td_checked = 0;
    long td_failed = 0;
    long sep_checked = 0;
    long sep_failed = 0;
} soundness;

void check_td(const Graph& g, const TdStructure& s) {
    ++soundness.td_checked;
    const bool ok = g.n() <= 14 ? verify_td_structure(g, s, 14) : check_td_structure(g, s);
    if (!ok) ++soundness.td_failed;
}

void check_sep(const PositiveDnf& f, const SeparatingStructure& s) {
    ++soundness.sep_checked;
    const bool ok = f.n() <= 16 ? verify_separating_structure(f, s, 16) : check_separating_structure(f, s);
    if (!ok) ++soundness.sep_failed;
}

// TD verdict; any structure produced is sent to the soundness ledger.
bool td(const Graph& g) {
    const TdRecognitionReport r = recognize_td(g);
    if (r.verdict == Verdict::Unknown) throw CapabilityError("recognize_td returned unknown: " + r.note);
    if (r.structure) check_td(g, *r.structure);
    return r.verdict == Verdict::Yes;
}

ThresholdReport threshold(const PositiveDnf& f) {
    ThresholdReport r = is_threshold(f);
    if (r.structure) check_sep(f, *r.structure);
    return r;
}

std::uint64_t code_of(const Graph& g) {
    std::uint64_t code = 0;
    int k = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j, ++k) {
            if (g.adjacent(i, j)) code |= std::uint64_t{1} << k;
        }
    }
    return code;
}

// TD verdict of every labelled graph with n <= kCensusN, indexed by edge code.
struct Census {
    std::vector<std::vector<char>> td;

    Census() {
        for (int n = 0; n <= kCensusN; ++n) {
            const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
            std::vector<char> v(codes);
            for (std::uint64_t c = 0; c < codes; ++c) v[c] = ::td(graph_from_code(n, c));
            td.push_back(std::move(v));
        }
    }

    bool is_td(const Graph& g) const { return td[static_cast<std::size_t>(g.n())][code_of(g)] != 0; }

    void each(const std::function<void(const Graph&)>& visit) const {
        for (int n = 0; n <= kCensusN; ++n) {
            for (std::uint64_t c = 0; c < td[static_cast<std::size_t>(n)].size(); ++c) visit(graph_from_code(n, c));
        }
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string count(const char* what, long n) { return std::to_string(n) + " " + what; }

// Seeded TD graphs on at most 12 vertices without isolated vertices.
std::vector<Graph> td_corpus(std::size_t want) {
    std::mt19937_64 rng(8);
    std::vector<Graph> out;
    while (out.size() < want) {
        Graph g;
        switch (rng() % 4) {
            case 0: {
                g = random_threshold(rng(), 2 + static_cast<int>(rng() % 10));
                if (g.has_isolated_vertex()) g = add_universal(g);
                break;
            }
            case 1:
                g = random_graph(rng(), 2 + static_cast<int>(rng() % 11), 0.5 + 0.05 * static_cast<double>(rng() % 9));
                break;
            case 2:
                g = embed_into_td(random_graph(rng(), 1 + static_cast<int>(rng() % 5), 0.4)).graph;
                break;
            default:
                g = add_pendant(random_graph(rng(), 1 + static_cast<int>(rng() % 6), 0.4));
                break;
        }
        if (g.n() <= 12 && !g.has_isolated_vertex() && td(g)) out.push_back(g);
    }
    return out;
}

Hypergraph random_dually_sperner(std::mt19937_64& rng) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const std::size_t target = 1 + rng() % 10;
    std::vector<VertexSet> edges;
    for (int attempt = 0; attempt < 200 && edges.size() < target; ++attempt) {
        VertexSet e;
        const double p = 0.15 + 0.1 * static_cast<double>(rng() % 6);
        std::bernoulli_distribution in(p);
        for (int v = 0; v < n; ++v) {
            if (in(rng)) e.insert(v);
        }
        bool ok = true;
        for (VertexSet f : edges) ok = ok && std::min((e - f).size(), (f - e).size()) <= 1;
        if (ok) edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

}  // namespace

int main() {
    std::printf("building the census of labelled graphs with n <= %d\n", kCensusN);
    std::fflush(stdout);
    const Census census;

    report(1, "catalogue validity", [] {
        long bad = 0;
        for (const ForbiddenGraph& f : forbidden_catalog()) {
            bool ok = !td(f.graph) && is_valid_witness(neighborhood_dnf(f.graph), catalog_witness(f));
            const VertexSet all = f.graph.vertices();
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.graph.n()); ++s) {
                if (VertexSet(s) != all) ok = ok && recognize_htd(induced_subgraph(f.graph, VertexSet(s))).htd;
            }
            if (!ok) ++bad;
        }
        return Outcome{bad == 0, "13 graphs, " + count("invalid", bad)};
    });

    report(2, "hereditary equivalence (n <= 6)", [&] {
        long graphs = 0, bad = 0, htd = 0;
        census.each([&](const Graph& g) {
            ++graphs;
            bool all_td = true;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()) && all_td; ++s) {
                all_td = census.is_td(induced_subgraph(g, VertexSet(s)));
            }
            const bool h = recognize_htd(g).htd;
            htd += h;
            if (h != all_td) ++bad;
        });
        return Outcome{bad == 0, count("graphs", graphs) + ", " + count("HTD", htd) + ", " + count("disagreements", bad)};
    });

    report(3, "seven-leg agreement", [] {
        long graphs = 0, disagree = 0, unknown = 0;
        auto visit = [&](const Graph& g) {
            ++graphs;
            const EquivalenceReport r = check_equivalence_chain(g);
            if (r.disagreement()) ++disagree;
            else if (!r.unanimous()) ++unknown;
        };
        for (int n = 0; n <= 5; ++n) oracle::for_each_graph(n, visit);
        std::mt19937_64 rng(3);
        for (int i = 0; i < 1000; ++i) {
            visit(random_graph(rng(), 1 + static_cast<int>(rng() % 8), static_cast<double>(rng() % 101) / 100.0));
        }
        return Outcome{disagree == 0 && unknown == 0,
                       count("graphs", graphs) + ", " + count("disagreements", disagree) + ", " + count("with unknown legs", unknown)};
    });

    report(5, "composition laws", [] {
        long bad = 0, td_graphs = 0;
        std::mt19937_64 rng(5);
        for (int i = 0; i < 500; ++i) {
            const Graph g = random_graph(rng(), 1 + static_cast<int>(rng() % 10), static_cast<double>(rng() % 101) / 100.0);
            const bool t = td(g);
            td_graphs += t;
            if (t != td(add_universal(g))) ++bad;
            if (t != td(disjoint_union(g, complete_graph(2)))) ++bad;
            if (!td(add_isolated(g))) ++bad;
            const TdRecognitionReport r = recognize_td(g);
            if (r.structure) {
                const TdStructure pos = make_positive(g, *r.structure);
                check_td(g, pos);
                const auto [gu, su] = structure_add_universal(g, pos);
                check_td(gu, su);
                const auto [gk, sk] = structure_union_unique_min(g, *r.structure, complete_graph(2));
                check_td(gk, sk);
            }
            const TdEmbedding e = embed_into_td(g);
            const bool verifies = e.graph.n() <= 22 ? verify_td_structure(e.graph, e.structure, 22) : check_td_structure(e.graph, e.structure);
            if (!verifies || !is_induced_embedding(e.graph, g, e.embedding) || !td(e.graph)) ++bad;
        }
        return Outcome{bad == 0, "500 graphs (" + count("TD", td_graphs) + "), " + count("violations", bad)};
    });

    report(6, "dually Sperner hypergraphs are threshold", [] {
        long bad = 0, edges = 0;
        std::mt19937_64 rng(6);
        for (int i = 0; i < 1000; ++i) {
            const Hypergraph h = random_dually_sperner(rng);
            edges += static_cast<long>(h.edge_count());
            if (!is_dually_sperner(h).dually_sperner) {
                ++bad;
                continue;
            }
            const PositiveDnf f = dnf_of(h);
            const ThresholdReport r = threshold(f);
            const bool ok = r.verdict == Verdict::Yes && (r.structure ? verify_separating_structure(f, *r.structure) : r.constant_one);
            if (!ok) ++bad;
        }
        return Outcome{bad == 0, "1000 hypergraphs, " + count("edges in total", edges) + ", " + count("rejected", bad)};
    });

    report(7, "hypergraph to graph bridge", [] {
        long bad = 0, yes = 0;
        std::mt19937_64 rng(7);
        for (int i = 0; i < 500; ++i) {
            const Hypergraph h = oracle::random_hypergraph(rng, 1 + static_cast<int>(rng() % 8), 6);
            const bool t = threshold(dnf_of(h)).verdict == Verdict::Yes;
            yes += t;
            if (t != td(split_incidence_graph(h).graph)) ++bad;
        }
        return Outcome{bad == 0, "500 hypergraphs (" + count("threshold", yes) + "), " + count("disagreements", bad)};
    });

    std::vector<Graph> census_td;
    census.each([&](const Graph& g) {
        if (census.is_td(g)) census_td.push_back(g);
    });
    const std::vector<Graph> corpus = td_corpus(200);

    report(8, "greedy solver exactness", [&] {
        long graphs = 0, bad = 0;
        auto visit = [&](const Graph& g) {
            if (g.has_isolated_vertex()) return;
            ++graphs;
            const TdRecognitionReport r = recognize_td(g);
            if (!r.structure || greedy_min_tds(g, *r.structure).size != gamma_t_bruteforce(g).size) ++bad;
        };
        for (const Graph& g : census_td) visit(g);
        for (const Graph& g : corpus) visit(g);
        return Outcome{bad == 0, count("TD graphs", graphs) + ", " + count("disagreements", bad)};
    });

    report(9, "dominating set approximation", [&] {
        long graphs = 0, skipped = 0, bad = 0;
        auto visit = [&](const Graph& g) {
            const int gd = gamma_bruteforce(g).size;
            if (!g.has_isolated_vertex()) {
                const int gt = gamma_t_bruteforce(g).size;
                if (gd > gt || gt > 2 * gd) ++bad;
            }
            if (!td(remove_vertices(g, g.isolated_vertices()))) {
                ++skipped;
                return;
            }
            ++graphs;
            const SolveResult a = approx_dominating_set(g);
            if (!is_dominating_set(g, a.set) || a.size > 2 * gd) ++bad;
        };
        for (const Graph& g : census_td) visit(g);
        for (const Graph& g : corpus) visit(g);
        return Outcome{bad == 0, count("graphs", graphs) + " (" + count("skipped", skipped) + "), " + count("violations", bad)};
    });

    report(10, "chordal and (1,2)-polar", [&] {
        long htd = 0, bad = 0;
        census.each([&](const Graph& g) {
            if (!recognize_htd(g).htd) return;
            ++htd;
            if (!is_chordal(g) || !is_12_polar(g)) ++bad;
        });
        for (int i = 8; i <= 13; ++i) {
            const Graph& f = forbidden_graph(i).graph;
            if (!is_chordal(f) || !is_12_polar(f) || td(f)) ++bad;
        }
        return Outcome{bad == 0, count("HTD graphs", htd) + " and F8..F13, " + count("violations", bad)};
    });

    report(11, "split graphs", [&] {
        const Graph f13 = forbidden_graph(13).graph;
        long split = 0, bad = 0;
        census.each([&](const Graph& g) {
            if (!split_partition(g)) return;
            ++split;
            if (recognize_htd(g).htd != !find_induced(g, f13).has_value()) ++bad;
        });
        return Outcome{bad == 0, count("split graphs", split) + ", " + count("disagreements", bad)};
    });

    report(12, "threshold graphs are HTD", [] {
        long bad = 0;
        std::mt19937_64 rng(12);
        for (int i = 0; i < 500; ++i) {
            const Graph g = random_threshold(rng(), 1 + static_cast<int>(rng() % 12));
            if (!is_threshold_graph(g) || !recognize_htd(g).htd || !td(g)) ++bad;
        }
        return Outcome{bad == 0, "500 graphs, " + count("failures", bad)};
    });

    report(13, "asummability cross-check", [] {
        long functions = 0, yes = 0, bad = 0;
        for (int n = 0; n <= 4; ++n) {
            for (const PositiveDnf& f : oracle::all_positive_functions(n)) {
                ++functions;
                const bool t = threshold(f).verdict == Verdict::Yes;
                yes += t;
                if (t == is_k_summable(f, 4).has_value()) ++bad;
            }
        }
        return Outcome{bad == 0, count("functions", functions) + " (" + count("threshold", yes) + "), " + count("disagreements", bad)};
    });

    report(4, "certificate soundness", [] {
        const bool ok = soundness.td_failed == 0 && soundness.sep_failed == 0 && soundness.td_checked > 0 && soundness.sep_checked > 0;
        return Outcome{ok, std::to_string(soundness.td_checked) + " TD structures, " + std::to_string(soundness.sep_checked) +
                               " separating structures, " + std::to_string(soundness.td_failed + soundness.sep_failed) + " failures"};
    });

    std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " criteria failed").c_str());
    return failures == 0 ? 0 : 1;
}
