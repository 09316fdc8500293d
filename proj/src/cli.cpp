#include "domishold/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "domishold/domishold.hpp"
#include "domishold/generators.hpp"
#include "domishold/io.hpp"
#include "domishold/solvers.hpp"

#ifndef DOMISHOLD_VERSION
#define DOMISHOLD_VERSION "0.0.0"
#endif

namespace domishold {

std::string version() { return DOMISHOLD_VERSION; }

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Flags {
    bool json = false;
    bool oracle = false;
    std::string out;
    std::uint64_t seed = 0;
    std::size_t cap_dual = kDefaultDualizationCap;
    int max_oracle_n = 16;

    ThresholdOptions threshold() const {
        ThresholdOptions o;
        o.dual_cap = cap_dual;
        return o;
    }
};

// Sets are 1-based in every external format.
json set_json(VertexSet s) {
    json a = json::array();
    for (int v : s) a.push_back(v + 1);
    return a;
}

VertexSet set_from_json(const json& a, int n) {
    VertexSet s;
    for (const auto& x : a) {
        const int v = x.get<int>();
        if (v < 1 || v > n) throw InputError("report lists vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        s.insert(v - 1);
    }
    return s;
}

json structure_json(const std::vector<std::int64_t>& weights, std::int64_t t) {
    return json{{"weights", weights}, {"t", t}};
}

json witness_json(const SummabilityWitness& w) {
    json f = json::array();
    json t = json::array();
    for (VertexSet s : w.false_points) f.push_back(set_json(s));
    for (VertexSet s : w.true_points) t.push_back(set_json(s));
    return json{{"false_points", f}, {"true_points", t}};
}

SummabilityWitness witness_from_json(const json& j, int n) {
    SummabilityWitness w;
    for (const auto& s : j.at("false_points")) w.false_points.push_back(set_from_json(s, n));
    for (const auto& s : j.at("true_points")) w.true_points.push_back(set_from_json(s, n));
    return w;
}

json certificate_json(const InfeasibilityCertificate& c) {
    auto side = [](const auto& terms) {
        json a = json::array();
        for (const auto& [s, m] : terms) a.push_back(json{{"set", set_json(s)}, {"multiplier", m}});
        return a;
    };
    return json{{"true_side", side(c.true_side)}, {"false_side", side(c.false_side)}};
}

InfeasibilityCertificate certificate_from_json(const json& j, int n) {
    InfeasibilityCertificate c;
    for (const auto& x : j.at("true_side")) c.true_side.emplace_back(set_from_json(x.at("set"), n), x.at("multiplier").get<std::int64_t>());
    for (const auto& x : j.at("false_side")) c.false_side.emplace_back(set_from_json(x.at("set"), n), x.at("multiplier").get<std::int64_t>());
    return c;
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        out += (first ? "" : ",") + std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

std::string weights_text(const std::vector<std::int64_t>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w[i]);
    return out;
}

void witness_text(std::ostream& out, const SummabilityWitness& w) {
    out << "witness:";
    for (VertexSet s : w.false_points) out << ' ' << set_text(s);
    out << " (false) vs";
    for (VertexSet s : w.true_points) out << ' ' << set_text(s);
    out << " (true)\n";
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Yes: return kExitYes;
        case Verdict::No: return kExitNo;
        case Verdict::Unknown: return kExitError;
    }
    return kExitError;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, Flags flags) : out_(out), err_(err), flags_(std::move(flags)) {}

    int recognize_td(const std::string& path);
    int recognize_htd(const std::string& path);
    int solve(const std::string& path, bool tds);
    int hypergraph(const std::string& path, bool dually_sperner);
    int generate(const std::vector<std::string>& spec, const std::string& format);
    int equivalence(const std::string& path, int census, int random, int random_max_n);
    int verify(const std::string& input, const std::string& report_path);
    int batch(const std::vector<std::string>& paths);

    json td_report(const Graph& g);
    json htd_report(const Graph& g);

private:
    void begin(const std::string& command, const std::string& input) {
        start_ = Clock::now();
        report_ = json::object();
        report_["command"] = command;
        if (!input.empty()) report_["input"] = input;
    }

    int finish(int code) {
        report_["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        report_["version"] = version();
        report_["exit_code"] = code;
        if (flags_.json) {
            const std::string text = report_.dump(2) + "\n";
            if (!flags_.out.empty()) {
                std::ofstream f(flags_.out);
                if (!f) throw InputError("cannot write '" + flags_.out + "'");
                f << text;
            } else {
                out_ << text;
            }
        }
        return code;
    }

    // Human-readable lines, suppressed under --json.
    std::ostream& text() { return flags_.json ? sink_ : out_; }

    std::ostream& out_;
    std::ostream& err_;
    Flags flags_;
    json report_;
    Clock::time_point start_;
    std::ostringstream sink_;
};

json Runner::td_report(const Graph& g) {
    json r;
    const TdRecognitionReport rep = domishold::recognize_td(g, flags_.threshold());
    r["n"] = g.n();
    r["verdict"] = to_string(rep.verdict);
    if (rep.structure) r["structure"] = structure_json(rep.structure->weights, rep.structure->t);
    if (rep.witness) r["witness"] = witness_json(*rep.witness);
    if (rep.certificate) r["certificate"] = certificate_json(*rep.certificate);
    if (!rep.note.empty()) r["note"] = rep.note;
    if (flags_.oracle && rep.structure) {
        json o{{"checked", g.n() <= flags_.max_oracle_n}};
        if (g.n() <= flags_.max_oracle_n) o["agrees"] = verify_td_structure(g, *rep.structure, flags_.max_oracle_n);
        r["oracle"] = o;
    }
    return r;
}

json Runner::htd_report(const Graph& g) {
    json r;
    const HtdRecognitionReport rep = domishold::recognize_htd(g);
    r["n"] = g.n();
    r["verdict"] = rep.htd ? "yes" : "no";
    if (rep.witness) {
        json emb = json::array();
        for (int v : rep.witness->embedding.map) emb.push_back(v + 1);
        r["witness"] = json{{"forbidden", "F" + std::to_string(rep.witness->index)},
                            {"index", rep.witness->index},
                            {"embedding", emb}};
    }
    if (flags_.oracle) {
        json o{{"checked", g.n() <= flags_.max_oracle_n}};
        if (g.n() <= flags_.max_oracle_n) {
            bool all_td = true;
            const std::uint64_t subsets = std::uint64_t{1} << g.n();
            for (std::uint64_t bits = 0; bits < subsets && all_td; ++bits) {
                all_td = domishold::recognize_td(induced_subgraph(g, VertexSet(bits)), flags_.threshold()).verdict == Verdict::Yes;
            }
            o["every_induced_subgraph_td"] = all_td;
            o["agrees"] = all_td == rep.htd;
        }
        r["oracle"] = o;
    }
    return r;
}

int Runner::recognize_td(const std::string& path) {
    begin("recognize-td", path);
    const Graph g = read_graph_file(path);
    report_.update(td_report(g));
    std::ostream& t = text();
    const std::string verdict = report_["verdict"];
    t << "verdict: " << (verdict == "yes" ? "total domishold" : verdict == "no" ? "not total domishold" : "unknown") << '\n';
    if (report_.contains("structure")) {
        t << "weights: " << weights_text(report_["structure"]["weights"].get<std::vector<std::int64_t>>()) << '\n';
        t << "t: " << report_["structure"]["t"].get<std::int64_t>() << '\n';
    }
    if (report_.contains("witness")) witness_text(t, witness_from_json(report_["witness"], g.n()));
    if (report_.contains("note")) t << "note: " << report_["note"].get<std::string>() << '\n';
    if (report_.contains("oracle") && report_["oracle"].contains("agrees")) {
        t << "oracle: " << (report_["oracle"]["agrees"].get<bool>() ? "structure verified exhaustively" : "STRUCTURE REJECTED") << '\n';
    }
    int code = verdict == "yes" ? kExitYes : verdict == "no" ? kExitNo : kExitError;
    if (report_.contains("oracle") && report_["oracle"].value("agrees", true) == false) code = kExitError;
    return finish(code);
}

int Runner::recognize_htd(const std::string& path) {
    begin("recognize-htd", path);
    const Graph g = read_graph_file(path);
    report_.update(htd_report(g));
    std::ostream& t = text();
    const bool htd = report_["verdict"] == "yes";
    t << "verdict: " << (htd ? "hereditary total domishold" : "not hereditary total domishold") << '\n';
    if (report_.contains("witness")) {
        t << "witness: induced " << report_["witness"]["forbidden"].get<std::string>() << " on vertices";
        for (int v : report_["witness"]["embedding"]) t << ' ' << v;
        t << '\n';
    }
    int code = htd ? kExitYes : kExitNo;
    if (report_.contains("oracle") && report_["oracle"].value("agrees", true) == false) code = kExitError;
    return finish(code);
}

int Runner::solve(const std::string& path, bool tds) {
    begin(tds ? "solve-tds" : "solve-ds", path);
    const Graph g = read_graph_file(path);
    report_["n"] = g.n();
    std::ostream& t = text();
    const TdRecognitionReport rec = domishold::recognize_td(g, flags_.threshold());
    report_["verdict"] = to_string(rec.verdict);
    if (rec.verdict != Verdict::Yes) {
        t << "graph is " << (rec.verdict == Verdict::No ? "not total domishold" : "of unknown status") << '\n';
        return finish(exit_for(rec.verdict));
    }
    SolveResult r;
    try {
        r = tds ? greedy_min_tds(g, *rec.structure) : approx_dominating_set(g, flags_.threshold());
    } catch (const PreconditionError& e) {
        report_["error"] = e.what();
        err_ << "error: " << e.what() << '\n';
        return finish(kExitError);
    } catch (const DomainError& e) {
        report_["error"] = e.what();
        err_ << "error: " << e.what() << '\n';
        return finish(kExitError);
    }
    report_["set"] = set_json(r.set);
    report_["size"] = r.size;
    report_["method"] = to_string(r.method);
    t << (tds ? "minimum total dominating set: " : "dominating set: ") << set_text(r.set) << " (size " << r.size
      << ", " << to_string(r.method) << ")\n";
    int code = kExitYes;
    if (flags_.oracle) {
        json o{{"checked", g.n() <= flags_.max_oracle_n}};
        if (g.n() <= flags_.max_oracle_n) {
            const SolveResult b = tds ? gamma_t_bruteforce(g, flags_.max_oracle_n) : gamma_bruteforce(g, flags_.max_oracle_n);
            const bool agrees = tds ? b.size == r.size : r.size <= 2 * b.size;
            o["set"] = set_json(b.set);
            o["size"] = b.size;
            o["agrees"] = agrees;
            t << "oracle: " << (tds ? "gamma_t = " : "gamma = ") << b.size << (agrees ? " (agrees)" : " (DISAGREES)") << '\n';
            if (!agrees) code = kExitError;
        }
        report_["oracle"] = o;
    }
    return finish(code);
}

namespace {

bool is_dnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    for (std::string line; std::getline(in, line);) {
        std::istringstream ss(line);
        std::string a, b;
        ss >> a >> b;
        if (a.empty() || a[0] == '#') continue;
        return a == "p" && b == "dnf";
    }
    return false;
}

PositiveDnf read_function(const std::string& path, Hypergraph* h) {
    if (is_dnf_file(path)) {
        PositiveDnf f = read_dnf_file(path);
        *h = Hypergraph(f.n(), f.implicants());
        return f;
    }
    *h = read_hypergraph_file(path);
    return dnf_of(*h);
}

}  // namespace

int Runner::hypergraph(const std::string& path, bool dually_sperner) {
    begin(dually_sperner ? "hypergraph-dually-sperner" : "hypergraph-threshold", path);
    Hypergraph h;
    const PositiveDnf f = read_function(path, &h);
    report_["n"] = h.n();
    std::ostream& t = text();
    if (dually_sperner) {
        const DuallySpernerResult r = is_dually_sperner(h);
        report_["verdict"] = r.dually_sperner ? "yes" : "no";
        t << "verdict: " << (r.dually_sperner ? "dually Sperner" : "not dually Sperner") << '\n';
        if (r.violation) {
            report_["violation"] = json::array({set_json(r.violation->first), set_json(r.violation->second)});
            t << "violating pair: " << set_text(r.violation->first) << ' ' << set_text(r.violation->second) << '\n';
        }
        return finish(r.dually_sperner ? kExitYes : kExitNo);
    }
    const ThresholdReport r = is_threshold(f, flags_.threshold());
    report_["verdict"] = to_string(r.verdict);
    t << "verdict: " << (r.verdict == Verdict::Yes ? "threshold" : r.verdict == Verdict::No ? "not threshold" : "unknown") << '\n';
    if (r.constant_one) {
        report_["constant_one"] = true;
        t << "note: the empty set is an edge, so every set contains an edge\n";
    }
    if (r.structure) {
        report_["structure"] = structure_json(r.structure->weights, r.structure->t);
        t << "weights: " << weights_text(r.structure->weights) << "\nt: " << r.structure->t << '\n';
    }
    if (r.witness) {
        report_["witness"] = witness_json(*r.witness);
        witness_text(t, *r.witness);
    }
    if (r.certificate) report_["certificate"] = certificate_json(*r.certificate);
    if (!r.note.empty()) report_["note"] = r.note;
    int code = exit_for(r.verdict);
    if (flags_.oracle && r.structure) {
        json o{{"checked", f.n() <= flags_.max_oracle_n}};
        if (f.n() <= flags_.max_oracle_n) {
            const bool ok = verify_separating_structure(f, *r.structure, flags_.max_oracle_n);
            o["agrees"] = ok;
            if (!ok) code = kExitError;
        }
        report_["oracle"] = o;
    }
    return finish(code);
}

int Runner::generate(const std::vector<std::string>& spec, const std::string& format) {
    const Graph g = domishold::generate(spec, flags_.seed);
    std::string text;
    if (format == "graph6") {
        text = encode_graph6(g) + "\n";
    } else if (format == "graph") {
        text = to_text(g);
    } else {
        throw InputError("unknown output format '" + format + "'");
    }
    if (flags_.out.empty()) {
        out_ << text;
    } else {
        std::ofstream f(flags_.out);
        if (!f) throw InputError("cannot write '" + flags_.out + "'");
        f << text;
    }
    return kExitYes;
}

int Runner::equivalence(const std::string& path, int census, int random, int random_max_n) {
    begin("equivalence", path);
    std::ostream& t = text();
    if (!path.empty()) {
        const Graph g = read_graph_file(path);
        const EquivalenceReport r = check_equivalence_chain(g, flags_.threshold());
        json legs = json::array();
        for (const auto& leg : r.legs) {
            json l{{"name", leg.name}, {"verdict", to_string(leg.verdict)}};
            if (!leg.note.empty()) l["note"] = leg.note;
            legs.push_back(l);
            t << (leg.verdict == Verdict::Yes ? "yes     " : leg.verdict == Verdict::No ? "no      " : "unknown ") << leg.name << '\n';
        }
        report_["n"] = g.n();
        report_["legs"] = legs;
        report_["unanimous"] = r.unanimous();
        report_["disagreement"] = r.disagreement();
        report_["verdict"] = r.unanimous() ? to_string(r.legs[0].verdict) : r.disagreement() ? "disagreement" : "unknown";
        if (r.disagreement()) t << "LEGS DISAGREE\n";
        return finish(r.disagreement() ? kExitNo : r.unanimous() ? kExitYes : kExitError);
    }
    std::size_t graphs = 0, disagreements = 0, unknown = 0, td = 0;
    json failures = json::array();
    auto check = [&](const Graph& g) {
        const EquivalenceReport r = check_equivalence_chain(g, flags_.threshold());
        ++graphs;
        if (r.disagreement()) {
            ++disagreements;
            if (failures.size() < 20) failures.push_back(encode_graph6(g));
        } else if (!r.unanimous()) {
            ++unknown;
        } else if (r.legs[0].verdict == Verdict::Yes) {
            ++td;
        }
    };
    for (int n = 0; n <= census; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t c = 0; c < codes; ++c) check(graph_from_code(n, c));
    }
    std::mt19937_64 rng(flags_.seed);
    for (int i = 0; i < random; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(random_max_n));
        const double p = static_cast<double>(rng() % 1001) / 1000.0;
        check(random_graph(rng(), n, p));
    }
    report_["graphs"] = graphs;
    report_["td"] = td;
    report_["disagreements"] = disagreements;
    report_["unknown"] = unknown;
    report_["failures_graph6"] = failures;
    report_["verdict"] = disagreements == 0 ? (unknown == 0 ? "unanimous" : "unknown") : "disagreement";
    t << graphs << " graphs, " << td << " TD, " << disagreements << " disagreements, " << unknown << " with unknown legs\n";
    return finish(disagreements > 0 ? kExitNo : unknown > 0 ? kExitError : kExitYes);
}

int Runner::verify(const std::string& input, const std::string& report_path) {
    begin("verify", input);
    std::ifstream in(report_path);
    if (!in) throw InputError("cannot open '" + report_path + "'");
    json rep;
    try {
        rep = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("report is not valid JSON: ") + e.what());
    }
    const std::string command = rep.value("command", "");
    const std::string verdict = rep.value("verdict", "");
    report_["report"] = report_path;
    report_["checked_command"] = command;
    json checks = json::array();
    bool ok = true;
    auto record = [&](const std::string& what, bool good) {
        checks.push_back(json{{"check", what}, {"ok", good}});
        ok = ok && good;
    };
    if (command == "recognize-td" || command == "solve-tds" || command == "solve-ds" || command == "recognize-htd") {
        const Graph g = read_graph_file(input);
        if (rep.value("n", -1) != g.n()) record("vertex count matches", false);
        if (command == "recognize-td") {
            if (rep.contains("structure")) {
                const TdStructure s{rep["structure"]["weights"].get<std::vector<std::int64_t>>(), rep["structure"]["t"].get<std::int64_t>()};
                record("structure verifies", check_td_structure(g, s, flags_.cap_dual));
                if (g.n() <= flags_.max_oracle_n) record("structure verifies exhaustively", verify_td_structure(g, s, flags_.max_oracle_n));
            }
            const PositiveDnf f = neighborhood_dnf(g);
            if (rep.contains("witness")) record("summability witness", is_valid_witness(f, witness_from_json(rep["witness"], g.n())));
            if (rep.contains("certificate")) record("infeasibility certificate", is_valid_certificate(f, certificate_from_json(rep["certificate"], g.n())));
            if (verdict == "yes" && !rep.contains("structure")) record("positive verdict carries a structure", false);
            if (verdict == "no" && !rep.contains("witness") && !rep.contains("certificate")) record("negative verdict carries evidence", false);
        } else if (command == "recognize-htd") {
            if (rep.contains("witness")) {
                const int idx = rep["witness"]["index"].get<int>();
                Embedding e;
                for (int v : rep["witness"]["embedding"]) {
                    if (v < 1 || v > g.n()) throw InputError("embedding vertex out of range");
                    e.map.push_back(v - 1);
                }
                record("induced copy of F" + std::to_string(idx), is_induced_embedding(g, forbidden_graph(idx).graph, e));
            } else if (verdict == "no") {
                record("negative verdict carries a witness", false);
            }
        } else if (rep.contains("set")) {
            const VertexSet s = set_from_json(rep["set"], g.n());
            const bool tds = command == "solve-tds";
            record(tds ? "set is total dominating" : "set is dominating", tds ? is_total_dominating_set(g, s) : is_dominating_set(g, s));
            record("size matches", rep.value("size", -1) == s.size());
        }
    } else if (command == "hypergraph-threshold" || command == "hypergraph-dually-sperner") {
        Hypergraph h;
        const PositiveDnf f = read_function(input, &h);
        if (rep.contains("structure")) {
            const SeparatingStructure s{rep["structure"]["weights"].get<std::vector<std::int64_t>>(), rep["structure"]["t"].get<std::int64_t>()};
            record("separating structure", check_separating_structure(f, s, flags_.cap_dual));
            if (f.n() <= flags_.max_oracle_n) record("separating structure exhaustively", verify_separating_structure(f, s, flags_.max_oracle_n));
        }
        if (rep.contains("witness")) record("summability witness", is_valid_witness(f, witness_from_json(rep["witness"], f.n())));
        if (rep.contains("certificate")) record("infeasibility certificate", is_valid_certificate(f, certificate_from_json(rep["certificate"], f.n())));
        if (rep.contains("violation")) {
            const VertexSet a = set_from_json(rep["violation"][0], h.n());
            const VertexSet b = set_from_json(rep["violation"][1], h.n());
            const auto& edges = h.edges();
            const bool present = std::find(edges.begin(), edges.end(), a) != edges.end() &&
                                 std::find(edges.begin(), edges.end(), b) != edges.end();
            record("violating pair", present && std::min((a - b).size(), (b - a).size()) >= 2);
        }
    } else if (command == "equivalence" && rep.contains("legs")) {
        const Graph g = read_graph_file(input);
        const EquivalenceReport r = check_equivalence_chain(g, flags_.threshold());
        for (std::size_t i = 0; i < r.legs.size(); ++i) {
            record(r.legs[i].name, rep["legs"][i]["verdict"].get<std::string>() == to_string(r.legs[i].verdict));
        }
    } else {
        throw InputError("report command '" + command + "' carries nothing to verify");
    }
    report_["checks"] = checks;
    report_["verdict"] = ok ? "yes" : "no";
    std::ostream& t = text();
    for (const auto& c : checks) t << (c["ok"].get<bool>() ? "ok      " : "FAILED  ") << c["check"].get<std::string>() << '\n';
    t << (ok ? "report verified" : "report rejected") << '\n';
    return finish(ok ? kExitYes : kExitNo);
}

int Runner::batch(const std::vector<std::string>& paths) {
    begin("batch", "");
    json results = json::array();
    std::ostream& t = text();
    bool errors = false;
    for (const auto& path : paths) {
        json r{{"input", path}};
        try {
            const Graph g = read_graph_file(path);
            const json td = td_report(g);
            const json htd = htd_report(g);
            r["n"] = g.n();
            r["td"] = td;
            r["htd"] = htd;
            t << path << ": n=" << g.n() << " td=" << td["verdict"].get<std::string>()
              << " htd=" << htd["verdict"].get<std::string>();
            if (htd.contains("witness")) t << " (" << htd["witness"]["forbidden"].get<std::string>() << ")";
            t << '\n';
            if (td["verdict"] == "unknown") errors = true;
        } catch (const Error& e) {
            r["error"] = e.what();
            t << path << ": error: " << e.what() << '\n';
            errors = true;
        }
        results.push_back(r);
    }
    report_["results"] = results;
    report_["verdict"] = errors ? "unknown" : "yes";
    return finish(errors ? kExitError : kExitYes);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DOMISHOLD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("DOMISHOLD_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Total domishold graphs: recognition, certificates and solvers", "domishold"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version());

    Flags flags;
    std::string seed_text;
    app.add_flag("--json", flags.json, "Emit a JSON report");
    app.add_option("--out", flags.out, "Write the report or generated graph to this file");
    app.add_option("--seed", seed_text, "Seed for random families (default: $DOMISHOLD_SEED or 0)");
    app.add_flag("--oracle", flags.oracle, "Cross-check against brute force");
    app.add_option("--cap-dual", flags.cap_dual, "Bound on intermediate families during dualization");
    app.add_option("--max-oracle-n", flags.max_oracle_n, "Largest n for exhaustive checks")->check(CLI::Range(0, 24));

    std::string path;
    auto* td = app.add_subcommand("recognize-td", "Decide whether a graph is total domishold");
    td->add_option("file", path, "Graph file (p graph or graph6)")->required();

    auto* htd = app.add_subcommand("recognize-htd", "Decide whether a graph is hereditary total domishold");
    htd->add_option("file", path, "Graph file")->required();

    bool want_tds = false, want_ds = false;
    auto* solve = app.add_subcommand("solve", "Minimum total dominating set or 2-approximate dominating set");
    solve->add_option("file", path, "Graph file")->required();
    auto* tds_flag = solve->add_flag("--tds", want_tds, "Minimum total dominating set (greedy)");
    auto* ds_flag = solve->add_flag("--ds", want_ds, "Dominating set within factor 2");
    tds_flag->excludes(ds_flag);

    bool want_threshold = false, want_ds_sperner = false;
    auto* hyper = app.add_subcommand("hypergraph", "Hypergraph (or DNF) threshold and dually Sperner tests");
    hyper->add_option("file", path, "Hypergraph file (p hgraph) or DNF file (p dnf)")->required();
    auto* th_flag = hyper->add_flag("--threshold", want_threshold, "Threshold test");
    auto* dsp_flag = hyper->add_flag("--dually-sperner", want_ds_sperner, "Dually Sperner test");
    th_flag->excludes(dsp_flag);

    std::vector<std::string> family;
    std::string format = "graph";
    auto* gen = app.add_subcommand("generate", "Write a graph from a named family");
    gen->add_option("family", family, "Family in prefix form, e.g. 'disjoint_union path 3 complete 3'")->required();
    gen->add_option("--format", format, "graph or graph6");

    int census = -1, random = 0, random_max_n = 8;
    auto* eq = app.add_subcommand("equivalence", "Evaluate the seven equivalent formulations of TD");
    eq->add_option("file", path, "Graph file");
    eq->add_option("--census", census, "Sweep all labelled graphs with n <= N")->check(CLI::Range(0, 7));
    eq->add_option("--random", random, "Also sweep this many seeded random graphs")->check(CLI::NonNegativeNumber);
    eq->add_option("--random-max-n", random_max_n, "Largest n of the random graphs")->check(CLI::Range(1, 16));

    std::string report_path;
    auto* ver = app.add_subcommand("verify", "Re-check the certificates in a JSON report");
    ver->add_option("file", path, "The input the report was produced from")->required();
    ver->add_option("report", report_path, "JSON report")->required();

    std::vector<std::string> files;
    auto* bat = app.add_subcommand("batch", "Run TD and HTD recognition over many graph files");
    bat->add_option("files", files, "Graph files")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        flags.seed = seed_text.empty() ? default_seed() : std::stoull(seed_text);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::logic_error&) {
        err << "error: --seed expects an unsigned integer\n";
        return kExitError;
    }

    Runner runner(out, err, flags);
    try {
        if (td->parsed()) return runner.recognize_td(path);
        if (htd->parsed()) return runner.recognize_htd(path);
        if (solve->parsed()) {
            if (!want_tds && !want_ds) throw InputError("solve needs --tds or --ds");
            return runner.solve(path, want_tds);
        }
        if (hyper->parsed()) {
            if (!want_threshold && !want_ds_sperner) throw InputError("hypergraph needs --threshold or --dually-sperner");
            return runner.hypergraph(path, want_ds_sperner);
        }
        if (gen->parsed()) return runner.generate(family, format);
        if (eq->parsed()) {
            if (path.empty() && census < 0 && random == 0) throw InputError("equivalence needs a file, --census or --random");
            if (!path.empty() && (census >= 0 || random > 0)) throw InputError("give either a file or a sweep, not both");
            return runner.equivalence(path, census, random, random_max_n);
        }
        if (ver->parsed()) return runner.verify(path, report_path);
        if (bat->parsed()) return runner.batch(files);
    } catch (const CapabilityError& e) {
        err << "unknown: " << e.what() << '\n';
        return kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace domishold
