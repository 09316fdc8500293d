#include "domishold/threshold.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "domishold/lp.hpp"

namespace domishold {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

PositiveDnf make_dnf(int n, std::vector<VertexSet> terms) {
    if (n < 0 || n > kMaxVertices) throw InputError("variable count " + std::to_string(n) + " out of range");
    const VertexSet all = VertexSet::range(n);
    for (VertexSet t : terms) {
        if (!t.is_subset_of(all)) throw InputError("term " + t.to_string() + " uses a variable outside [0," + std::to_string(n) + ")");
    }
    PositiveDnf f;
    f.n_ = n;
    f.implicants_ = minimize_family(std::move(terms));
    return f;
}

PositiveDnf dnf_of(const Hypergraph& h) { return make_dnf(h.n(), h.edges()); }

bool eval(const PositiveDnf& f, VertexSet support) {
    const auto& imp = f.implicants();
    return std::any_of(imp.begin(), imp.end(), [support](VertexSet p) { return p.is_subset_of(support); });
}

bool eval(const PositiveDnf& f, std::span<const int> bits) {
    if (static_cast<int>(bits.size()) != f.n()) {
        throw InputError("point has length " + std::to_string(bits.size()) + ", expected " + std::to_string(f.n()));
    }
    VertexSet support;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw InputError("point entries must be 0 or 1");
        if (bits[i] == 1) support.insert(static_cast<int>(i));
    }
    return eval(f, support);
}

PositiveDnf dual(const PositiveDnf& f, std::size_t cap) {
    return make_dnf(f.n(), minimal_transversals(Hypergraph(f.n(), f.implicants()), cap));
}

std::vector<VertexSet> maximal_false_points(const PositiveDnf& f, std::size_t cap) {
    if (f.is_constant_one()) throw DomainError("constant 1 has no false points");
    const VertexSet all = VertexSet::range(f.n());
    std::vector<VertexSet> out;
    const PositiveDnf d = dual(f, cap);
    for (VertexSet t : d.implicants()) out.push_back(all - t);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t SeparatingStructure::weight(VertexSet s) const {
    std::int64_t sum = 0;
    for (int v : s) sum += weights[static_cast<std::size_t>(v)];
    return sum;
}

namespace {

bool well_formed(const PositiveDnf& f, const SeparatingStructure& s) {
    if (static_cast<int>(s.weights.size()) != f.n() || s.t < 0) return false;
    return std::all_of(s.weights.begin(), s.weights.end(), [](std::int64_t w) { return w >= 0; });
}

}  // namespace

bool check_separating_structure(const PositiveDnf& f, const SeparatingStructure& s, std::size_t cap) {
    if (!well_formed(f, s)) return false;
    for (VertexSet p : f.implicants()) {
        if (s.weight(p) < s.t + 1) return false;
    }
    if (f.is_constant_one()) return true;
    for (VertexSet x : maximal_false_points(f, cap)) {
        if (s.weight(x) > s.t) return false;
    }
    return true;
}

bool verify_separating_structure(const PositiveDnf& f, const SeparatingStructure& s, int max_n) {
    if (f.n() > max_n) {
        throw CapabilityError("exhaustive separation check capped at " + std::to_string(max_n) + " variables");
    }
    if (!well_formed(f, s)) return false;
    const std::uint64_t points = std::uint64_t{1} << f.n();
    for (std::uint64_t bits = 0; bits < points; ++bits) {
        const VertexSet x(bits);
        if (eval(f, x) != (s.weight(x) > s.t)) return false;
    }
    return true;
}

bool is_valid_witness(const PositiveDnf& f, const SummabilityWitness& w) {
    const std::size_t r = w.false_points.size();
    if (r < 2 || w.true_points.size() != r) return false;
    const VertexSet all = VertexSet::range(f.n());
    std::vector<int> balance(static_cast<std::size_t>(f.n()), 0);
    for (VertexSet x : w.false_points) {
        if (!x.is_subset_of(all) || eval(f, x)) return false;
        for (int v : x) ++balance[static_cast<std::size_t>(v)];
    }
    for (VertexSet y : w.true_points) {
        if (!y.is_subset_of(all) || !eval(f, y)) return false;
        for (int v : y) --balance[static_cast<std::size_t>(v)];
    }
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

namespace {

// One 4-bit counter per variable, so sums of up to 15 points never carry.
std::uint64_t spread(VertexSet x) {
    std::uint64_t out = 0;
    for (int v : x) out |= std::uint64_t{1} << (4 * v);
    return out;
}

double multiset_count(std::size_t items, int r) {
    double c = 1;
    for (int i = 1; i <= r; ++i) c = c * static_cast<double>(items + static_cast<std::size_t>(i) - 1) / i;
    return c;
}

template <typename Visit>
bool for_each_multiset(std::size_t items, int r, std::vector<std::uint32_t>& pick, std::size_t depth,
                       std::uint32_t from, Visit&& visit) {
    if (depth == static_cast<std::size_t>(r)) return visit(pick);
    for (std::uint32_t i = from; i < items; ++i) {
        pick[depth] = i;
        if (for_each_multiset(items, r, pick, depth + 1, i, visit)) return true;
    }
    return false;
}

constexpr double kMultisetBudget = 4e6;

}  // namespace

std::optional<SummabilityWitness> is_k_summable(const PositiveDnf& f, int k, int max_n) {
    if (k < 2 || k > 15) throw InputError("k must lie in [2, 15]");
    if (f.n() > max_n || f.n() > 16) {
        throw CapabilityError("summability search capped at " + std::to_string(std::min(max_n, 16)) + " variables");
    }
    std::vector<VertexSet> false_pts;
    std::vector<VertexSet> true_pts;
    const std::uint64_t points = std::uint64_t{1} << f.n();
    for (std::uint64_t bits = 0; bits < points; ++bits) {
        const VertexSet x(bits);
        (eval(f, x) ? true_pts : false_pts).push_back(x);
    }
    if (false_pts.empty() || true_pts.empty()) return std::nullopt;

    for (int r = 2; r <= k; ++r) {
        if (multiset_count(false_pts.size(), r) + multiset_count(true_pts.size(), r) > kMultisetBudget) {
            throw CapabilityError("summability search for r=" + std::to_string(r) + " exceeds the enumeration budget");
        }
        std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> sums;
        std::vector<std::uint32_t> pick(static_cast<std::size_t>(r));
        for_each_multiset(false_pts.size(), r, pick, 0, 0, [&](const std::vector<std::uint32_t>& p) {
            std::uint64_t key = 0;
            for (auto i : p) key += spread(false_pts[i]);
            sums.try_emplace(key, p);
            return false;
        });
        std::optional<SummabilityWitness> found;
        for_each_multiset(true_pts.size(), r, pick, 0, 0, [&](const std::vector<std::uint32_t>& p) {
            std::uint64_t key = 0;
            for (auto i : p) key += spread(true_pts[i]);
            auto it = sums.find(key);
            if (it == sums.end()) return false;
            SummabilityWitness w;
            for (auto i : it->second) w.false_points.push_back(false_pts[i]);
            for (auto i : p) w.true_points.push_back(true_pts[i]);
            found = std::move(w);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_valid_certificate(const PositiveDnf& f, const InfeasibilityCertificate& c) {
    const VertexSet all = VertexSet::range(f.n());
    std::vector<mpz_class> balance(static_cast<std::size_t>(f.n()), 0);
    mpz_class lambda = 0;
    mpz_class mu = 0;
    for (auto [p, m] : c.true_side) {
        if (m < 0 || !p.is_subset_of(all) || !eval(f, p)) return false;
        lambda += static_cast<long>(m);
        for (int v : p) balance[static_cast<std::size_t>(v)] -= static_cast<long>(m);
    }
    for (auto [x, m] : c.false_side) {
        if (m < 0 || !x.is_subset_of(all) || eval(f, x)) return false;
        mu += static_cast<long>(m);
        for (int v : x) balance[static_cast<std::size_t>(v)] += static_cast<long>(m);
    }
    if (lambda < 1 || mu > lambda) return false;
    return std::all_of(balance.begin(), balance.end(), [](const mpz_class& b) { return b >= 0; });
}

namespace {

std::optional<std::int64_t> to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

std::vector<std::int64_t> scale_to_integers(std::span<const Rational> values) {
    const mpz_class scale = common_denominator(values);
    std::vector<std::int64_t> out;
    out.reserve(values.size());
    for (const auto& q : values) {
        const mpz_class z = q.get_num() * (scale / q.get_den());
        auto v = to_int64(z);
        if (!v) throw CapabilityError("integral structure does not fit in 64 bits");
        out.push_back(*v);
    }
    return out;
}

}  // namespace

ThresholdReport is_threshold(const PositiveDnf& f, const ThresholdOptions& options) {
    ThresholdReport report;
    const int n = f.n();
    if (f.is_constant_zero()) {
        report.verdict = Verdict::Yes;
        report.structure = SeparatingStructure{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), 0};
        report.note = "constant 0";
        return report;
    }
    if (f.is_constant_one()) {
        report.verdict = Verdict::Yes;
        report.constant_one = true;
        report.note = "constant 1: no separating structure with t >= 0; its dual (constant 0) is threshold";
        return report;
    }

    std::vector<VertexSet> false_pts;
    try {
        false_pts = maximal_false_points(f, options.dual_cap);
    } catch (const CapabilityError& e) {
        report.note = e.what();
        return report;
    }

    // Variables w_0..w_{n-1}, t.
    const int vars = n + 1;
    std::vector<LinearConstraint> rows;
    auto make_row = [&](VertexSet s, Relation rel, int rhs) {
        LinearConstraint c{std::vector<Rational>(static_cast<std::size_t>(vars)), rel, rhs};
        for (int v : s) c.coefficients[static_cast<std::size_t>(v)] = 1;
        c.coefficients[static_cast<std::size_t>(n)] = -1;
        return c;
    };
    for (int j = 0; j < vars; ++j) {
        LinearConstraint c{std::vector<Rational>(static_cast<std::size_t>(vars)), Relation::GreaterEqual, 0};
        c.coefficients[static_cast<std::size_t>(j)] = 1;
        rows.push_back(std::move(c));
    }
    const std::size_t first_implicant = rows.size();
    for (VertexSet p : f.implicants()) rows.push_back(make_row(p, Relation::GreaterEqual, 1));
    const std::size_t first_false = rows.size();
    for (VertexSet x : false_pts) rows.push_back(make_row(x, Relation::LessEqual, 0));

    const LpResult lp = lp_feasible(vars, rows, options.certificate);
    if (lp.feasible) {
        std::vector<std::int64_t> scaled;
        try {
            scaled = scale_to_integers(lp.point);
        } catch (const CapabilityError& e) {
            report.note = e.what();
            return report;
        }
        SeparatingStructure s;
        s.t = scaled.back();
        scaled.pop_back();
        s.weights = std::move(scaled);
        if (!check_separating_structure(f, s, options.dual_cap)) {
            throw std::logic_error("LP produced a structure that does not separate the function");
        }
        report.verdict = Verdict::Yes;
        report.structure = std::move(s);
        return report;
    }

    report.verdict = Verdict::No;
    report.note = "separation LP is infeasible";
    if (!lp.farkas.empty()) {
        try {
            const auto y = scale_to_integers(lp.farkas);
            InfeasibilityCertificate cert;
            for (std::size_t i = first_implicant; i < first_false; ++i) {
                if (y[i] > 0) cert.true_side.emplace_back(f.implicants()[i - first_implicant], y[i]);
            }
            for (std::size_t i = first_false; i < rows.size(); ++i) {
                if (y[i] > 0) cert.false_side.emplace_back(false_pts[i - first_false], y[i]);
            }
            if (is_valid_certificate(f, cert)) report.certificate = std::move(cert);
        } catch (const CapabilityError&) {
        }
    }
    if (n <= options.witness_max_n) {
        try {
            report.witness = is_k_summable(f, 2, options.witness_max_n);
        } catch (const CapabilityError&) {
        }
    }
    return report;
}

SeparatingStructure dual_structure(const SeparatingStructure& s) {
    std::int64_t total = 0;
    for (auto w : s.weights) total += w;
    return {s.weights, total - s.t - 1};
}

}  // namespace domishold
