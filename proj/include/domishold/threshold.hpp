#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domishold/hypergraph.hpp"
#include "domishold/vertex_set.hpp"

namespace domishold {

/// Three-valued answer: Unknown means a capability guard fired.
enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

/// Positive Boolean function given by its prime implicants.
///
/// Constant 0 has no implicants; constant 1 has the single empty implicant.
class PositiveDnf {
public:
    PositiveDnf() = default;

    int n() const { return n_; }
    const std::vector<VertexSet>& implicants() const { return implicants_; }
    bool is_constant_zero() const { return implicants_.empty(); }
    bool is_constant_one() const { return implicants_.size() == 1 && implicants_.front().empty(); }

    friend bool operator==(const PositiveDnf&, const PositiveDnf&) = default;

private:
    friend PositiveDnf make_dnf(int n, std::vector<VertexSet> terms);
    int n_ = 0;
    std::vector<VertexSet> implicants_;
};

/// Minimises `terms` to the antichain of minimal terms (the complete DNF).
/// Throws InputError on indices outside [0, n).
PositiveDnf make_dnf(int n, std::vector<VertexSet> terms);

/// f_H for a hypergraph: one term per edge.
PositiveDnf dnf_of(const Hypergraph& h);

/// 1 iff the support contains some implicant.
bool eval(const PositiveDnf& f, VertexSet support);
/// Bit-vector form; throws InputError unless bits.size() == n and every entry is 0 or 1.
bool eval(const PositiveDnf& f, std::span<const int> bits);

/// f^d(x) = not f(not x); its implicants are the minimal transversals of f's.
PositiveDnf dual(const PositiveDnf& f, std::size_t cap = kDefaultDualizationCap);

/// Inclusion-maximal supports on which f is 0, sorted. Throws DomainError for constant 1.
std::vector<VertexSet> maximal_false_points(const PositiveDnf& f, std::size_t cap = kDefaultDualizationCap);

/// Integral (w, t): f(x) = 0 iff w.x <= t, with w.x >= t+1 on every true point.
struct SeparatingStructure {
    std::vector<std::int64_t> weights;
    std::int64_t t = 0;

    std::int64_t weight(VertexSet s) const;
    friend bool operator==(const SeparatingStructure&, const SeparatingStructure&) = default;
};

/// Exact check through the prime implicants and the maximal false points.
bool check_separating_structure(const PositiveDnf& f, const SeparatingStructure& s,
                                std::size_t cap = kDefaultDualizationCap);

/// Exhaustive oracle over all 2^n points; throws CapabilityError for n > max_n.
bool verify_separating_structure(const PositiveDnf& f, const SeparatingStructure& s, int max_n = 16);

/// r false points and r true points with equal componentwise sums.
struct SummabilityWitness {
    std::vector<VertexSet> false_points;
    std::vector<VertexSet> true_points;
};

bool is_valid_witness(const PositiveDnf& f, const SummabilityWitness& w);

/// Searches r = 2..k for a summability witness, exhaustively over multisets of
/// points. Throws CapabilityError for n > max_n and InputError for k < 2 or k > 15.
std::optional<SummabilityWitness> is_k_summable(const PositiveDnf& f, int k, int max_n = 10);

/// Weighted form of the summability obstruction read off an LP Farkas vector:
/// sum_F mu_F x^F >= sum_P lambda_P x^P componentwise with sum mu <= sum lambda,
/// sum lambda >= 1, every P a true point and every F a false point.
struct InfeasibilityCertificate {
    std::vector<std::pair<VertexSet, std::int64_t>> true_side;
    std::vector<std::pair<VertexSet, std::int64_t>> false_side;
};

bool is_valid_certificate(const PositiveDnf& f, const InfeasibilityCertificate& c);

struct ThresholdOptions {
    std::size_t dual_cap = kDefaultDualizationCap;
    /// Largest n for which a 2-summability witness is searched on a negative answer.
    int witness_max_n = 10;
    /// Derive an InfeasibilityCertificate from the LP on a negative answer.
    bool certificate = true;
};

struct ThresholdReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<SeparatingStructure> structure;
    /// Constant 1 is reported as threshold (its dual, constant 0, is) but has no
    /// structure with t >= 0.
    bool constant_one = false;
    std::optional<SummabilityWitness> witness;
    std::optional<InfeasibilityCertificate> certificate;
    std::string note;
};

/// Threshold recognition from the complete DNF: dualise to get the maximal false
/// points, then solve the separation LP exactly and scale to integers.
ThresholdReport is_threshold(const PositiveDnf& f, const ThresholdOptions& options = {});

/// (w, sum w - t - 1) separates f^d whenever (w, t) separates f.
SeparatingStructure dual_structure(const SeparatingStructure& s);

}  // namespace domishold
