#pragma once

#include <string>

#include "domishold/domishold.hpp"

namespace domishold {

enum class SolveMethod { Greedy, Brute, Approx };

std::string to_string(SolveMethod m);

struct SolveResult {
    VertexSet set;
    int size = 0;
    SolveMethod method = SolveMethod::Greedy;
};

/// Minimum TD set of a TD graph: vertices by non-increasing weight (ties by
/// index), shortest prefix reaching t. Throws DomainError on an isolated
/// vertex and PreconditionError if s does not verify.
SolveResult greedy_min_tds(const Graph& g, const TdStructure& s);

/// Smallest TD set by enumeration in increasing size; the lexicographically
/// first one of that size. Throws DomainError on an isolated vertex.
SolveResult gamma_t_bruteforce(const Graph& g, int max_n = 16);

/// Smallest dominating set, same enumeration order.
SolveResult gamma_bruteforce(const Graph& g, int max_n = 16);

/// Greedy TD solution on G minus its isolated vertices, plus those vertices.
/// Edgeless graphs return V. Throws PreconditionError if G, or G without its
/// isolated vertices, is not TD.
SolveResult approx_dominating_set(const Graph& g, const ThresholdOptions& options = {});

}  // namespace domishold
