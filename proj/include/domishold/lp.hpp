#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace domishold {

/// Exact rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

enum class Relation { LessEqual, GreaterEqual };

/// coefficients . x  (<= | >=)  rhs, over free real variables.
struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

struct LpResult {
    bool feasible = false;
    /// A feasible point when `feasible`.
    std::vector<Rational> point;
    /// When infeasible: y >= 0 with sum_i y_i s_i a_i = 0 and sum_i y_i s_i b_i < 0,
    /// where s_i = +1 for <= rows and -1 for >= rows.
    std::vector<Rational> farkas;
};

/// Decides feasibility exactly with a Phase I simplex under
/// Bland's rule. Throws InputError on coefficient vectors of the wrong length.
/// With `want_certificate`, an infeasible answer carries a Farkas vector.
LpResult lp_feasible(int num_vars, std::span<const LinearConstraint> constraints, bool want_certificate = true);

bool satisfies_all(std::span<const LinearConstraint> constraints, std::span<const Rational> point);

bool is_farkas_certificate(int num_vars, std::span<const LinearConstraint> constraints, std::span<const Rational> y);

/// Least common multiple of the denominators.
mpz_class common_denominator(std::span<const Rational> values);

std::string to_string(const Rational& q);

}  // namespace domishold
