#include "domishold/lp.hpp"

#include <cstddef>

#include "domishold/error.hpp"

namespace domishold {

namespace {

using Row = std::vector<Rational>;

int sign_of(Relation r) { return r == Relation::LessEqual ? 1 : -1; }

// Dense Phase I tableau. Columns: [p_0..p_{N-1}, q_0..q_{N-1}, slack_0..slack_{m-1},
// artificials..., rhs], with x = p - q.
class PhaseOne {
public:
    PhaseOne(int num_vars, std::span<const LinearConstraint> rows)
        : n_(num_vars), m_(static_cast<int>(rows.size())) {
        int artificials = 0;
        for (const auto& c : rows) {
            if (sign_of(c.relation) * c.rhs < 0) ++artificials;
        }
        cols_ = 2 * n_ + m_ + artificials;
        tab_.assign(static_cast<std::size_t>(m_ + 1), Row(static_cast<std::size_t>(cols_ + 1)));
        basis_.assign(static_cast<std::size_t>(m_), -1);
        int next_art = 2 * n_ + m_;
        for (int i = 0; i < m_; ++i) {
            const auto& c = rows[static_cast<std::size_t>(i)];
            Row& row = tab_[static_cast<std::size_t>(i)];
            // Normalised to  s*a.x + slack = s*b.
            const int s = sign_of(c.relation);
            Rational b = s * c.rhs;
            const int flip = b < 0 ? -1 : 1;
            for (int j = 0; j < n_; ++j) {
                const Rational a = s * flip * c.coefficients[static_cast<std::size_t>(j)];
                at(i, j) = a;
                at(i, n_ + j) = -a;
            }
            at(i, 2 * n_ + i) = flip;
            at(i, cols_) = flip * b;
            if (flip < 0) {
                at(i, next_art) = 1;
                basis_[static_cast<std::size_t>(i)] = next_art++;
                for (int j = 0; j <= cols_; ++j) obj(j) -= row[static_cast<std::size_t>(j)];
                obj(basis_[static_cast<std::size_t>(i)]) = 0;
            } else {
                basis_[static_cast<std::size_t>(i)] = 2 * n_ + i;
            }
        }
    }

    /// Minimises the artificial sum; returns true iff it reaches zero.
    bool solve() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (obj(j) < 0) { enter = j; break; }
            }
            if (enter < 0) break;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (at(i, enter) <= 0) continue;
                Rational ratio = at(i, cols_) / at(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            // The artificial objective is bounded below by zero.
            if (leave < 0) break;
            pivot(leave, enter);
        }
        return obj(cols_) == 0;
    }

    std::vector<Rational> point() const {
        std::vector<Rational> x(static_cast<std::size_t>(n_));
        for (int i = 0; i < m_; ++i) {
            const int b = basis_[static_cast<std::size_t>(i)];
            if (b < n_) {
                x[static_cast<std::size_t>(b)] += at(i, cols_);
            } else if (b < 2 * n_) {
                x[static_cast<std::size_t>(b - n_)] -= at(i, cols_);
            }
        }
        return x;
    }

private:
    Rational& at(int i, int j) { return tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const Rational& at(int i, int j) const { return tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    Rational& obj(int j) { return at(m_, j); }

    void pivot(int r, int c) {
        Row& prow = tab_[static_cast<std::size_t>(r)];
        const Rational inv = 1 / prow[static_cast<std::size_t>(c)];
        for (auto& v : prow) {
            if (v != 0) v *= inv;
        }
        for (int i = 0; i <= m_; ++i) {
            if (i == r) continue;
            Row& row = tab_[static_cast<std::size_t>(i)];
            const Rational f = row[static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = 0; j <= cols_; ++j) {
                const Rational& pv = prow[static_cast<std::size_t>(j)];
                if (pv != 0) row[static_cast<std::size_t>(j)] -= f * pv;
            }
        }
        basis_[static_cast<std::size_t>(r)] = c;
    }

    int n_;
    int m_;
    int cols_ = 0;
    std::vector<Row> tab_;
    std::vector<int> basis_;
};

void check_shape(int num_vars, std::span<const LinearConstraint> constraints) {
    if (num_vars < 0) throw InputError("negative variable count");
    for (const auto& c : constraints) {
        if (static_cast<int>(c.coefficients.size()) != num_vars) {
            throw InputError("constraint has " + std::to_string(c.coefficients.size()) +
                             " coefficients, expected " + std::to_string(num_vars));
        }
    }
}

// y >= 0, A^T (s.y) = 0, (s.b) . y <= -1 over variables y.
std::vector<LinearConstraint> alternative_system(int num_vars, std::span<const LinearConstraint> constraints) {
    const int m = static_cast<int>(constraints.size());
    std::vector<LinearConstraint> alt;
    for (int i = 0; i < m; ++i) {
        LinearConstraint nonneg{Row(static_cast<std::size_t>(m)), Relation::GreaterEqual, 0};
        nonneg.coefficients[static_cast<std::size_t>(i)] = 1;
        alt.push_back(std::move(nonneg));
    }
    for (int j = 0; j < num_vars; ++j) {
        Row col(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const auto& c = constraints[static_cast<std::size_t>(i)];
            col[static_cast<std::size_t>(i)] = sign_of(c.relation) * c.coefficients[static_cast<std::size_t>(j)];
        }
        alt.push_back({col, Relation::LessEqual, 0});
        alt.push_back({std::move(col), Relation::GreaterEqual, 0});
    }
    Row rhs(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto& c = constraints[static_cast<std::size_t>(i)];
        rhs[static_cast<std::size_t>(i)] = sign_of(c.relation) * c.rhs;
    }
    alt.push_back({std::move(rhs), Relation::LessEqual, -1});
    return alt;
}

}  // namespace

LpResult lp_feasible(int num_vars, std::span<const LinearConstraint> constraints, bool want_certificate) {
    check_shape(num_vars, constraints);
    PhaseOne phase(num_vars, constraints);
    LpResult result;
    if (phase.solve()) {
        result.feasible = true;
        result.point = phase.point();
        return result;
    }
    if (want_certificate) {
        const auto alt = alternative_system(num_vars, constraints);
        PhaseOne dual(static_cast<int>(constraints.size()), alt);
        if (dual.solve()) result.farkas = dual.point();
    }
    return result;
}

bool satisfies_all(std::span<const LinearConstraint> constraints, std::span<const Rational> point) {
    for (const auto& c : constraints) {
        if (c.coefficients.size() != point.size()) return false;
        Rational lhs = 0;
        for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coefficients[j] * point[j];
        if (c.relation == Relation::LessEqual ? lhs > c.rhs : lhs < c.rhs) return false;
    }
    return true;
}

bool is_farkas_certificate(int num_vars, std::span<const LinearConstraint> constraints, std::span<const Rational> y) {
    if (y.size() != constraints.size()) return false;
    std::vector<Rational> combo(static_cast<std::size_t>(num_vars));
    Rational rhs = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0) return false;
        const auto& c = constraints[i];
        if (static_cast<int>(c.coefficients.size()) != num_vars) return false;
        const int s = sign_of(c.relation);
        for (int j = 0; j < num_vars; ++j) combo[static_cast<std::size_t>(j)] += s * y[i] * c.coefficients[static_cast<std::size_t>(j)];
        rhs += s * y[i] * c.rhs;
    }
    for (const auto& v : combo) {
        if (v != 0) return false;
    }
    return rhs < 0;
}

mpz_class common_denominator(std::span<const Rational> values) {
    mpz_class l = 1;
    for (const auto& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace domishold
