// vandermonde.hpp
//
// The coefficient matrices A(a_1..a_n) and A_inf(a_1..a_n) built from an
// evaluation set, the one-dimensional dual vector of their nullspace, and
// the two equivalent rationality criteria (solution scan vs row-space
// comparison with the entrywise q-th power).

#ifndef GRSHERMES_VANDERMONDE_HPP
#define GRSHERMES_VANDERMONDE_HPP

#include <memory>
#include <unordered_set>
#include <vector>

#include "grshermes/linalg.hpp"

namespace grshermes {

/// Ordered distinct evaluation points in GF(q^2), optionally extended by
/// the point at infinity (always the last coordinate of codewords).
struct EvalSet {
    std::shared_ptr<const FieldTower> tower;
    std::vector<Felt> points;  // finite points
    bool with_infinity = false;

    std::size_t length() const { return points.size() + (with_infinity ? 1 : 0); }
};

inline EvalSet make_eval_set(std::shared_ptr<const FieldTower> tower, std::vector<Felt> points,
                             bool with_infinity = false) {
    if (!tower) throw std::invalid_argument("eval set: missing field tower");
    if (points.empty()) throw std::invalid_argument("eval set: needs at least one point");
    std::unordered_set<Felt> seen;
    for (Felt x : points) {
        if (!tower->valid(x)) throw std::invalid_argument("eval set: point out of range");
        if (!seen.insert(x).second) throw std::invalid_argument("eval set: points must be distinct");
    }
    return EvalSet{std::move(tower), std::move(points), with_infinity};
}

/// The m-th roots of unity g^((q^2-1)/m * i), i = 0..m-1, in that order,
/// optionally preceded by 0. Requires m | q^2 - 1.
inline EvalSet roots_of_unity(std::shared_ptr<const FieldTower> tower, std::uint64_t m,
                              bool include_zero = false) {
    const std::uint64_t order = tower->q_squared() - 1;
    if (m == 0 || order % m != 0)
        throw std::invalid_argument("roots_of_unity: m must divide q^2 - 1");
    std::vector<Felt> pts;
    if (include_zero) pts.push_back(0);
    const std::uint64_t step = order / m;
    for (std::uint64_t i = 0; i < m; ++i) pts.push_back(tower->element_from_log(step * i));
    return make_eval_set(std::move(tower), std::move(pts), false);
}

/// (n-1) x n matrix with entry (i, j) = a_j^i for i = 0..n-2.
inline Matrix matrix_A(const EvalSet& e) {
    if (e.with_infinity) throw std::invalid_argument("matrix_A: eval set has the infinity flag");
    const std::size_t n = e.points.size();
    if (n < 2) throw std::invalid_argument("matrix_A: needs at least two points");
    const FieldTower& f = *e.tower;
    Matrix m(n - 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        Felt pw = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            m.at(i, j) = pw;
            pw = f.mul(pw, e.points[j]);
        }
    }
    return m;
}

/// n x (n+1) matrix: rows of powers 0..n-2 with a zero final column, then
/// the row (a_j^(n-1), ..., 1).
inline Matrix matrix_A_inf(const EvalSet& e) {
    if (!e.with_infinity) throw std::invalid_argument("matrix_A_inf: infinity flag not set");
    const std::size_t n = e.points.size();
    if (n < 2) throw std::invalid_argument("matrix_A_inf: needs at least two finite points");
    const FieldTower& f = *e.tower;
    Matrix m(n, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Felt pw = 1;
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, j) = pw;
            pw = f.mul(pw, e.points[j]);
        }
    }
    m.at(n - 1, n) = 1;
    return m;
}

inline Matrix coefficient_matrix(const EvalSet& e) {
    return e.with_infinity ? matrix_A_inf(e) : matrix_A(e);
}

/// Nonzero nullspace solution of the Vandermonde system with an
/// F_q-rationality certificate.
struct DualVector {
    std::vector<Felt> c;  // all coordinates nonzero
    bool rational = false;
};

/// The normalized nullspace generator of A (or A_inf). The solution space
/// always has dimension 1 and all coordinates are nonzero. rational is set
/// when the coordinates lie in GF(q); if only some GF(q^2)-scalar multiple
/// does, the vector is rescaled to that multiple first.
inline DualVector solve_dual(const EvalSet& e) {
    const FieldTower& f = *e.tower;
    const auto basis = nullspace(f, coefficient_matrix(e));
    if (basis.size() != 1)
        throw std::logic_error("solve_dual: solution space dimension != 1");
    std::vector<Felt> c = basis.front();
    for (Felt ci : c)
        if (ci == 0) throw std::logic_error("solve_dual: zero coordinate in dual vector");

    const auto all_rational = [&](const std::vector<Felt>& v) {
        for (Felt x : v)
            if (!f.in_subfield(x)) return false;
        return true;
    };

    bool rational = all_rational(c);
    if (!rational) {
        // Lemma-style rescue: scan lambda over GF(q^2)* for a rational
        // scaling. With the first coordinate normalized to 1 this can only
        // fire if lambda itself is in GF(q), so it is a consistency net
        // rather than a distinct code path.
        for (std::uint64_t l = 0; l < f.q_squared() - 1 && !rational; ++l) {
            const Felt lambda = f.element_from_log(l);
            std::vector<Felt> scaled(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) scaled[i] = f.mul(lambda, c[i]);
            if (all_rational(scaled)) {
                const Felt s = f.inv(scaled.front());  // representative: first coordinate 1
                for (Felt& x : scaled) x = f.mul(x, s);
                c = std::move(scaled);
                rational = true;
            }
        }
    }
    return DualVector{std::move(c), rational};
}

/// Rationality via row spaces: true iff A and its entrywise q-th power
/// A^(q) are row equivalent. Agrees with solve_dual(e).rational on every
/// input.
inline bool rationality_by_rowspace(const EvalSet& e) {
    const FieldTower& f = *e.tower;
    const Matrix a = coefficient_matrix(e);
    Matrix aq = a;
    for (Felt& x : aq.a) x = f.frobenius(x);
    return row_equivalent(f, a, aq);
}

}  // namespace grshermes

#endif  // GRSHERMES_VANDERMONDE_HPP
