// grs.hpp
//
// Generalized Reed-Solomon codes GRS_k(a, v) and GRS_k(a, v, inf):
// generator matrices, encoding, Euclidean duals via the solved dual
// vector, entrywise q-th power codes, and row-space inclusion tests.

#ifndef GRSHERMES_GRS_HPP
#define GRSHERMES_GRS_HPP

#include <utility>

#include "grshermes/vandermonde.hpp"

namespace grshermes {

enum class CheckState { unknown, pass, fail };

struct Checks {
    CheckState hermitian_ok = CheckState::unknown;
    CheckState mds_ok = CheckState::unknown;
    CheckState rational_dual_ok = CheckState::unknown;
};

/// Coefficients of a message polynomial f, constant term first; the code
/// maps f to (v_1 f(a_1), ..., v_n f(a_n)) plus, with infinity, the
/// coefficient of x^(k-1) scaled by the last entry of v.
struct Message {
    std::vector<Felt> coeffs;
};

struct GrsCode {
    std::shared_ptr<const FieldTower> tower;
    EvalSet eval;
    std::vector<Felt> v;  // scaling vector, length = code length, all nonzero
    std::size_t k = 0;
    Matrix gen;  // k x n generator matrix
    Checks checks;

    std::size_t length() const { return eval.length(); }
};

namespace detail {

// Shared builder; dimension 0 is allowed here so duals of full codes have
// somewhere to live. The public build_grs enforces 1 <= k.
inline GrsCode grs_from_parts(EvalSet e, std::vector<Felt> v, std::size_t k) {
    const std::size_t n = e.length();
    if (v.size() != n) throw std::invalid_argument("grs: scaling vector length mismatch");
    if (k > n) throw std::invalid_argument("grs: dimension out of range");
    const FieldTower& f = *e.tower;
    for (Felt vi : v) {
        if (!f.valid(vi)) throw std::invalid_argument("grs: scaling entry out of range");
        if (vi == 0) throw std::invalid_argument("grs: scaling entries must be nonzero");
    }
    Matrix gen(k, n);
    const std::size_t finite = e.points.size();
    for (std::size_t j = 0; j < finite; ++j) {
        Felt pw = 1;
        for (std::size_t i = 0; i < k; ++i) {
            gen.at(i, j) = f.mul(v[j], pw);
            pw = f.mul(pw, e.points[j]);
        }
    }
    if (e.with_infinity && k >= 1) gen.at(k - 1, n - 1) = v[n - 1];
    GrsCode code;
    code.tower = e.tower;
    code.eval = std::move(e);
    code.v = std::move(v);
    code.k = k;
    code.gen = std::move(gen);
    return code;
}

}  // namespace detail

inline GrsCode build_grs(EvalSet e, std::vector<Felt> v, std::size_t k) {
    if (k < 1 || k > e.length()) throw std::invalid_argument("grs: dimension out of range");
    return detail::grs_from_parts(std::move(e), std::move(v), k);
}

/// Codeword of msg, by Horner evaluation of the message polynomial. Always
/// equals msg x gen.
inline std::vector<Felt> encode(const GrsCode& code, const Message& msg) {
    if (msg.coeffs.size() != code.k) throw std::invalid_argument("encode: message length != k");
    const FieldTower& f = *code.tower;
    std::vector<Felt> word(code.length(), 0);
    for (std::size_t j = 0; j < code.eval.points.size(); ++j) {
        Felt acc = 0;
        for (std::size_t i = msg.coeffs.size(); i-- > 0;)
            acc = f.add(f.mul(acc, code.eval.points[j]), msg.coeffs[i]);
        word[j] = f.mul(code.v[j], acc);
    }
    if (code.eval.with_infinity)
        word.back() = code.k == 0 ? 0 : f.mul(code.v.back(), msg.coeffs.back());
    return word;
}

/// Euclidean dual GRS_{n-k}(a, u) with u_i = v_i^{-1} c_i, c the solved
/// dual vector of the evaluation set. The generator matrices annihilate
/// each other.
inline GrsCode euclidean_dual(const GrsCode& code) {
    const FieldTower& f = *code.tower;
    const DualVector dual = solve_dual(code.eval);
    std::vector<Felt> u(code.v.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = f.mul(f.inv(code.v[i]), dual.c[i]);
    return detail::grs_from_parts(code.eval, std::move(u), code.length() - code.k);
}

/// Generator of C^q: the entrywise q-th power of the generator matrix.
inline Matrix q_power_code(const GrsCode& code) {
    Matrix m = code.gen;
    for (Felt& x : m.a) x = code.tower->frobenius(x);
    return m;
}

/// True iff every row of a lies in the row space of b.
inline bool code_subset(const FieldTower& f, const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("code_subset: length mismatch");
    const std::size_t rank_b = rank_of(f, b);
    for (std::size_t r = 0; r < a.rows; ++r) {
        Matrix ext(b.rows + 1, b.cols);
        ext.a.assign(b.a.begin(), b.a.end());
        ext.a.insert(ext.a.end(), a.a.begin() + r * a.cols, a.a.begin() + (r + 1) * a.cols);
        if (rank_of(f, std::move(ext)) != rank_b) return false;
    }
    return true;
}

}  // namespace grshermes

#endif  // GRSHERMES_GRS_HPP
