// linalg.hpp
//
// Dense exact linear algebra over GF(q^2): reduced row echelon form, rank,
// nullspace bases, row-space comparison, and column-subset rank queries.
// Everything is deterministic; RREF is the unique canonical form, so two
// matrices are row equivalent iff their RREFs are identical.

#ifndef GRSHERMES_LINALG_HPP
#define GRSHERMES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "grshermes/field.hpp"

namespace grshermes {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Felt> a;  // row-major, rows*cols entries

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Felt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Felt at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const Matrix& o) const = default;
};

struct RrefResult {
    Matrix r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

inline RrefResult rref(const FieldTower& f, Matrix m) {
    RrefResult out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
        std::size_t piv = lead;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < m.cols; ++c)
                std::swap(m.at(piv, c), m.at(lead, c));
        const Felt s = f.inv(m.at(lead, col));
        if (s != 1)
            for (std::size_t c = 0; c < m.cols; ++c)
                m.at(lead, c) = f.mul(m.at(lead, c), s);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == lead) continue;
            const Felt factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(lead, c)));
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    out.r = std::move(m);
    return out;
}

inline std::size_t rank_of(const FieldTower& f, Matrix m) { return rref(f, std::move(m)).rank; }

/// Basis of {x : A x^T = 0}, one vector per free column in increasing
/// column order, each normalized so its first nonzero coordinate is 1.
inline std::vector<std::vector<Felt>> nullspace(const FieldTower& f, const Matrix& m) {
    const RrefResult rr = rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Felt>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Felt> x(m.cols, 0);
        x[free_col] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            x[rr.pivot_cols[i]] = f.neg(rr.r.at(i, free_col));
        for (Felt& xi : x) {
            if (xi == 0) continue;
            if (xi != 1) {
                const Felt s = f.inv(xi);
                for (Felt& xj : x) xj = f.mul(xj, s);
            }
            break;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

inline bool row_equivalent(const FieldTower& f, const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("row_equivalent: dimension mismatch");
    return rref(f, a).r == rref(f, b).r;
}

inline bool columns_full_rank(const FieldTower& f, const Matrix& m,
                              const std::vector<std::size_t>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= m.cols) throw std::invalid_argument("columns_full_rank: index out of range");
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            if (cols[i] == cols[j])
                throw std::invalid_argument("columns_full_rank: repeated column index");
    }
    Matrix sub(m.rows, cols.size());
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.at(r, j) = m.at(r, cols[j]);
    return rank_of(f, std::move(sub)) == cols.size();
}

}  // namespace grshermes

#endif  // GRSHERMES_LINALG_HPP
