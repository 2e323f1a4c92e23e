// Exact linear algebra: Gaussian elimination over Q and Smith normal form
// over Z with recorded unimodular transforms.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidsec::linalg {

using Q = mpq_class;
using Z = mpz_class;
template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zeros(std::size_t rows, std::size_t cols) {
    return Matrix<T>(rows, std::vector<T>(cols, T(0)));
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    if (m.empty()) return {};
    Matrix<T> t = zeros<T>(m[0].size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& x, const Matrix<T>& y) {
    const std::size_t r = x.size(), inner = y.size(), c = y.empty() ? 0 : y[0].size();
    Matrix<T> out = zeros<T>(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (x[i][k] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

struct Elimination {
    Matrix<Q> reduced;               // reduced row echelon form of [A | b]
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; rows are modified in place.
inline Elimination row_reduce(Matrix<Q> m) {
    Elimination e;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Q inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

inline std::size_t rank(const Matrix<Q>& m) { return row_reduce(m).pivots.size(); }

struct LinearSolution {
    std::vector<Q> particular;  // one solution, free variables set to zero
    std::size_t nullity = 0;    // dimension of the solution space
};

// Solves A x = b exactly; nullopt when inconsistent.
inline std::optional<LinearSolution> solve(const Matrix<Q>& A, const std::vector<Q>& b) {
    if (A.size() != b.size()) throw std::invalid_argument("dimension mismatch in solve");
    const std::size_t cols = A.empty() ? 0 : A[0].size();
    Matrix<Q> aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    if (A.empty()) return LinearSolution{{}, 0};
    Elimination e = row_reduce(std::move(aug));
    for (std::size_t c : e.pivots)
        if (c == cols) return std::nullopt;
    LinearSolution s;
    s.particular.assign(cols, Q(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.reduced[r][cols];
    s.nullity = cols - e.pivots.size();
    return s;
}

// Coefficients expressing target in the span of the given vectors, if any.
inline std::optional<std::vector<Q>> span_coefficients(const std::vector<std::vector<Q>>& gens,
                                                       const std::vector<Q>& target) {
    if (gens.empty()) {
        bool zero = std::all_of(target.begin(), target.end(), [](const Q& v) { return v == 0; });
        return zero ? std::optional<std::vector<Q>>(std::vector<Q>{}) : std::nullopt;
    }
    auto sol = solve(transpose(gens), target);
    if (!sol) return std::nullopt;
    return sol->particular;
}

// D = U * A * V with U, V unimodular and D diagonal with d1 | d2 | ... .
struct SmithForm {
    Matrix<Z> D, U, V;
    std::vector<Z> diagonal;  // nonzero diagonal entries, positive
};

inline Matrix<Z> identity(std::size_t n) {
    Matrix<Z> m = zeros<Z>(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline SmithForm smith_normal_form(const Matrix<Z>& A) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    SmithForm s{A, identity(rows), identity(cols), {}};
    Matrix<Z>& D = s.D;
    auto row_op = [&](std::size_t dst, std::size_t src, const Z& f) {  // row dst -= f * row src
        for (std::size_t j = 0; j < cols; ++j) D[dst][j] -= f * D[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.U[dst][j] -= f * s.U[src][j];
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Z& f) {  // col dst -= f * col src
        for (std::size_t i = 0; i < rows; ++i) D[i][dst] -= f * D[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.V[i][dst] -= f * s.V[i][src];
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        std::swap(D[x], D[y]);
        std::swap(s.U[x], s.U[y]);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& r : D) std::swap(r[x], r[y]);
        for (auto& r : s.V) std::swap(r[x], r[y]);
    };
    auto negate_row = [&](std::size_t x) {
        for (auto& v : D[x]) v = -v;
        for (auto& v : s.U[x]) v = -v;
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry in the remaining block becomes the pivot
        bool found = false;
        for (;;) {
            std::size_t pr = 0, pc = 0;
            found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D[i][j] != 0 && (!found || abs(D[i][j]) < abs(D[pr][pc]))) {
                        pr = i;
                        pc = j;
                        found = true;
                    }
            if (!found) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
                if (q != 0) row_op(i, t, q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
                if (q != 0) col_op(j, t, q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any entry not divisible by the pivot into row t
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        row_op(t, i, Z(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!found) break;
        if (D[t][t] < 0) negate_row(t);
        s.diagonal.push_back(D[t][t]);
    }
    return s;
}

// Cokernel of the row space of A (rows are relations among cols generators):
// invariant factors > 1 followed by one 0 per free summand.
inline std::vector<Z> cokernel_invariants(const Matrix<Z>& relations, std::size_t generators) {
    std::vector<Z> out;
    std::size_t r = 0;
    if (!relations.empty()) {
        SmithForm s = smith_normal_form(relations);
        r = s.diagonal.size();
        for (const auto& d : s.diagonal)
            if (d != 1) out.push_back(d);
    }
    for (std::size_t k = r; k < generators; ++k) out.push_back(0);
    return out;
}

// Integer solution of A x = b, if one exists.
inline std::optional<std::vector<Z>> solve_integer(const Matrix<Z>& A, const std::vector<Z>& b) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    SmithForm s = smith_normal_form(A);
    // D y = U b, x = V y
    std::vector<Z> ub(rows, Z(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ub[i] += s.U[i][j] * b[j];
    std::vector<Z> y(cols, Z(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < s.diagonal.size()) {
            if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.diagonal[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Z> x(cols, Z(0));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += s.V[i][j] * y[j];
    return x;
}

}  // namespace braidsec::linalg
