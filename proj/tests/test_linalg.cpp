#include "braidsec/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace braidsec::linalg;

namespace {

Matrix<Z> random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int range = 6) {
    std::uniform_int_distribution<int> d(-range, range);
    Matrix<Z> m = zeros<Z>(r, c);
    for (auto& row : m)
        for (auto& v : row) v = d(rng);
    return m;
}

Z det(Matrix<Z> m) {  // Bareiss fraction-free elimination
    const std::size_t n = m.size();
    Z sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors from gcds of k x k minors: s_k = d_k / d_{k-1}.
std::vector<Z> determinant_divisor_factors(const Matrix<Z>& A) {
    const std::size_t r = A.size(), c = A[0].size();
    std::vector<Z> out;
    Z prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(r, k, 0, cur, rs);
        subsets(c, k, 0, cur, cs);
        Z g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                Matrix<Z> minor(k, std::vector<Z>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) minor[a][b] = A[ri[a]][ci[b]];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det(minor).get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace

TEST(Smith, FactorizationIsUnimodularAndDiagonal) {
    std::mt19937 rng(3);
    for (int s = 0; s < 200; ++s) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        Matrix<Z> A = random_matrix(r, c, rng);
        SmithForm f = smith_normal_form(A);
        EXPECT_EQ(multiply(multiply(f.U, A), f.V), f.D);
        EXPECT_EQ(abs(det(f.U)), 1);
        EXPECT_EQ(abs(det(f.V)), 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) {
                    EXPECT_EQ(f.D[i][j], 0);
                }
        for (std::size_t k = 1; k < f.diagonal.size(); ++k) EXPECT_EQ(f.diagonal[k] % f.diagonal[k - 1], 0);
    }
}

TEST(Smith, AgreesWithDeterminantDivisors) {
    std::mt19937 rng(8);
    for (int s = 0; s < 150; ++s) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        Matrix<Z> A = random_matrix(r, c, rng, 4);
        EXPECT_EQ(smith_normal_form(A).diagonal, determinant_divisor_factors(A));
    }
}

TEST(Smith, InvariantUnderRowAndColumnPermutations) {
    std::mt19937 rng(21);
    for (int s = 0; s < 100; ++s) {
        const std::size_t r = 2 + rng() % 3, c = 2 + rng() % 4;
        Matrix<Z> A = random_matrix(r, c, rng);
        std::vector<std::size_t> pr(r), pc(c);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        Matrix<Z> B = zeros<Z>(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) B[i][j] = A[pr[i]][pc[j]];
        EXPECT_EQ(smith_normal_form(A).diagonal, smith_normal_form(B).diagonal);
    }
}

TEST(Smith, CokernelExamples) {
    EXPECT_EQ(cokernel_invariants({{1, 1}}, 2), (std::vector<Z>{0}));
    EXPECT_EQ(cokernel_invariants({{2, 0}, {0, 3}}, 2), (std::vector<Z>{6}));
    EXPECT_EQ(cokernel_invariants({}, 3), (std::vector<Z>{0, 0, 0}));
    EXPECT_EQ(cokernel_invariants({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3), (std::vector<Z>{2}));
}

TEST(Smith, IntegerSolve) {
    auto x = solve_integer({{2, 0}, {0, 4}}, {6, 8});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (std::vector<Z>{3, 2}));
    EXPECT_FALSE(solve_integer({{2, 0}, {0, 4}}, {1, 8}));
    std::mt19937 rng(5);
    for (int s = 0; s < 100; ++s) {
        Matrix<Z> A = random_matrix(3, 4, rng);
        std::vector<Z> x0{Z(static_cast<long>(rng() % 7)) - 3, 1, -2, Z(static_cast<long>(rng() % 5))};
        std::vector<Z> b(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) b[i] += A[i][j] * x0[j];
        auto y = solve_integer(A, b);
        ASSERT_TRUE(y);
        for (int i = 0; i < 3; ++i) {
            Z acc = 0;
            for (int j = 0; j < 4; ++j) acc += A[i][j] * (*y)[j];
            EXPECT_EQ(acc, b[i]);
        }
    }
}

TEST(Rational, SolveAndRank) {
    Matrix<Q> A{{1, 2}, {2, 4}};
    EXPECT_EQ(rank(A), 1u);
    auto sol = solve(A, {Q(3), Q(6)});
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->nullity, 1u);
    EXPECT_FALSE(solve(A, {Q(3), Q(7)}));
    auto c = span_coefficients({{1, 0, 1}, {0, 1, 1}}, {Q(2), Q(3), Q(5)});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (std::vector<Q>{2, 3}));
    EXPECT_FALSE(span_coefficients({{1, 0, 1}}, {Q(1), Q(1), Q(1)}));
}
