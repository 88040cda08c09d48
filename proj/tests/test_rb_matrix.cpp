#include <gtest/gtest.h>

#include <cmath>

#include "rbtensor/rb_matrix.hpp"
#include "support/oracles.hpp"

using rbt::CMatrix;
using rbt::RBMatrix;
using rbt::RBScalar;

namespace {

double penrose_max(const RBMatrix& a, const RBMatrix& x) {
    const RBMatrix ax = a * x;
    const RBMatrix xa = x * a;
    return std::max({oracle::rel_diff(ax * a, a), oracle::rel_diff(xa * x, x),
                     oracle::rel_diff(rbt::conj_transpose(ax), ax), oracle::rel_diff(rbt::conj_transpose(xa), xa)});
}

double unitarity(const RBMatrix& u) {
    const RBMatrix id = RBMatrix::identity(u.rows());
    return std::max(oracle::scalar_norm(u * rbt::conj_transpose(u) - id),
                    oracle::scalar_norm(rbt::conj_transpose(u) * u - id));
}

}  // namespace

TEST(RBMatrix, IdentityProduct) {
    oracle::Rng rng(31);
    const RBMatrix b = oracle::random_rbmatrix(3, 4, rng);
    EXPECT_LE(oracle::rel_diff(RBMatrix::identity(3) * b, b), 1e-15);
}

TEST(RBMatrix, OneByOneMatchesScalarProduct) {
    oracle::Rng rng(32);
    for (int rep = 0; rep < 100; ++rep) {
        const RBScalar a = oracle::random_scalar(rng), b = oracle::random_scalar(rng);
        RBMatrix ma(1, 1), mb(1, 1);
        ma.set(0, 0, a);
        mb.set(0, 0, b);
        const RBScalar got = rbt::mat_mul(ma, mb).at(0, 0);
        const RBScalar want = rbt::rb_mul(a, b);
        for (int c = 0; c < 4; ++c) EXPECT_NEAR(got[c], want[c], 1e-13 * (1 + rbt::rb_modulus(want)));
    }
}

TEST(RBMatrix, ProductMatchesScalarExpansion) {
    oracle::Rng rng(33);
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t p = 1; p <= 4; ++p) {
                const RBMatrix a = oracle::random_rbmatrix(m, n, rng);
                const RBMatrix b = oracle::random_rbmatrix(n, p, rng);
                const RBMatrix want = oracle::scalar_matmul(a, b);
                EXPECT_LE(oracle::scalar_norm(a * b - want) / std::max(1.0, oracle::scalar_norm(want)), 1e-12);
            }
}

TEST(RBMatrix, ConjTransposeOfProduct) {
    oracle::Rng rng(34);
    const RBMatrix a = oracle::random_rbmatrix(4, 3, rng);
    const RBMatrix b = oracle::random_rbmatrix(3, 5, rng);
    EXPECT_LE(oracle::rel_diff(rbt::conj_transpose(a * b), rbt::conj_transpose(b) * rbt::conj_transpose(a)), 1e-13);
}

TEST(RBMatrix, ConjTransposeMatchesComponentRule) {
    oracle::Rng rng(35);
    const RBMatrix a = oracle::random_rbmatrix(3, 2, rng);
    const RBMatrix ah = rbt::conj_transpose(a);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            const RBScalar want = rbt::rb_conj(a.at(r, c));
            const RBScalar got = ah.at(c, r);
            for (int q = 0; q < 4; ++q) EXPECT_NEAR(got[q], want[q], 1e-15);
        }
    EXPECT_EQ(rbt::conj_transpose(RBMatrix::identity(3)), RBMatrix::identity(3));
    for (int rep = 0; rep < 100; ++rep) {
        const RBMatrix x = oracle::random_rbmatrix(3, 4, rng);
        EXPECT_EQ(rbt::conj_transpose(rbt::conj_transpose(x)), x);
    }
    const RBMatrix c = oracle::random_rbmatrix(3, 3, rng);
    const RBMatrix h = c + rbt::conj_transpose(c);
    EXPECT_LE(oracle::scalar_norm(h - rbt::conj_transpose(h)), 1e-15);
}

TEST(RBMatrix, FrobeniusNorm) {
    EXPECT_EQ(rbt::frobenius_norm(RBMatrix(3, 2)), 0.0);
    EXPECT_NEAR(rbt::frobenius_norm(RBMatrix::identity(5)), std::sqrt(5.0), 1e-15);
    oracle::Rng rng(36);
    for (int rep = 0; rep < 100; ++rep) {
        const RBMatrix a = oracle::random_rbmatrix(4, 3, rng);
        const RBMatrix aha = oracle::scalar_matmul(rbt::conj_transpose(a), a);
        double trace = 0.0;
        for (std::size_t i = 0; i < aha.rows(); ++i) trace += aha.at(i, i).q0();
        const double f = rbt::frobenius_norm(a);
        EXPECT_NEAR(f, std::sqrt(trace), 1e-12 * f);
        EXPECT_NEAR(f, oracle::scalar_norm(a), 1e-12 * f);
    }
}

TEST(RBMatrix, ComponentBasisRoundTrip) {
    oracle::Rng rng(37);
    const RBMatrix a = oracle::random_rbmatrix(3, 4, rng);
    CMatrix c[4] = {CMatrix(3, 4), CMatrix(3, 4), CMatrix(3, 4), CMatrix(3, 4)};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 4; ++col)
            for (int q = 0; q < 4; ++q) c[q](r, col) = a.at(r, col)[q];
    EXPECT_LE(oracle::rel_diff(RBMatrix::from_components(c[0], c[1], c[2], c[3]), a), 1e-15);
}

TEST(RBSvd, IdentityAndPairing) {
    const auto s = rbt::rb_svd(RBMatrix::identity(3));
    EXPECT_LE(oracle::rel_diff(s.S, RBMatrix::identity(3)), 1e-14);

    RBMatrix a(1, 1);
    a.set(0, 0, 2.0 * RBScalar::e1() + 3.0 * RBScalar::e2());
    const auto p = rbt::rb_svd(a);
    EXPECT_NEAR(p.sigma1[0], 2.0, 1e-15);
    EXPECT_NEAR(p.sigma2[0], 3.0, 1e-15);
    EXPECT_LE(oracle::rel_diff(p.U * p.S * rbt::conj_transpose(p.V), a), 1e-15);
}

TEST(RBSvd, RandomReconstructionAndUnitarity) {
    oracle::Rng rng(38);
    for (int rep = 0; rep < 100; ++rep) {
        const RBMatrix a = oracle::random_rbmatrix(6, 4, rng);
        const auto s = rbt::rb_svd(a);
        EXPECT_LE(oracle::scalar_norm(s.U * s.S * rbt::conj_transpose(s.V) - a) /
                      std::max(1.0, oracle::scalar_norm(a)),
                  1e-11);
        EXPECT_LE(unitarity(s.U), 1e-11);
        EXPECT_LE(unitarity(s.V), 1e-11);
    }
}

TEST(RBPinv, IdentityAndZeroDivisor) {
    EXPECT_LE(oracle::rel_diff(rbt::rb_pinv(RBMatrix::identity(3)), RBMatrix::identity(3)), 1e-15);
    const RBMatrix e1i = RBMatrix::scaled_identity(2, RBScalar::e1());
    const RBMatrix p = rbt::rb_pinv(e1i);
    EXPECT_LE(oracle::rel_diff(p, e1i), 1e-15);
    EXPECT_LE(penrose_max(e1i, p), 1e-15);
}

TEST(RBPinv, PenroseOnRandom) {
    oracle::Rng rng(39);
    for (int rep = 0; rep < 100; ++rep) {
        const RBMatrix a = oracle::random_rbmatrix(5, 3, rng);
        EXPECT_LE(penrose_max(a, rbt::rb_pinv(a)), 1e-10);
    }
}

TEST(RBPinv, HermitianIdempotentIsItsOwnPinv) {
    oracle::Rng rng(40);
    for (int rep = 0; rep < 20; ++rep) {
        const RBMatrix q = oracle::random_rbmatrix(5, 2, rng);
        const RBMatrix p = q * rbt::rb_pinv(q);  // orthogonal projector
        EXPECT_LE(oracle::rel_diff(rbt::rb_pinv(p, 1e-10), p), 1e-10);
    }
}

TEST(RBRank, Rule) {
    EXPECT_EQ(rbt::rb_rank(RBMatrix(3, 3)), 0u);
    EXPECT_EQ(rbt::rb_rank(RBMatrix::identity(3)), 3u);
    const RBMatrix e1i = RBMatrix::scaled_identity(2, RBScalar::e1());
    EXPECT_EQ(rbt::rb_rank(e1i), 2u);
    EXPECT_LE(oracle::rel_diff(e1i * rbt::rb_pinv(e1i) * e1i, e1i), 1e-15);
}
