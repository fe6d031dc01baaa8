#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <Eigen/SVD>

#include "corpus.hpp"
#include "sobolab/errors.hpp"
#include "sobolab/numkernel.hpp"

namespace sobolab {
namespace {

Matrix random_hpd(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = g(rng);
            const double im = g(rng);
            a(i, j) = {re, im};
        }
    }
    return a * a.adjoint() + Matrix::Identity(n, n);
}

Matrix random_hermitian(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = g(rng);
            const double im = g(rng);
            a(i, j) = {re, im};
        }
    }
    return (a + a.adjoint()) / 2.0;
}

TEST(Cholesky, Examples)
{
    EXPECT_EQ((cholesky(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)).norm(), 0.0);
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 4.0;
    const Matrix ld = cholesky(d);
    EXPECT_EQ(ld(1, 1), cplx(2.0));
    Matrix g(2, 2);
    g << 2.0, 1.0, 1.0, 2.0;
    const Matrix l = cholesky(g);
    EXPECT_NEAR(l(0, 0).real(), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(l(1, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(l(1, 1).real(), std::sqrt(1.5), 1e-15);
    EXPECT_EQ(l(0, 1), cplx(0.0));
}

TEST(Cholesky, ReconstructionResidual)
{
    std::mt19937_64 rng(5);
    for (int n : {1, 5, 20, 64}) {
        const Matrix g = random_hpd(rng, n);
        const Matrix l = cholesky(g);
        EXPECT_LE((l * l.adjoint() - g).norm(), 1e-11 * g.norm());
        const Matrix ls = scaled_cholesky(g);
        EXPECT_LE((ls * ls.adjoint() - g).norm(), 1e-11 * g.norm());
    }
}

TEST(Cholesky, ReportsFailingPivot)
{
    Matrix g(3, 3);
    g << 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0;
    try {
        cholesky(g);
        FAIL() << "expected NotPositiveDefinite";
    } catch (const NotPositiveDefinite& e) {
        EXPECT_EQ(e.pivot(), 1);
        EXPECT_EQ(e.size(), 3);
    }
    Matrix neg = Matrix::Identity(2, 2);
    neg(1, 1) = -1.0;
    EXPECT_THROW(cholesky(neg), NotPositiveDefinite);
    EXPECT_THROW(scaled_cholesky(neg), NotPositiveDefinite);
}

TEST(Cholesky, EigenvaluesAreSquaredSingularValues)
{
    std::mt19937_64 rng(6);
    const Matrix g = random_hpd(rng, 16);
    const Matrix l = cholesky(g);
    Eigen::JacobiSVD<Matrix> svd(l);
    RealVector sv = svd.singularValues().array().square();
    std::sort(sv.data(), sv.data() + sv.size());
    const auto eig = herm_eig(g);
    for (int k = 0; k < 16; ++k) {
        EXPECT_NEAR(sv(k), eig.values(k), 1e-9 * eig.values(k));
    }
}

TEST(HermEig, Examples)
{
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto e = herm_eig(d);
    EXPECT_DOUBLE_EQ(e.values(0), 1.0);
    EXPECT_DOUBLE_EQ(e.values(1), 2.0);
    EXPECT_DOUBLE_EQ(e.values(2), 3.0);
    Matrix s(2, 2);
    s << 0.0, 1.0, 1.0, 0.0;
    const auto es = herm_eig(s);
    EXPECT_NEAR(es.values(0), -1.0, 1e-15);
    EXPECT_NEAR(es.values(1), 1.0, 1e-15);
    const auto eh = herm_eig(MomentMatrix::of_measure(testing::half()).section(4));
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(eh.values(k), std::pow(4.0, -(3 - k)), 1e-16);
    }
}

TEST(HermEig, ReconstructionResidual)
{
    std::mt19937_64 rng(7);
    for (int n : {2, 17, 64}) {
        const Matrix m = random_hermitian(rng, n);
        const auto e = herm_eig(m);
        const Matrix r = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LE((r - m).norm(), 1e-10 * m.norm());
        for (int k = 1; k < n; ++k) {
            EXPECT_LE(e.values(k - 1), e.values(k));
        }
    }
}

TEST(GenEig, Examples)
{
    std::mt19937_64 rng(8);
    const Matrix g = random_hpd(rng, 6);
    const auto ones = gen_eig_definite(g, g);
    for (int k = 0; k < 6; ++k) {
        EXPECT_NEAR(ones(k), 1.0, 1e-12);
    }
    Matrix q = Matrix::Zero(2, 2);
    q(0, 0) = 2.0;
    q(1, 1) = 8.0;
    const auto v = gen_eig_definite(q, Matrix::Identity(2, 2));
    EXPECT_NEAR(v(0), 2.0, 1e-15);
    EXPECT_NEAR(v(1), 8.0, 1e-15);
    Matrix gd = Matrix::Identity(2, 2);
    gd(1, 1) = 4.0;
    const auto w = gen_eig_definite(Matrix::Identity(2, 2), gd);
    EXPECT_NEAR(w(0), 0.25, 1e-15);
    EXPECT_NEAR(w(1), 1.0, 1e-15);
}

TEST(GenEig, PropagatesSingularG)
{
    Matrix g = Matrix::Zero(2, 2);
    g(0, 0) = 1.0;
    EXPECT_THROW(gen_eig_definite(Matrix::Identity(2, 2), g), NotPositiveDefinite);
}

TEST(GenEig, RayleighSandwich)
{
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss;
    const Matrix g = random_hpd(rng, 12);
    const Matrix q = random_hermitian(rng, 12);
    const auto ge = gen_eig_definite_vectors(q, g);
    const double lo = ge.values(0);
    const double hi = ge.values(11);
    for (int s = 0; s < 100; ++s) {
        Vector v(12);
        for (int k = 0; k < 12; ++k) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v(k) = {re, im};
        }
        const double ratio = (v.adjoint() * q * v)(0).real() / (v.adjoint() * g * v)(0).real();
        EXPECT_GE(ratio, lo - 1e-10);
        EXPECT_LE(ratio, hi + 1e-10);
    }
    for (int k = 0; k < 12; ++k) {
        const Vector x = ge.vectors.col(k);
        EXPECT_LE((q * x - ge.values(k) * (g * x)).norm(), 1e-9 * (1.0 + std::abs(ge.values(k))));
        EXPECT_NEAR((x.adjoint() * g * x)(0).real(), 1.0, 1e-10);
    }
}

TEST(GenEig, BadlyScaledDiagonalPencil)
{
    // Pencil of M(m_{0;1/2}) against itself shifted: exact eigenvalues 1/4.
    const auto m = MomentMatrix::of_measure(testing::half());
    const Matrix g = m.section(40);
    const Matrix q = m.section(41).bottomRightCorner(40, 40);
    const auto v = gen_eig_definite(q, g);
    EXPECT_NEAR(v(0), 0.25, 1e-12);
    EXPECT_NEAR(v(39), 0.25, 1e-12);
}

TEST(CompanionRoots, Examples)
{
    auto r = companion_roots(PolyCoeffs{-1.0, 0.0, 1.0});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(std::abs(r[0] + 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(r[1] - 1.0), 0.0, 1e-14);

    r = companion_roots(PolyCoeffs::monomial(3));
    ASSERT_EQ(r.size(), 3u);
    for (const auto& z : r) {
        EXPECT_EQ(z, cplx(0.0));
    }

    const cplx i(0.0, 1.0);
    r = companion_roots(PolyCoeffs{i, -(1.0 + i), 1.0});
    ASSERT_EQ(r.size(), 2u);
    const bool order1 = std::abs(r[0] - i) < 1e-12 && std::abs(r[1] - 1.0) < 1e-12;
    const bool order2 = std::abs(r[0] - 1.0) < 1e-12 && std::abs(r[1] - i) < 1e-12;
    EXPECT_TRUE(order1 || order2);
}

TEST(CompanionRoots, RejectsConstants)
{
    EXPECT_THROW(companion_roots(PolyCoeffs()), InvalidArgument);
    EXPECT_THROW(companion_roots(PolyCoeffs{3.0}), InvalidArgument);
}

TEST(CompanionRoots, ResidualBound)
{
    std::mt19937_64 rng(10);
    for (int s = 0; s < 200; ++s) {
        auto p = testing::random_poly(rng, 32);
        if (p.degree() < 1) {
            continue;
        }
        const auto roots = companion_roots(p);
        ASSERT_EQ(static_cast<int>(roots.size()), p.degree());
        for (const auto& z : roots) {
            const double bound = 1e-8 * p.max_abs_coeff() * std::pow(1.0 + std::abs(z), p.degree());
            EXPECT_LE(std::abs(p.evaluate(z)), bound);
        }
    }
}

TEST(RowFromColumn, ConjugatesEntries)
{
    Vector y(2);
    y << cplx(1.0, 2.0), cplx(0.0, -1.0);
    EXPECT_EQ(row_from_column(y), (PolyCoeffs{cplx(1.0, -2.0), cplx(0.0, 1.0)}));
}

} // namespace
} // namespace sobolab
