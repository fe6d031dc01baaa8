#include "sobolab/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "sobolab/errors.hpp"

namespace sobolab {

namespace {

RealVector positive_diagonal(const Matrix& g)
{
    RealVector d(g.rows());
    for (Eigen::Index k = 0; k < g.rows(); ++k) {
        const double v = g(k, k).real();
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw NotPositiveDefinite(static_cast<int>(k), static_cast<int>(g.rows()));
        }
        d(k) = v;
    }
    return d;
}

Matrix equilibrate(const Matrix& m, const RealVector& inv_sqrt_d)
{
    return inv_sqrt_d.asDiagonal() * m * inv_sqrt_d.asDiagonal();
}

} // namespace

Matrix cholesky(const Matrix& g)
{
    const Eigen::Index n = g.rows();
    if (n != g.cols() || n == 0) {
        throw InvalidArgument("cholesky needs a nonempty square matrix");
    }
    double max_diag = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        max_diag = std::max(max_diag, g(k, k).real());
    }
    const double threshold = kPivotTolerance * max_diag;

    Matrix l = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double pivot = g(j, j).real();
        for (Eigen::Index k = 0; k < j; ++k) {
            pivot -= std::norm(l(j, k));
        }
        if (!(pivot > threshold) || !std::isfinite(pivot)) {
            throw NotPositiveDefinite(static_cast<int>(j), static_cast<int>(n));
        }
        const double ljj = std::sqrt(pivot);
        l(j, j) = ljj;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            cplx s = g(i, j);
            for (Eigen::Index k = 0; k < j; ++k) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / ljj;
        }
    }
    return l;
}

Matrix scaled_cholesky(const Matrix& g)
{
    const RealVector d = positive_diagonal(g);
    const RealVector sqrt_d = d.cwiseSqrt();
    const RealVector inv_sqrt_d = sqrt_d.cwiseInverse();
    const Matrix l_hat = cholesky(equilibrate(g, inv_sqrt_d));
    return sqrt_d.asDiagonal() * l_hat;
}

double equilibrated_condition(const Matrix& g)
{
    const RealVector d = positive_diagonal(g);
    const HermEig eig = herm_eig(equilibrate(g, d.cwiseSqrt().cwiseInverse()), "equilibrated Gram");
    const double lo = eig.values(0);
    const double hi = eig.values(eig.values.size() - 1);
    if (!(lo > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return hi / lo;
}

HermEig herm_eig(const Matrix& m, std::string_view label)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("Hermitian eigensolver did not converge" +
                                 (label.empty() ? std::string() : " on " + std::string(label)));
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

GenEig gen_eig_definite_vectors(const Matrix& q, const Matrix& g)
{
    if (q.rows() != g.rows() || q.cols() != g.cols()) {
        throw InvalidArgument("pencil matrices must have the same shape");
    }
    const RealVector d = positive_diagonal(g);
    const RealVector inv_sqrt_d = d.cwiseSqrt().cwiseInverse();
    const Matrix l_hat = cholesky(equilibrate(g, inv_sqrt_d));
    const Matrix q_hat = equilibrate(q, inv_sqrt_d);

    // C = L^{-1} Q L^{-*} by two triangular solves.
    const auto lower = l_hat.triangularView<Eigen::Lower>();
    Matrix c = lower.solve(q_hat);
    c = lower.solve(c.adjoint().eval()).adjoint();
    c = (0.5 * (c + c.adjoint())).eval();

    HermEig eig = herm_eig(c, "reduced pencil");
    // x = D^{-1/2} L^{-*} y, so x^* G x = y^* y = 1.
    Matrix x = l_hat.adjoint().triangularView<Eigen::Upper>().solve(eig.vectors);
    x = inv_sqrt_d.asDiagonal() * x;
    return {std::move(eig.values), std::move(x)};
}

RealVector gen_eig_definite(const Matrix& q, const Matrix& g)
{
    return gen_eig_definite_vectors(q, g).values;
}

std::vector<cplx> companion_roots(const PolyCoeffs& p)
{
    if (p.is_zero()) {
        throw InvalidArgument("the zero polynomial has no well-defined roots");
    }
    if (p.degree() < 1) {
        throw InvalidArgument("companion_roots needs degree >= 1");
    }
    int zeros = 0;
    while (p[zeros] == cplx{}) {
        ++zeros;
    }
    std::vector<cplx> roots(static_cast<std::size_t>(zeros), cplx{});
    const int d = p.degree() - zeros;
    if (d == 0) {
        return roots;
    }
    const cplx lead = p[p.degree()];
    Matrix companion = Matrix::Zero(d, d);
    for (int k = 1; k < d; ++k) {
        companion(k, k - 1) = 1.0;
    }
    for (int k = 0; k < d; ++k) {
        companion(k, d - 1) = -p[k + zeros] / lead;
    }
    Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("companion eigensolver did not converge");
    }
    for (Eigen::Index k = 0; k < d; ++k) {
        roots.push_back(solver.eigenvalues()(k));
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    return roots;
}

PolyCoeffs row_from_column(const Vector& y)
{
    std::vector<cplx> c(static_cast<std::size_t>(y.size()));
    for (Eigen::Index k = 0; k < y.size(); ++k) {
        c[static_cast<std::size_t>(k)] = std::conj(y(k));
    }
    return PolyCoeffs(std::move(c));
}

} // namespace sobolab
