#pragma once

#include <string_view>
#include <vector>

#include "sobolab/poly_coeffs.hpp"
#include "sobolab/types.hpp"

namespace sobolab {

/// Pivot threshold: a pivot <= kPivotTolerance * max diagonal means numerically singular.
inline constexpr double kPivotTolerance = 1e-14;

/// Lower-triangular L with L L^* = G. Throws NotPositiveDefinite(k) when the k-th pivot
/// falls below kPivotTolerance times the largest diagonal entry.
Matrix cholesky(const Matrix& g);

/// Cholesky factor computed on the unit-diagonal equilibration D^{-1/2} G D^{-1/2} and scaled
/// back, so the pivot test is relative to each row's own scale. Same contract as cholesky().
Matrix scaled_cholesky(const Matrix& g);

/// Spectral condition number of the unit-diagonal equilibration of an HPD matrix.
double equilibrated_condition(const Matrix& g);

struct HermEig {
    RealVector values; ///< ascending
    Matrix vectors;    ///< unitary, column k belongs to values(k)
};

/// Eigendecomposition of a Hermitian matrix. Throws ConvergenceFailure naming `label`.
HermEig herm_eig(const Matrix& m, std::string_view label = {});

/// Eigenvalues (ascending) of the definite pencil Q - lambda G, G HPD, by Cholesky reduction.
RealVector gen_eig_definite(const Matrix& q, const Matrix& g);

struct GenEig {
    RealVector values; ///< ascending
    Matrix vectors;    ///< column k solves Q x = values(k) G x, normalized to x^* G x = 1
};

GenEig gen_eig_definite_vectors(const Matrix& q, const Matrix& g);

/// All roots of p (degree >= 1) with multiplicity, as eigenvalues of the companion matrix.
/// Exact zero roots (vanishing low-order coefficients) are split off before the eigensolve.
std::vector<cplx> companion_roots(const PolyCoeffs& p);

/// Converts a column eigenvector y (quadratic form y^* Q y) into the coefficient row v = conj(y)
/// used by the polynomial convention v Q v^*.
PolyCoeffs row_from_column(const Vector& y);

} // namespace sobolab
