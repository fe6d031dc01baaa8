#pragma once

#include <complex>

#include <Eigen/Core>

namespace sobolab {

using cplx = std::complex<double>;

/// Dense complex matrix; every matrix handled by the library is Hermitian unless stated otherwise.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest section order supported anywhere in the library.
inline constexpr int kMaxSection = 64;

} // namespace sobolab
