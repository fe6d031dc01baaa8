#pragma once

#include <complex>
#include <random>
#include <vector>

#include "sobolab/poly_coeffs.hpp"

namespace sobolab::cli {

/// Coefficients uniform in the unit square, degree uniform in [min_degree, max_degree], nonzero
/// leading coefficient.
inline PolyCoeffs random_poly(std::mt19937_64& rng, int min_degree, int max_degree)
{
    std::uniform_int_distribution<int> deg(min_degree, max_degree);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int d = deg(rng);
    std::vector<cplx> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) {
        const double re = u(rng);
        const double im = u(rng);
        x = {re, im};
    }
    if (c.back() == cplx(0.0)) {
        c.back() = 1.0;
    }
    return PolyCoeffs(std::move(c));
}

/// Mean of |f|^2 over `points` (trapezoid rule on a circle when the points are equispaced).
template <class F>
double mean_abs2(const std::vector<cplx>& points, F&& f)
{
    double s = 0.0;
    for (const auto& z : points) {
        s += std::norm(f(z));
    }
    return s / static_cast<double>(points.size());
}

inline std::vector<cplx> circle_points(cplx center, double radius, int count)
{
    std::vector<cplx> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double t = 2.0 * 3.14159265358979323846 * k / count;
        pts[static_cast<std::size_t>(k)] = center + radius * cplx(std::cos(t), std::sin(t));
    }
    return pts;
}

} // namespace sobolab::cli
