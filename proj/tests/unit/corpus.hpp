#pragma once

#include <complex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sobolab/measures.hpp"
#include "sobolab/moment_matrix.hpp"
#include "sobolab/poly_coeffs.hpp"
#include "sobolab/sobolev.hpp"

namespace sobolab::testing {

inline TrigWeight cos_weight(double c0, int k, double ck)
{
    return TrigWeight::from_coefficients({{0, c0}, {k, ck}});
}

inline Measure unit() { return Measure::unit_circle(); }
inline Measure half() { return Measure::circle(0.0, 0.5); }

struct NamedMeasure {
    std::string name;
    Measure measure;
};

/// Circle-kind measures plus an atomic and a sum, all with closed-form moments.
inline std::vector<NamedMeasure> measure_corpus()
{
    return {
        {"unit", unit()},
        {"half", half()},
        {"shifted_1_plus_i_r2", Measure::circle(cplx(1.0, 1.0), 2.0)},
        {"shifted_half_r2", Measure::circle(0.5, 2.0)},
        {"weighted_unit_cos", Measure::weighted_circle(0.0, 1.0, cos_weight(1.0, 1, 0.4))},
        {"weighted_offset", Measure::weighted_circle(cplx(0.2, -0.1), 0.7, cos_weight(2.0, 2, 0.3))},
        {"atomic", Measure::atomic({{cplx(0.3, 0.0), 1.0}, {cplx(0.0, -0.5), 2.0}, {cplx(0.2, 0.2), 0.5}})},
        {"sum_unit_half", Measure::sum({{1.0, unit()}, {1.0, half()}})},
    };
}

struct NamedPencil {
    std::string name;
    SobolevPencil pencil;
    bool has_half; ///< contains M(m_{0;1/2}), whose sections are badly scaled
};

inline std::vector<NamedPencil> pencil_corpus()
{
    const auto mm = [](const Measure& m) { return MomentMatrix::of_measure(m); };
    return {
        {"m_zero", SobolevPencil(mm(unit()), MomentMatrix::zero()), false},
        {"m_m", SobolevPencil(mm(unit()), mm(unit())), false},
        {"half_zero", SobolevPencil(mm(half()), MomentMatrix::zero()), true},
        {"half_m", SobolevPencil(mm(half()), mm(unit())), true},
        {"m_half", SobolevPencil(mm(unit()), mm(half())), true},
        {"example6", SobolevPencil(mm(unit()), mm(Measure::circle(0.5, 2.0))), false},
        {"weighted_atomic",
         SobolevPencil(mm(Measure::weighted_circle(0.0, 1.0, cos_weight(1.0, 1, 0.4))),
                       mm(Measure::atomic({{cplx(0.3, 0.0), 1.0}, {cplx(0.0, -0.5), 1.0}}))),
         false},
    };
}

inline PolyCoeffs random_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        const double re = u(rng);
        const double im = u(rng);
        x = {re, im};
    }
    return PolyCoeffs(std::move(c));
}

/// Trapezoid mean of |f|^2 over the circle |z - a| = r.
template <class F>
double circle_mean_abs2(cplx a, double r, int points, F&& f)
{
    double s = 0.0;
    for (int k = 0; k < points; ++k) {
        const double t = 2.0 * 3.14159265358979323846 * k / points;
        s += std::norm(f(a + r * cplx(std::cos(t), std::sin(t))));
    }
    return s / points;
}

} // namespace sobolab::testing
