#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sobolab/types.hpp"

namespace sobolab {

/// Real trigonometric polynomial w(theta) = sum_k what(k) e^{i k theta}, stored by its
/// Fourier coefficients. Hermitian symmetry what(-k) = conj(what(k)) is enforced.
class TrigWeight {
public:
    /// Number of grid points used for the nonnegativity check and grid extremes.
    static constexpr int kGridPoints = 4096;
    static constexpr double kGridTolerance = 1e-12;

    TrigWeight() = default;

    /// Builds from (k, what(k)) pairs. Pairs for negative k must agree with the conjugate of
    /// the matching positive k if both are given; a missing side is filled in by symmetry.
    /// Throws InvalidArgument if the weight is not real or dips below zero on the grid.
    static TrigWeight from_coefficients(const std::vector<std::pair<int, cplx>>& coeffs);

    /// The constant weight c.
    static TrigWeight constant(double c);

    cplx coeff(int k) const;
    int degree() const noexcept;
    double value(double theta) const;
    double grid_min() const;
    double grid_max() const;

    /// Coefficients for k >= 0 only (negative ones follow by symmetry).
    const std::map<int, cplx>& nonnegative_coeffs() const noexcept { return coeffs_; }

private:
    std::map<int, cplx> coeffs_;
};

struct CircleLebesgue {
    cplx center;
    double radius = 1.0;
};

struct WeightedCircle {
    cplx center;
    double radius = 1.0;
    TrigWeight weight;
};

struct Atom {
    cplx point;
    double mass = 1.0;
};

struct Atomic {
    std::vector<Atom> atoms;
};

using MeasureComponent = std::variant<CircleLebesgue, WeightedCircle, Atomic>;

/// Compactly supported measure with closed-form moments. A Sum is held flattened as a list of
/// (scale, component); any other measure is a single component with scale one.
class Measure {
public:
    static Measure circle(cplx center, double radius);
    static Measure unit_circle() { return circle(0.0, 1.0); }
    static Measure weighted_circle(cplx center, double radius, TrigWeight weight);
    static Measure atomic(std::vector<Atom> atoms);
    static Measure sum(const std::vector<std::pair<double, Measure>>& terms);

    bool is_sum() const noexcept { return is_sum_; }
    const std::vector<std::pair<double, MeasureComponent>>& terms() const noexcept { return terms_; }

    /// True when some component is supported on a circle (infinite support).
    bool infinite_support() const;

private:
    Measure() = default;

    std::vector<std::pair<double, MeasureComponent>> terms_;
    bool is_sum_ = false;
};

/// Closed-form moment c_ij = integral of z^i conj(z)^j. Hermitian symmetry is exact.
cplx moment(const Measure& m, int i, int j);

/// Trapezoid-rule evaluation of the same integral over the circle parameter
/// (exact summation for atoms). Independent oracle for moment().
cplx moment_quadrature(const Measure& m, int i, int j, int grid_points);

/// Push-forward of m under z -> z - shift. Its moments are the moments of m in the
/// shifted monomial basis (z - shift)^k.
Measure translated(const Measure& m, cplx shift);

/// max |center| + radius over circle components and max |point| over atoms.
double support_hull_radius(const Measure& m);

/// JSON schema:
///   {"kind":"circle","center":[re,im],"radius":r}
///   {"kind":"weighted_circle","center":[re,im],"radius":r,"fourier":[[k,re,im],...]}
///   {"kind":"atomic","atoms":[[re,im,mass],...]}
///   {"kind":"sum","terms":[[scale,<measure>],...]}
/// Unknown keys are rejected with InvalidArgument.
Measure measure_from_json(const nlohmann::json& j);
nlohmann::ordered_json measure_to_json(const Measure& m);

/// Compact single-line label built from the JSON form.
std::string measure_label(const Measure& m);

TrigWeight trig_weight_from_json(const nlohmann::json& fourier);

} // namespace sobolab
