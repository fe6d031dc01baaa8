#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sobolab/measures.hpp"
#include "sobolab/moment_matrix.hpp"
#include "sobolab/poly_coeffs.hpp"
#include "sobolab/sobolev.hpp"

namespace sobolab {

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

/// Outcome of one boundedness criterion over a range of section orders.
///
/// A `fails` verdict always carries a witness polynomial that can be re-checked against the
/// defining inequality independently of the eigen-decomposition that produced it.
struct CriterionReport {
    std::string criterion;
    std::vector<std::string> labels;
    std::vector<int> n_list;
    std::vector<double> values;
    Verdict verdict = Verdict::inconclusive;
    std::optional<PolyCoeffs> witness;
    std::optional<double> constant;

    /// Second sequence and constant for two-sided criteria (comparability lower bound).
    std::vector<double> lower_values;
    std::optional<double> lower_constant;

    /// Decision-rule parameters and auxiliary scalars, in insertion order.
    std::vector<std::pair<std::string, double>> parameters;
    /// Extra named sequences aligned with n_list.
    std::vector<std::pair<std::string, std::vector<double>>> series;
    std::string note;
};

/// Fixed field order: criterion, labels, n_list, values, verdict, witness, constant,
/// lower_values, lower_constant, parameters, series, note. Absent optionals serialize as null.
nlohmann::ordered_json to_json(const CriterionReport& r);

// Decision-rule constants shared by the verdicts.
inline constexpr double kBpeFloor = 1e-8;
inline constexpr double kBpeDecayFactor = 10.0;
inline constexpr double kPsdRelativeTolerance = 1e-11;
inline constexpr double kOffDiagonalTolerance = 1e-12;

/// Finite-section Christoffel quantity 1 / (e_a^* M_n^{-1} e_a), e_a = (1, a, ..., a^{n-1}),
/// by a linear solve.
double gamma_index(const MomentMatrix& m, cplx a, int n);

/// Same quantity as 1 / sum_{k<n} |P_k(a)|^2 with P_k the orthonormal polynomials of M.
double gamma_via_kernel(const MomentMatrix& m, cplx a, int n);

/// Bounded point evaluation test at a from gamma_n, n = 2..n_max.
///
/// fails:  gamma_{n_max} < 1e-8, or gamma dropped at least 10x over the last doubling of n.
/// holds:  relative change over the last doubling <= 1%, or the geometric tail extrapolated from
///         the last two doublings leaves a limit >= 1e-8.
/// otherwise inconclusive. constant = 1 / gamma_{n_max}.
CriterionReport bpe_decide(const MomentMatrix& m, cplx a, int n_max);

/// Polynomial Wirtinger inequality ||p||_M^2 <= C ||p'||_M^2 on {p : p(0) = 0, deg p <= n} as the
/// matrix test C N M_n N - M^{(1,1)}_n >= 0 with N = diag(1..n). The PSD test is made on the
/// diagonally equilibrated matrix (value reported is its smallest eigenvalue, compared against
/// -1e-11). The witness of a failure is the offending eigenvector lifted to coefficients with v_0 = 0.
CriterionReport wirtinger_psd_check(const MomentMatrix& m, double c, int n);

/// Evaluates ||p||_M^2 - C ||p'||_M^2 directly (positive means the inequality is violated).
double wirtinger_excess(const MomentMatrix& m, double c, const PolyCoeffs& p);

/// For a Toeplitz T: the Wirtinger test with C = 1. Rejects non-Toeplitz input.
CriterionReport toeplitz_rigidity(const MomentMatrix& t, int n);

/// M1 <= C M0 on the n-th sections, tested on the diagonally equilibrated C M0 - M1 like the
/// Wirtinger check. Witness has v M1 v^* > C v M0 v^*.
CriterionReport dominance_check(const MomentMatrix& m0, const MomentMatrix& m1, double c, int n);

/// Largest eigenvalue of (section(M1, n), G_n) for n = 2..n_max.
CriterionReport cond4_bound(const SobolevPencil& p, int n_max);

/// Extreme eigenvalues of (G_n(Q), G_n(P)) for n = 1..n_max. values are the upper extremes,
/// lower_values the lower ones.
CriterionReport comparability_bounds(const SobolevPencil& p, const SobolevPencil& q, int n_max);

struct EigenLimits {
    std::vector<int> n_list;
    std::vector<double> smallest; ///< lambda_n
    std::vector<double> largest;  ///< beta_n
    double grid_min = 0.0;
    double grid_max = 0.0;

    double lambda() const { return smallest.back(); }
    double beta() const { return largest.back(); }
};

/// Extreme eigenvalues of the Toeplitz sections of w(theta) dm for n = 1..n_max together with
/// the grid extremes of w.
EigenLimits eigen_limit_estimate(const TrigWeight& w, int n_max);

struct WeightedCircleSpec {
    cplx center;
    double radius = 1.0;
    TrigWeight weight;
};

/// Checks every center is a bpe of M(m0) (InvalidArgument otherwise), then runs the condition-(4)
/// and multiplication-operator sequences for the pencil (M(m0), sum_k M(w_k dm_{a_k;R_k})).
CriterionReport prop12_report(const Measure& m0, const std::vector<WeightedCircleSpec>& circles, int n_max);

} // namespace sobolab
