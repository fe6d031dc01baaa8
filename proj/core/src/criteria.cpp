#include "sobolab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "sobolab/errors.hpp"
#include "sobolab/numkernel.hpp"
#include "sobolab/report.hpp"

namespace sobolab {

namespace {

Vector evaluation_vector(cplx a, int n)
{
    Vector e(n);
    cplx power = 1.0;
    for (int k = 0; k < n; ++k) {
        e(k) = power;
        power *= a;
    }
    return e;
}

struct ScaledMinEig {
    double lambda_min = 0.0;
    double raw_lambda_min = 0.0;
    Vector direction; ///< x with x^* W x = lambda_min * |D^{1/2} x|^2
};

/// Smallest eigenvalue of D^{-1/2} W D^{-1/2}, D = diag(scale). Diagonal congruence keeps the
/// inertia of W and removes the spread of scales across the monomial basis.
ScaledMinEig scaled_min_eig(const Matrix& w, const RealVector& scale, std::string_view label)
{
    RealVector s(scale.size());
    for (Eigen::Index k = 0; k < scale.size(); ++k) {
        s(k) = scale(k) > 0.0 ? 1.0 / std::sqrt(scale(k)) : 1.0;
    }
    const Matrix scaled = s.asDiagonal() * w * s.asDiagonal();
    const HermEig eig = herm_eig(scaled, label);
    ScaledMinEig out;
    out.lambda_min = eig.values(0);
    out.raw_lambda_min = herm_eig(w, label).values(0);
    out.direction = s.asDiagonal() * eig.vectors.col(0);
    return out;
}

std::optional<double> value_at(const std::vector<int>& n_list, const std::vector<double>& values, int n)
{
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        if (n_list[k] == n) {
            return values[k];
        }
    }
    return std::nullopt;
}

void check_order(int n, int lo, const char* what)
{
    if (n < lo || n > kMaxSection) {
        throw InvalidArgument(std::string(what) + ": section order out of range");
    }
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

nlohmann::ordered_json to_json(const CriterionReport& r)
{
    nlohmann::ordered_json j;
    j["criterion"] = r.criterion;
    j["labels"] = r.labels;
    j["n_list"] = r.n_list;
    j["values"] = r.values;
    j["verdict"] = to_string(r.verdict);
    j["witness"] = r.witness ? poly_json(*r.witness) : nlohmann::ordered_json(nullptr);
    j["constant"] = r.constant ? nlohmann::ordered_json(*r.constant) : nlohmann::ordered_json(nullptr);
    j["lower_values"] = r.lower_values;
    j["lower_constant"] =
        r.lower_constant ? nlohmann::ordered_json(*r.lower_constant) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.parameters) {
        params[name] = value;
    }
    j["parameters"] = params;
    nlohmann::ordered_json series = nlohmann::ordered_json::object();
    for (const auto& [name, values] : r.series) {
        series[name] = values;
    }
    j["series"] = series;
    j["note"] = r.note;
    return j;
}

// --- gamma ---

double gamma_index(const MomentMatrix& m, cplx a, int n)
{
    check_order(n, 1, "gamma_index");
    const Matrix s = m.section(n);
    // HPD gate; the solve itself goes through a pivoted LDL^* of the equilibrated section.
    scaled_cholesky(s);
    RealVector inv_sqrt_d(n);
    for (int k = 0; k < n; ++k) {
        inv_sqrt_d(k) = 1.0 / std::sqrt(s(k, k).real());
    }
    const Matrix s_hat = inv_sqrt_d.asDiagonal() * s * inv_sqrt_d.asDiagonal();
    const Vector e_hat = inv_sqrt_d.asDiagonal() * evaluation_vector(a, n);
    const Eigen::LDLT<Matrix> ldlt(s_hat);
    if (ldlt.info() != Eigen::Success) {
        throw NotPositiveDefinite(0, n);
    }
    const Vector x = ldlt.solve(e_hat);
    const double denom = e_hat.dot(x).real();
    return 1.0 / denom;
}

double gamma_via_kernel(const MomentMatrix& m, cplx a, int n)
{
    check_order(n, 1, "gamma_via_kernel");
    const Matrix l = scaled_cholesky(m.section(n));
    const Matrix r = l.triangularView<Eigen::Lower>().solve(Matrix::Identity(n, n));
    double kernel = 0.0;
    for (int k = 0; k < n; ++k) {
        std::vector<cplx> c(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            c[static_cast<std::size_t>(j)] = r(k, j);
        }
        kernel += std::norm(PolyCoeffs(std::move(c)).evaluate(a));
    }
    return 1.0 / kernel;
}

CriterionReport bpe_decide(const MomentMatrix& m, cplx a, int n_max)
{
    check_order(n_max, 4, "bpe_decide");
    CriterionReport r;
    r.criterion = "bpe";
    r.labels = {m.label(), "a=" + format_complex(a)};
    for (int n = 2; n <= n_max; ++n) {
        r.n_list.push_back(n);
        r.values.push_back(gamma_index(m, a, n));
    }
    const double g_quarter = *value_at(r.n_list, r.values, std::max(2, n_max / 4));
    const double g_half = *value_at(r.n_list, r.values, std::max(2, n_max / 2));
    const double g_full = r.values.back();

    // Tail extrapolation assuming the decrement shrinks geometrically from one doubling to the next.
    // Exact for gamma_n = g + c n^{-p}, so a sequence decaying to zero extrapolates to ~0.
    double limit = g_full;
    const double d1 = g_quarter - g_half;
    const double d2 = g_half - g_full;
    if (d1 > 0.0 && d2 > 0.0) {
        const double q = d2 / d1;
        limit = q < 1.0 ? g_full - d2 * q / (1.0 - q) : 0.0;
    }

    if (g_full < kBpeFloor || g_full * kBpeDecayFactor <= g_half) {
        r.verdict = Verdict::fails;
        // gamma_n is attained by v = e^* M_n^{-1} / (e^* M_n^{-1} e); rescaled so |p(a)| = 1 while
        // ||p||_M^2 = gamma_n is tiny.
        const Matrix s = m.section(n_max);
        const Vector e = evaluation_vector(a, n_max);
        const Vector y = s.ldlt().solve(e);
        const cplx scale = e.dot(y);
        r.witness = row_from_column(y / scale);
    } else if ((is_plateau(g_half, g_full) && g_full >= kBpeFloor) || limit >= kBpeFloor) {
        r.verdict = Verdict::holds;
    } else {
        r.verdict = Verdict::inconclusive;
    }
    r.constant = 1.0 / g_full;
    r.parameters = {{"floor", kBpeFloor},
                    {"decay_factor", kBpeDecayFactor},
                    {"plateau_tolerance", kPlateauTolerance},
                    {"extrapolated_gamma", limit}};
    r.note = "gamma_n for n = 2..n_max; constant = 1/gamma_{n_max}";
    return r;
}

// --- Wirtinger / rigidity ---

double wirtinger_excess(const MomentMatrix& m, double c, const PolyCoeffs& p)
{
    return m.quadratic_form(p) - c * m.quadratic_form(derivative(p));
}

CriterionReport wirtinger_psd_check(const MomentMatrix& m, double c, int n)
{
    check_order(n, 2, "wirtinger_psd_check");
    if (!(c > 0.0)) {
        throw InvalidArgument("Wirtinger constant must be positive");
    }
    // p = sum_{k<n} u_k z^{k+1}: ||p||^2 = u M^{(1,1)}_n u^*, ||p'||^2 = (uN) M_n (uN)^*.
    const Matrix shifted = delete_first(m).section(n);
    RealVector weights(n);
    for (int k = 0; k < n; ++k) {
        weights(k) = static_cast<double>(k + 1);
    }
    const Matrix sandwich = weights.asDiagonal() * m.section(n) * weights.asDiagonal();
    const Matrix w = c * sandwich - shifted;
    RealVector scale(n);
    for (int k = 0; k < n; ++k) {
        scale(k) = c * std::abs(sandwich(k, k).real()) + std::abs(shifted(k, k).real());
    }
    const ScaledMinEig eig = scaled_min_eig(w, scale, "Wirtinger matrix");

    CriterionReport r;
    r.criterion = "wirtinger";
    r.labels = {m.label()};
    r.n_list = {n};
    r.values = {eig.lambda_min};
    r.constant = c;
    r.parameters = {{"relative_tolerance", kPsdRelativeTolerance}, {"raw_lambda_min", eig.raw_lambda_min}};
    if (eig.lambda_min >= -kPsdRelativeTolerance) {
        r.verdict = Verdict::holds;
    } else {
        r.verdict = Verdict::fails;
        r.witness = times_z(row_from_column(eig.direction));
    }
    return r;
}

CriterionReport toeplitz_rigidity(const MomentMatrix& t, int n)
{
    if (!is_toeplitz(t, n)) {
        throw InvalidArgument("toeplitz_rigidity needs a Toeplitz matrix");
    }
    CriterionReport r = wirtinger_psd_check(t, 1.0, n);
    r.criterion = "toeplitz_rigidity";
    double off = 0.0;
    for (int k = 1; k < n; ++k) {
        off = std::max(off, std::abs(t.entry(0, k)));
    }
    const double ratio = off / t.entry(0, 0).real();
    r.parameters.emplace_back("offdiag_ratio", ratio);
    r.parameters.emplace_back("offdiag_vanishes", ratio <= kOffDiagonalTolerance ? 1.0 : 0.0);
    return r;
}

// --- dominance / condition (4) / comparability ---

CriterionReport dominance_check(const MomentMatrix& m0, const MomentMatrix& m1, double c, int n)
{
    check_order(n, 1, "dominance_check");
    if (!(c > 0.0)) {
        throw InvalidArgument("dominance constant must be positive");
    }
    const Matrix s0 = m0.section(n);
    const Matrix s1 = m1.section(n);
    RealVector scale(n);
    for (int k = 0; k < n; ++k) {
        scale(k) = c * std::abs(s0(k, k).real()) + std::abs(s1(k, k).real());
    }
    const ScaledMinEig eig = scaled_min_eig(c * s0 - s1, scale, "dominance matrix");

    CriterionReport r;
    r.criterion = "dominance";
    r.labels = {m0.label(), m1.label()};
    r.n_list = {n};
    r.values = {eig.lambda_min};
    r.constant = c;
    r.parameters = {{"relative_tolerance", kPsdRelativeTolerance}, {"raw_lambda_min", eig.raw_lambda_min}};
    try {
        const RealVector ratio = gen_eig_definite(s1, s0);
        r.parameters.emplace_back("best_constant", ratio(ratio.size() - 1));
    } catch (const NumericError&) {
        r.note = "M0 section not positive definite; best constant unavailable";
    }
    if (eig.lambda_min >= -kPsdRelativeTolerance) {
        r.verdict = Verdict::holds;
    } else {
        r.verdict = Verdict::fails;
        r.witness = row_from_column(eig.direction);
    }
    return r;
}

CriterionReport cond4_bound(const SobolevPencil& p, int n_max)
{
    check_order(n_max, 2, "cond4_bound");
    CriterionReport r;
    r.criterion = "cond4";
    r.labels = {p.label()};
    for (int n = 2; n <= n_max; ++n) {
        const RealVector ev = gen_eig_definite(p.m1().section(n), checked_gram_section(p, n));
        r.n_list.push_back(n);
        r.values.push_back(ev(ev.size() - 1));
    }
    const auto half = value_at(r.n_list, r.values, std::max(2, n_max / 2));
    r.verdict = half && is_plateau(*half, r.values.back()) ? Verdict::holds : Verdict::inconclusive;
    r.constant = r.values.back();
    r.parameters = {{"plateau_tolerance", kPlateauTolerance}};
    r.note = "largest eigenvalue of (M1_n, G_n)";
    return r;
}

CriterionReport comparability_bounds(const SobolevPencil& p, const SobolevPencil& q, int n_max)
{
    check_order(n_max, 2, "comparability_bounds");
    CriterionReport r;
    r.criterion = "comparability";
    r.labels = {p.label(), q.label()};
    for (int n = 1; n <= n_max; ++n) {
        const RealVector ev = gen_eig_definite(gram_section(q, n), checked_gram_section(p, n));
        r.n_list.push_back(n);
        r.values.push_back(ev(ev.size() - 1));
        r.lower_values.push_back(ev(0));
    }
    const int half_n = std::max(1, n_max / 2);
    const double up_half = *value_at(r.n_list, r.values, half_n);
    const double lo_half = *value_at(r.n_list, r.lower_values, half_n);
    const bool upper_ok = is_plateau(up_half, r.values.back());
    const bool lower_ok = is_plateau(lo_half, r.lower_values.back()) && r.lower_values.back() > 0.0;
    r.verdict = upper_ok && lower_ok ? Verdict::holds : Verdict::inconclusive;
    r.constant = r.values.back();
    r.lower_constant = r.lower_values.back();
    r.parameters = {{"plateau_tolerance", kPlateauTolerance}};
    r.note = "extreme eigenvalues of (G_n(Q), G_n(P))";
    return r;
}

// --- eigenvalue limits ---

EigenLimits eigen_limit_estimate(const TrigWeight& w, int n_max)
{
    check_order(n_max, 1, "eigen_limit_estimate");
    const MomentMatrix m = MomentMatrix::of_measure(Measure::weighted_circle(0.0, 1.0, w));
    EigenLimits out;
    out.grid_min = w.grid_min();
    out.grid_max = w.grid_max();
    for (int n = 1; n <= n_max; ++n) {
        const HermEig eig = herm_eig(m.section(n), m.label());
        out.n_list.push_back(n);
        out.smallest.push_back(eig.values(0));
        out.largest.push_back(eig.values(n - 1));
    }
    return out;
}

// --- Weighted-circle configuration ---

CriterionReport prop12_report(const Measure& m0, const std::vector<WeightedCircleSpec>& circles, int n_max)
{
    check_order(n_max, 4, "prop12_report");
    if (circles.empty()) {
        throw InvalidArgument("prop12_report needs at least one circle");
    }
    const MomentMatrix base = MomentMatrix::of_measure(m0);
    std::vector<std::pair<std::string, double>> gammas;
    double gamma_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < circles.size(); ++k) {
        const CriterionReport bpe = bpe_decide(base, circles[k].center, n_max);
        if (bpe.verdict != Verdict::holds) {
            throw InvalidArgument("center " + format_complex(circles[k].center) +
                                  " is not a bounded point evaluation of the first measure (verdict " +
                                  to_string(bpe.verdict) + ")");
        }
        const double g = bpe.values.back();
        gammas.emplace_back("gamma[" + std::to_string(k) + "]", g);
        gamma_min = std::min(gamma_min, g);
    }

    std::vector<std::pair<double, Measure>> parts;
    for (const auto& c : circles) {
        parts.emplace_back(1.0, Measure::weighted_circle(c.center, c.radius, c.weight));
    }
    const Measure derivative_measure = parts.size() == 1 ? parts.front().second : Measure::sum(parts);
    const SobolevPencil pencil(base, MomentMatrix::of_measure(derivative_measure));

    const CriterionReport c4 = cond4_bound(pencil, n_max);
    const auto mult = norm_sequence(pencil, n_max, Quantity::mult_op);

    CriterionReport r;
    r.criterion = "prop12";
    r.labels = {pencil.label()};
    std::vector<double> cond4_series;
    for (const auto& e : mult) {
        if (!e.value) {
            throw NumericError("multiplication operator sequence failed at n = " + std::to_string(e.n) + ": " +
                               e.error);
        }
        r.n_list.push_back(e.n);
        r.values.push_back(*e.value);
        const auto v = value_at(c4.n_list, c4.values, e.n);
        cond4_series.push_back(v ? *v : std::nan(""));
    }
    r.series.emplace_back("cond4", cond4_series);
    const bool mult_ok = is_plateau(mult);
    r.verdict = mult_ok && c4.verdict == Verdict::holds ? Verdict::holds : Verdict::inconclusive;
    r.constant = r.values.back();
    r.parameters = gammas;
    r.parameters.emplace_back("gamma_min", gamma_min);
    r.parameters.emplace_back("cond4_constant", *c4.constant);
    r.parameters.emplace_back("plateau_tolerance", kPlateauTolerance);
    r.note = "values: multiplication operator norm; series.cond4: condition (4) constant (n = 1 is null)";
    return r;
}

} // namespace sobolab
