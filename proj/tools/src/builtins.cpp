#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>

#include "sampling.hpp"
#include "sobolab/cli/scenario.hpp"
#include "sobolab/errors.hpp"
#include "sobolab/report.hpp"

namespace sobolab::cli {

namespace {

using ojson = nlohmann::ordered_json;
using Builtin = std::function<ojson(int, std::uint64_t, std::vector<Artifact>&)>;

constexpr int kQuadraturePoints = 4096;
constexpr int kSamples = 500;
constexpr int kMaxZeroDegree = 20;

Measure half_circle() { return Measure::circle(0.0, 0.5); }

TrigWeight cos_weight(double c0, int k, double ck)
{
    return TrigWeight::from_coefficients({{0, c0}, {k, ck}});
}

ojson criterion(const CriterionReport& r, std::vector<Artifact>& artifacts, const std::string& suffix)
{
    if (!r.n_list.empty() && r.n_list.size() == r.values.size()) {
        artifacts.push_back({suffix + ".csv", sequence_csv(r.n_list, r.values)});
    }
    return to_json(r);
}

/// mult_op sequence plus zeros of degree 1..min(20, n_max - 1) checked against the bound at
/// n = degree + 1.
ojson pencil_study(const SobolevPencil& p, int n_max, std::vector<Artifact>& artifacts, const std::string& tag)
{
    const auto seq = norm_sequence(p, n_max, Quantity::mult_op);
    artifacts.push_back({"_" + tag + "_multop.csv", sequence_csv(seq)});

    auto degrees = ojson::array();
    std::vector<cplx> scatter;
    bool all_within = true;
    double max_mod = 0.0;
    const int top = std::min(kMaxZeroDegree, n_max - 1);
    for (int d = 1; d <= top; ++d) {
        const auto zeros = sobolev_zeros(p, d);
        double m = 0.0;
        for (const auto& z : zeros) {
            m = std::max(m, std::abs(z));
        }
        const auto& e = seq[static_cast<std::size_t>(d)];
        const bool within = e.value.has_value() && m <= *e.value + 1e-6;
        all_within = all_within && within;
        max_mod = std::max(max_mod, m);
        ojson row;
        row["degree"] = d;
        row["max_zero_modulus"] = m;
        row["mult_op_norm"] = e.value ? ojson(*e.value) : ojson(nullptr);
        row["within_bound"] = within;
        degrees.push_back(row);
        scatter.insert(scatter.end(), zeros.begin(), zeros.end());
    }
    artifacts.push_back({"_" + tag + "_zeros.csv", points_csv(scatter)});

    ojson r;
    r["multop"] = sequence_report(p.label(), Quantity::mult_op, seq, &scatter);
    r["zeros"] = degrees;
    r["zeros_within_bound"] = all_within;
    r["cond4"] = criterion(cond4_bound(p, n_max), artifacts, "_" + tag + "_cond4");
    return r;
}

ojson identity_moments(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    const auto m = Measure::unit_circle();
    double exact_dev = 0.0;
    double quad_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx delta = i == j ? 1.0 : 0.0;
            exact_dev = std::max(exact_dev, std::abs(moment(m, i, j) - delta));
            quad_dev = std::max(quad_dev, std::abs(moment_quadrature(m, i, j, kQuadraturePoints) - delta));
        }
    }
    artifacts.push_back({"_section.csv", section_csv(MomentMatrix::of_measure(m).section(n))});
    ojson r;
    r["measure"] = measure_label(m);
    r["n"] = n;
    r["max_closed_form_deviation"] = exact_dev;
    r["max_quadrature_deviation"] = quad_dev;
    r["exact"] = exact_dev == 0.0;
    r["quadrature_within_tolerance"] = quad_dev <= 1e-10;
    return r;
}

ojson lemma3_unitcircle(int n, std::uint64_t seed, std::vector<Artifact>&)
{
    std::mt19937_64 rng(seed);
    const auto m = MomentMatrix::of_measure(Measure::unit_circle());
    double max_excess = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < kSamples; ++s) {
        const auto p = random_poly(rng, 0, kMaxZeroDegree);
        std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
        if (!c.empty()) {
            c[0] = 0.0;
        }
        const double lhs = m.quadratic_form(PolyCoeffs(std::move(c)));
        const double rhs = m.quadratic_form(derivative(p));
        max_excess = std::max(max_excess, lhs - rhs);
    }
    ojson r;
    r["samples"] = kSamples;
    r["max_excess"] = max_excess;
    r["within_tolerance"] = max_excess <= 1e-9;
    r["wirtinger"] = to_json(wirtinger_psd_check(m, 1.0, std::min(16, n)));
    return r;
}

ojson lemma3_shifted(int n, std::uint64_t seed, std::vector<Artifact>& artifacts)
{
    constexpr int kCircles = 20;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<cplx, double>> circles;
    for (int k = 0; k < kCircles; ++k) {
        const double re = 2.0 * u(rng) - 1.0;
        const double im = 2.0 * u(rng) - 1.0;
        const double r = 2.0 * (1.0 - u(rng));
        circles.emplace_back(cplx(re, im), r);
    }
    std::vector<PolyCoeffs> polys;
    for (int s = 0; s < kSamples; ++s) {
        polys.push_back(random_poly(rng, 0, kMaxZeroDegree));
    }

    auto rows = ojson::array();
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_identity = 0.0;
    bool all_psd = true;
    std::string csv = "re,im,radius,max_relative_excess,max_identity_deviation\n";
    for (const auto& [a, r] : circles) {
        const auto pts = circle_points(a, r, kQuadraturePoints);
        double excess = -std::numeric_limits<double>::infinity();
        double identity = 0.0;
        for (const auto& p : polys) {
            const auto dp = derivative(p);
            const cplx pa = p.evaluate(a);
            const double lhs = mean_abs2(pts, [&](cplx z) { return p.evaluate(z) - pa; });
            const double rhs = r * r * mean_abs2(pts, [&](cplx z) { return dp.evaluate(z); });
            const auto b = to_shifted_basis(p, a);
            double exact = 0.0;
            for (int k = b.degree(); k >= 1; --k) {
                exact += std::norm(b[k]) * std::pow(r, 2 * k);
            }
            if (rhs > 0.0) {
                excess = std::max(excess, (lhs - rhs) / rhs);
            } else {
                excess = std::max(excess, lhs);
            }
            if (lhs > 0.0) {
                identity = std::max(identity, std::abs(exact - lhs) / lhs);
            }
        }
        const auto shifted = MomentMatrix::of_measure(translated(Measure::circle(a, r), a));
        const auto check = wirtinger_psd_check(shifted, r * r, std::min(16, n));
        all_psd = all_psd && check.verdict == Verdict::holds;
        worst_excess = std::max(worst_excess, excess);
        worst_identity = std::max(worst_identity, identity);
        csv += format_real(a.real()) + ',' + format_real(a.imag()) + ',' + format_real(r) + ',' +
               format_real(excess) + ',' + format_real(identity) + '\n';
        ojson row;
        row["center"] = ojson::array({a.real(), a.imag()});
        row["radius"] = r;
        row["max_relative_excess"] = excess;
        row["max_identity_deviation"] = identity;
        row["wirtinger_verdict"] = to_string(check.verdict);
        rows.push_back(row);
    }
    artifacts.push_back({"_circles.csv", csv});
    ojson out;
    out["samples"] = kSamples;
    out["circles"] = rows;
    out["max_relative_excess"] = worst_excess;
    out["max_identity_deviation"] = worst_identity;
    out["inequality_holds"] = worst_excess <= 1e-9;
    out["identity_holds"] = worst_identity <= 1e-10;
    out["matrix_form_holds"] = all_psd;
    return out;
}

ojson prop6_equivalence(int n, std::uint64_t seed, std::vector<Artifact>&)
{
    struct Case {
        const char* name;
        Measure measure;
        double c;
        int n;
    };
    const int sec = std::min(16, n);
    const std::vector<Case> cases = {
        {"unit circle, C = 1", Measure::unit_circle(), 1.0, sec},
        {"circle r = 1/2, C = 1/4", half_circle(), 0.25, sec},
        {"circle r = 2, C = 4", Measure::circle(0.0, 2.0), 4.0, sec},
        {"circle r = 2, C = 3.9", Measure::circle(0.0, 2.0), 3.9, sec},
        {"weighted unit circle w(+-1) = 0.4, C = 1",
         Measure::weighted_circle(0.0, 1.0, cos_weight(1.0, 1, 0.4)), 1.0, std::min(3, n)},
    };
    std::mt19937_64 rng(seed);
    auto rows = ojson::array();
    bool all_equivalent = true;
    for (const auto& c : cases) {
        const auto m = MomentMatrix::of_measure(c.measure);
        const auto report = wirtinger_psd_check(m, c.c, c.n);
        double worst = -std::numeric_limits<double>::infinity();
        int violations = 0;
        for (int s = 0; s < kSamples; ++s) {
            const auto p0 = random_poly(rng, 0, c.n - 1);
            const auto p = times_z(p0);
            const double scale = m.quadratic_form(p) + c.c * m.quadratic_form(derivative(p));
            const double excess = wirtinger_excess(m, c.c, p) / scale;
            worst = std::max(worst, excess);
            if (excess > 1e-10) {
                ++violations;
            }
        }
        const double witness_excess = report.witness ? wirtinger_excess(m, c.c, *report.witness) : 0.0;
        const bool equivalent = report.verdict == Verdict::holds ? violations == 0 : witness_excess > 0.0;
        all_equivalent = all_equivalent && equivalent;
        ojson row;
        row["case"] = c.name;
        row["report"] = to_json(report);
        row["max_sample_relative_excess"] = worst;
        row["sample_violations"] = violations;
        row["witness_excess"] = report.witness ? ojson(witness_excess) : ojson(nullptr);
        row["equivalent"] = equivalent;
        rows.push_back(row);
    }
    ojson out;
    out["samples_per_case"] = kSamples;
    out["cases"] = rows;
    out["all_equivalent"] = all_equivalent;
    return out;
}

ojson prop7_rigidity(int n, std::uint64_t seed, std::vector<Artifact>&)
{
    constexpr int kRandom = 50;
    constexpr int kOrder = 8;
    ojson out;
    out["identity"] = to_json(toeplitz_rigidity(MomentMatrix::identity(), std::min(16, n)));
    out["weighted_circle"] = to_json(toeplitz_rigidity(
        MomentMatrix::of_measure(Measure::weighted_circle(0.0, 1.0, cos_weight(1.0, 1, 0.4))), std::min(3, n)));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int agree = 0;
    int holds = 0;
    for (int k = 0; k < kRandom; ++k) {
        const bool diagonal = k % 2 == 0;
        std::vector<cplx> t(kOrder + 1);
        t[0] = 1.0 + std::abs(u(rng));
        for (int j = 1; j <= kOrder; ++j) {
            const double re = u(rng);
            const double im = u(rng);
            t[static_cast<std::size_t>(j)] = diagonal ? cplx(0.0) : cplx(re, im);
        }
        if (!diagonal && std::abs(t[1]) < 1e-3) {
            t[1] = 0.5;
        }
        const MomentMatrix m(
            [t](int i, int j) {
                const auto d = static_cast<std::size_t>(j - i);
                return d < t.size() ? t[d] : cplx(0.0);
            },
            "random toeplitz", false);
        const auto r = toeplitz_rigidity(m, kOrder);
        const bool vanishes = std::any_of(r.parameters.begin(), r.parameters.end(), [](const auto& kv) {
            return kv.first == "offdiag_vanishes" && kv.second != 0.0;
        });
        const bool h = r.verdict == Verdict::holds;
        holds += h ? 1 : 0;
        agree += h == vanishes ? 1 : 0;
    }
    out["random_rules"] = kRandom;
    out["random_order"] = kOrder;
    out["random_holds"] = holds;
    out["random_agreements"] = agree;
    out["equivalence_holds"] = agree == kRandom;
    return out;
}

ojson example4(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    const auto m_half = MomentMatrix::of_measure(half_circle());
    const auto m = MomentMatrix::of_measure(Measure::unit_circle());
    const auto dom = dominance_check(m_half, m, 1e6, std::min(16, n));
    ojson out;
    out["dominance"] = to_json(dom);
    if (dom.witness) {
        const auto& w = *dom.witness;
        const auto nonzero = std::count_if(w.coeffs().begin(), w.coeffs().end(),
                                           [&w](cplx c) { return std::abs(c) > 1e-12 * w.max_abs_coeff(); });
        out["witness_degree"] = w.degree();
        out["witness_is_monomial"] = nonzero == 1;
    } else {
        out["witness_degree"] = nullptr;
        out["witness_is_monomial"] = false;
    }
    const SobolevPencil p(m_half, m);
    out["pencil"] = pencil_study(p, n, artifacts, "mr_m");
    return out;
}

ojson example5(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    const auto nu = Measure::weighted_circle(0.0, 1.0, cos_weight(1.0, 1, 0.4));
    const auto discrete = Measure::atomic({{cplx(0.3, 0.0), 1.0}, {cplx(0.0, -0.5), 1.0}, {cplx(0.2, 0.2), 1.0}});
    const auto continuous = Measure::sum({{1.0, Measure::circle(cplx(0.2, 0.0), 0.5)},
                                          {1.0, Measure::circle(cplx(0.0, -0.3), 0.4)}});
    const auto m0 = MomentMatrix::of_measure(nu);
    ojson out;
    out["discrete"] = pencil_study(SobolevPencil(m0, MomentMatrix::of_measure(discrete)), n, artifacts, "discrete");
    out["continuous"] =
        pencil_study(SobolevPencil(m0, MomentMatrix::of_measure(continuous)), n, artifacts, "continuous");
    return out;
}

ojson example6(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    const SobolevPencil p(MomentMatrix::of_measure(Measure::unit_circle()),
                          MomentMatrix::of_measure(Measure::circle(0.5, 2.0)));
    return pencil_study(p, n, artifacts, "circles");
}

ojson example7_core(int n, std::vector<Artifact>& artifacts)
{
    const auto m_half = MomentMatrix::of_measure(half_circle());
    const auto m = MomentMatrix::of_measure(Measure::unit_circle());
    const auto sum = MomentMatrix::of_measure(Measure::sum({{1.0, half_circle()}, {1.0, Measure::unit_circle()}}));
    const SobolevPencil p(m_half, m);
    const SobolevPencil q(sum, m);

    ojson out;
    out["comparability"] = criterion(comparability_bounds(p, q, n), artifacts, "_comparability");

    auto dom = ojson::array();
    bool all_fail = true;
    for (const double c : {1.0, 10.0, std::pow(4.0, 7), std::pow(4.0, 14)}) {
        const auto r = dominance_check(m_half, sum, c, std::min(16, n));
        all_fail = all_fail && r.verdict == Verdict::fails;
        dom.push_back(to_json(r));
    }
    out["component_dominance"] = dom;
    out["component_dominance_fails"] = all_fail;

    std::vector<int> ks;
    std::vector<double> ratios;
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const auto z = PolyCoeffs::monomial(k);
        const double ratio = sum.quadratic_form(z) / m_half.quadratic_form(z);
        const double expected = 1.0 + std::pow(4.0, k);
        worst = std::max(worst, std::abs(ratio - expected) / expected);
        ks.push_back(k);
        ratios.push_back(ratio);
    }
    artifacts.push_back({"_component_ratio.csv", sequence_csv(ks, ratios)});
    out["component_ratio"] = ratios;
    out["component_ratio_max_relative_deviation"] = worst;
    return out;
}

ojson example7(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    auto out = example7_core(n, artifacts);
    const SobolevPencil p(MomentMatrix::of_measure(half_circle()), MomentMatrix::of_measure(Measure::unit_circle()));
    out["pencil"] = pencil_study(p, n, artifacts, "p");
    return out;
}

ojson example7_comparability(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    return example7_core(n, artifacts);
}

ojson bpe_map_for(const Measure& measure, double extent, int grid, int n, std::string& csv)
{
    const auto m = MomentMatrix::of_measure(measure);
    const double hull = support_hull_radius(measure);
    auto points = ojson::array();
    int holds = 0;
    int fails = 0;
    int inconclusive = 0;
    bool consistent = true;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const cplx a(-extent + 2.0 * extent * j / (grid - 1), -extent + 2.0 * extent * i / (grid - 1));
            const auto r = bpe_decide(m, a, n);
            const double gamma = r.values.empty() ? 0.0 : r.values.back();
            switch (r.verdict) {
            case Verdict::holds:
                ++holds;
                consistent = consistent && std::abs(a) < hull;
                break;
            case Verdict::fails:
                ++fails;
                consistent = consistent && std::abs(a) > hull;
                break;
            case Verdict::inconclusive: ++inconclusive; break;
            }
            csv += format_real(a.real()) + ',' + format_real(a.imag()) + ',' + format_real(gamma) + ',' +
                   to_string(r.verdict) + '\n';
            ojson row;
            row["point"] = ojson::array({a.real(), a.imag()});
            row["gamma"] = gamma;
            row["verdict"] = to_string(r.verdict);
            points.push_back(row);
        }
    }
    ojson out;
    out["measure"] = measure_label(measure);
    out["support_radius"] = hull;
    out["holds"] = holds;
    out["fails"] = fails;
    out["inconclusive"] = inconclusive;
    out["consistent_with_support"] = consistent;
    out["points"] = points;
    return out;
}

ojson bpe_disk_map(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    constexpr int kGrid = 9;
    ojson out;
    std::string csv = "re,im,gamma,verdict\n";
    out["unit_circle"] = bpe_map_for(Measure::unit_circle(), 1.6, kGrid, n, csv);
    artifacts.push_back({"_unit_circle.csv", csv});
    csv = "re,im,gamma,verdict\n";
    out["half_circle"] = bpe_map_for(half_circle(), 0.8, kGrid, n, csv);
    artifacts.push_back({"_half_circle.csv", csv});
    return out;
}

ojson eigen_study(const TrigWeight& w, int n, std::vector<Artifact>& artifacts, const std::string& tag)
{
    const auto e = eigen_limit_estimate(w, n);
    artifacts.push_back({"_" + tag + "_smallest.csv", sequence_csv(e.n_list, e.smallest)});
    artifacts.push_back({"_" + tag + "_largest.csv", sequence_csv(e.n_list, e.largest)});
    ojson out;
    out["n_list"] = e.n_list;
    out["smallest"] = e.smallest;
    out["largest"] = e.largest;
    out["grid_min"] = e.grid_min;
    out["grid_max"] = e.grid_max;
    out["within_grid_extremes"] = e.lambda() >= e.grid_min - 1e-10 && e.beta() <= e.grid_max + 1e-10;
    auto gaps = ojson::array();
    bool monotone = true;
    double prev_lo = std::numeric_limits<double>::infinity();
    double prev_hi = std::numeric_limits<double>::infinity();
    for (int k = 8; k <= n; k *= 2) {
        const double lo = e.smallest[static_cast<std::size_t>(k - 1)] - e.grid_min;
        const double hi = e.grid_max - e.largest[static_cast<std::size_t>(k - 1)];
        monotone = monotone && lo < prev_lo && hi < prev_hi;
        prev_lo = lo;
        prev_hi = hi;
        ojson g;
        g["n"] = k;
        g["gap_to_min"] = lo;
        g["gap_to_max"] = hi;
        gaps.push_back(g);
    }
    out["gaps"] = gaps;
    out["gaps_decrease"] = monotone;
    return out;
}

ojson eigenlimits_weighted(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    ojson out;
    out["one_plus_0_8_cos"] = eigen_study(cos_weight(1.0, 1, 0.4), n, artifacts, "cos1");
    out["two_plus_cos2"] = eigen_study(cos_weight(2.0, 2, 0.5), n, artifacts, "cos2");
    return out;
}

ojson prop12_circles(int n, std::uint64_t, std::vector<Artifact>& artifacts)
{
    ojson out;
    out["unit_circle_wide_circle"] = criterion(
        prop12_report(Measure::unit_circle(), {{cplx(0.3, 0.0), 5.0, TrigWeight::constant(1.0)}}, n), artifacts,
        "_wide");
    out["half_circle_unit_circle"] = criterion(
        prop12_report(half_circle(), {{cplx(0.0), 1.0, TrigWeight::constant(1.0)}}, n), artifacts, "_half");
    out["weighted_pair"] = criterion(
        prop12_report(Measure::unit_circle(),
                      {{cplx(0.2, 0.1), 0.5, cos_weight(1.0, 1, 0.4)}, {cplx(-0.4, 0.0), 3.0, TrigWeight::constant(2.0)}},
                      n),
        artifacts, "_weighted");
    return out;
}

const std::vector<std::pair<std::string, Builtin>>& registry()
{
    static const std::vector<std::pair<std::string, Builtin>> r = {
        {"identity-moments", identity_moments},
        {"lemma3-unitcircle", lemma3_unitcircle},
        {"lemma3-shifted", lemma3_shifted},
        {"prop6-equivalence", prop6_equivalence},
        {"prop7-rigidity", prop7_rigidity},
        {"example4-mr-m", example4},
        {"example5-discrete", example5},
        {"example6-circles", example6},
        {"example7", example7},
        {"example7-comparability", example7_comparability},
        {"bpe-disk-map", bpe_disk_map},
        {"eigenlimits-weighted", eigenlimits_weighted},
        {"prop12-circles", prop12_circles},
    };
    return r;
}

} // namespace

const std::vector<std::string>& list_builtins()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

RunResult run_builtin(std::string_view name, int n_max, std::uint64_t seed)
{
    if (n_max < 2 || n_max > kMaxSection) {
        throw InvalidArgument("n_max must be in [2, 64] for builtins");
    }
    for (const auto& [key, fn] : registry()) {
        if (key == name) {
            RunResult out;
            const auto result = fn(n_max, seed, out.artifacts);
            out.report["scenario"] = key;
            out.report["command"] = "builtin";
            out.report["n_max"] = n_max;
            out.report["seed"] = seed;
            out.report["result"] = result;
            return out;
        }
    }
    throw InvalidArgument("unknown builtin '" + std::string(name) + "'");
}

} // namespace sobolab::cli
