// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sobolab/cli/runner.hpp"
#include "sobolab/cli/scenario.hpp"
#include "sobolab/criteria.hpp"
#include "sobolab/measures.hpp"
#include "sobolab/moment_matrix.hpp"
#include "sobolab/poly_coeffs.hpp"
#include "sobolab/sobolev.hpp"

namespace {

using namespace sobolab;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

MomentMatrix mm(const Measure& m) { return MomentMatrix::of_measure(m); }
Measure unit() { return Measure::unit_circle(); }
Measure half() { return Measure::circle(0.0, 0.5); }

/// Trapezoid mean of f over |z - a| = r with `count` nodes; exact for trigonometric
/// polynomials of degree below `count`.
double circle_mean(cplx a, double r, int count, const std::function<double(cplx, double)>& f)
{
    double s = 0.0;
    for (int k = 0; k < count; ++k) {
        const double t = 2.0 * std::numbers::pi * k / count;
        s += f(a + r * cplx(std::cos(t), std::sin(t)), t);
    }
    return s / count;
}

PolyCoeffs random_poly(std::mt19937_64& rng, int max_degree)
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

std::vector<cplx> grid25()
{
    std::vector<cplx> pts;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            pts.emplace_back(-0.6 + 0.3 * i, -0.6 + 0.3 * j);
        }
    }
    return pts;
}

double value_at(const CriterionReport& r, int n)
{
    for (std::size_t k = 0; k < r.n_list.size(); ++k) {
        if (r.n_list[k] == n) {
            return r.values[k];
        }
    }
    return std::nan("");
}

Outcome identity_moments()
{
    Outcome o;
    const auto m = unit();
    double exact_dev = 0.0;
    double quad_dev = 0.0;
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            const cplx delta = i == j ? 1.0 : 0.0;
            exact_dev = std::max(exact_dev, std::abs(moment(m, i, j) - delta));
            cplx q = 0.0;
            for (int k = 0; k < 4096; ++k) {
                const double t = 2.0 * std::numbers::pi * k / 4096;
                q += std::polar(1.0, (i - j) * t);
            }
            quad_dev = std::max(quad_dev, std::abs(q / 4096.0 - moment(m, i, j)));
        }
    }
    o.require(exact_dev == 0.0, "closed form deviates by " + fmt(exact_dev));
    o.require(quad_dev <= 1e-10, "quadrature deviates by " + fmt(quad_dev));
    o.detail = o.pass ? "exact, quadrature deviation " + fmt(quad_dev) : o.detail;
    return o;
}

Outcome lemma3()
{
    Outcome o;
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> radius(0.0, 2.0);
    std::vector<PolyCoeffs> polys;
    for (int k = 0; k < 500; ++k) {
        polys.push_back(random_poly(rng, 20));
    }
    double worst_excess = 0.0;
    double worst_identity = 0.0;
    for (int c = 0; c < 20; ++c) {
        const double re = u(rng);
        const double im = u(rng);
        const cplx a(re, im);
        double r = radius(rng);
        if (r == 0.0) {
            r = 1.0;
        }
        const auto m = mm(Measure::circle(a, r));
        for (const auto& p : polys) {
            const cplx pa = p.evaluate(a);
            const auto dp = derivative(p);
            const double lhs = circle_mean(a, r, 64, [&](cplx z, double) { return std::norm(p.evaluate(z) - pa); });
            const double rhs = r * r * circle_mean(a, r, 64, [&](cplx z, double) { return std::norm(dp.evaluate(z)); });
            worst_excess = std::max(worst_excess, (lhs - rhs) / std::max(rhs, 1e-300));

            const auto shifted = to_shifted_basis(p, a);
            double identity = 0.0;
            for (int k = 0; k <= shifted.degree(); ++k) {
                identity += std::norm(shifted[k]) * std::pow(r, 2 * k);
            }
            const double quad = circle_mean(a, r, 64, [&](cplx z, double) { return std::norm(p.evaluate(z)); });
            worst_identity = std::max(worst_identity, std::abs(identity - quad) / std::max(quad, 1e-300));
            const double lib = m.quadratic_form(p);
            worst_identity = std::max(worst_identity, std::abs(lib - quad) / std::max(quad, 1e-300));
        }
    }
    o.require(worst_excess <= 1e-9, "inequality relative excess " + fmt(worst_excess));
    o.require(worst_identity <= 1e-10, "identity deviation " + fmt(worst_identity));

    const auto builtin = cli::run_builtin("lemma3-shifted", cli::kDefaultNMax, 0).report["result"];
    o.require(builtin["inequality_holds"].get<bool>() && builtin["identity_holds"].get<bool>(),
              "builtin lemma3-shifted flags false");
    o.detail = o.pass ? "max excess " + fmt(worst_excess) + ", identity deviation " + fmt(worst_identity) : o.detail;
    return o;
}

Outcome gamma_agreement()
{
    Outcome o;
    double worst_pair = 0.0;
    double worst_closed = 0.0;
    for (const auto& meas : {unit(), half()}) {
        const auto m = mm(meas);
        for (const auto& a : grid25()) {
            for (int n = 1; n <= 24; ++n) {
                const double g1 = gamma_index(m, a, n);
                const double g2 = gamma_via_kernel(m, a, n);
                worst_pair = std::max(worst_pair, std::abs(g1 - g2) / g1);
            }
        }
    }
    const auto m = mm(unit());
    for (const auto& a : grid25()) {
        const double s = std::norm(a);
        for (int n = 1; n <= 24; ++n) {
            const double closed = s == 0.0 ? 1.0 : (1.0 - s) / (1.0 - std::pow(s, n));
            worst_closed = std::max(worst_closed, std::abs(gamma_index(m, a, n) - closed) / closed);
        }
    }
    o.require(worst_pair <= 1e-9, "two-method relative gap " + fmt(worst_pair));
    o.require(worst_closed <= 1e-10, "closed form relative gap " + fmt(worst_closed));
    o.detail = o.pass ? "two-method " + fmt(worst_pair) + ", closed form " + fmt(worst_closed) : o.detail;
    return o;
}

Outcome bpe_geometry()
{
    Outcome o;
    const auto m = mm(unit());
    for (const double r : {0.0, 0.3, 0.6, 0.9}) {
        for (int k = 0; k < 8; ++k) {
            const cplx a = std::polar(r, std::numbers::pi * k / 4);
            const auto v = bpe_decide(m, a, 32).verdict;
            o.require(v == Verdict::holds, "not holds at a = " + fmt(a.real()) + "+" + fmt(a.imag()) + "i");
        }
    }
    for (const double r : {1.1, 1.2, 1.5, 2.0}) {
        for (int k = 0; k < 8; ++k) {
            const cplx a = std::polar(r, std::numbers::pi * k / 4);
            const auto rep = bpe_decide(m, a, 32);
            o.require(rep.verdict == Verdict::fails, "not fails at a = " + fmt(a.real()) + "+" + fmt(a.imag()) + "i");
            if (rep.verdict == Verdict::fails) {
                o.require(rep.witness.has_value(), "fails without witness");
            }
        }
    }
    const double g = gamma_index(m, 1.2, 32);
    const double geometric = (1.44 - 1.0) / (std::pow(1.44, 32) - 1.0);
    o.require(g <= 1e-4, "gamma_32(1.2) = " + fmt(g));
    o.require(std::abs(g - geometric) <= 1e-10 * geometric, "gamma_32(1.2) off the geometric sum");
    o.detail = o.pass ? "gamma_32(1.2) = " + fmt(g) : o.detail;
    return o;
}

Outcome rigidity()
{
    Outcome o;
    o.require(wirtinger_psd_check(mm(unit()), 1.0, 16).verdict == Verdict::holds, "M(m) Wirtinger check not holds");

    const auto w = TrigWeight::from_coefficients({{0, 1.0}, {1, 0.4}});
    const auto weighted = mm(Measure::weighted_circle(0.0, 1.0, w));
    const auto r = wirtinger_psd_check(weighted, 1.0, 3);
    double excess = 0.0;
    if (r.verdict != Verdict::fails || !r.witness) {
        o.require(false, "weighted circle not fails at n = 3");
    } else {
        const auto& p = *r.witness;
        const auto dp = derivative(p);
        o.require(std::abs(p[0]) <= 1e-14 * p.max_abs_coeff(), "witness does not vanish at 0");
        const double lhs = circle_mean(0.0, 1.0, 64, [&](cplx z, double t) { return std::norm(p.evaluate(z)) * w.value(t); });
        const double rhs = circle_mean(0.0, 1.0, 64, [&](cplx z, double t) { return std::norm(dp.evaluate(z)) * w.value(t); });
        excess = lhs - rhs;
        o.require(excess > 1e-10, "witness excess " + fmt(excess));
    }

    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> diag(1.0, 2.0);
    int agree = 0;
    int holds = 0;
    for (int k = 0; k < 50; ++k) {
        // Entries t_0..t_7 fill the order-8 section; |t_j| <= 0.04 * sqrt(2) keeps it diagonally dominant.
        std::vector<cplx> t(8, 0.0);
        t[0] = diag(rng);
        // Even draws keep a diagonal rule, odd draws fill a random subset of off-diagonals.
        bool off = false;
        if (k % 2 == 1) {
            for (std::size_t j = 1; j < t.size(); ++j) {
                const double re = u(rng);
                const double im = u(rng);
                if (u(rng) > 0.0) {
                    t[j] = 0.04 * cplx(re, im);
                    off = true;
                }
            }
            if (!off) {
                t[3] = 0.04;
                off = true;
            }
        }
        const MomentMatrix tm(
            [t](int i, int j) {
                const auto d = static_cast<std::size_t>(std::abs(j - i));
                if (d >= t.size()) {
                    return cplx(0.0);
                }
                return j >= i ? t[d] : std::conj(t[d]);
            },
            "toeplitz", false);
        const bool h = toeplitz_rigidity(tm, 8).verdict == Verdict::holds;
        holds += h ? 1 : 0;
        agree += h == !off ? 1 : 0;
    }
    o.require(agree == 50, std::to_string(agree) + "/50 Toeplitz rules agree");
    o.detail = o.pass ? "witness excess " + fmt(excess) + ", Toeplitz " + std::to_string(agree) + "/50 (" +
                            std::to_string(holds) + " hold)"
                      : o.detail;
    return o;
}

Outcome examples_4_7()
{
    Outcome o;
    const auto m_half = mm(half());
    const auto m = mm(unit());
    const auto dom = dominance_check(m_half, m, 1e6, 16);
    int witness_k = -1;
    if (dom.verdict != Verdict::fails || !dom.witness) {
        o.require(false, "half-circle dominance not fails");
    } else {
        const auto& w = *dom.witness;
        int nonzero = 0;
        for (int k = 0; k <= w.degree(); ++k) {
            if (std::abs(w[k]) > 1e-12 * w.max_abs_coeff()) {
                ++nonzero;
                witness_k = k;
            }
        }
        o.require(nonzero == 1 && witness_k >= 10, "witness is not z^k with k >= 10");
        // Independent check: ||z^k||^2 under m is 1, under m_{0;1/2} it is 4^-k.
        o.require(1.0 > 1e6 * std::pow(4.0, -witness_k), "witness does not violate C = 1e6");
    }

    const SobolevPencil p(m_half, m);
    const SobolevPencil q(mm(Measure::sum({{1.0, half()}, {1.0, unit()}})), m);
    const auto cmp = comparability_bounds(p, q, 32);
    const double lower = cmp.lower_constant.value_or(0.0);
    const double up16 = value_at(cmp, 16);
    const double up32 = value_at(cmp, 32);
    const double growth = std::abs(up32 - up16) / up16;
    o.require(lower >= 1.0, "lower constant " + fmt(lower));
    o.require(growth <= 0.01, "upper growth 16 to 32 is " + fmt(growth));

    double worst_ratio = 0.0;
    const auto sum = mm(Measure::sum({{1.0, half()}, {1.0, unit()}}));
    for (int k = 0; k <= 20; ++k) {
        const auto z = PolyCoeffs::monomial(k);
        const double expected = 1.0 + std::pow(4.0, k);
        const double ratio = sum.quadratic_form(z) / m_half.quadratic_form(z);
        worst_ratio = std::max(worst_ratio, std::abs(ratio - expected) / expected);
    }
    o.require(worst_ratio <= 1e-8, "component ratio deviation " + fmt(worst_ratio));
    o.detail = o.pass ? "witness z^" + std::to_string(witness_k) + ", lower " + fmt(lower) + ", upper growth " +
                            fmt(growth) + ", ratio deviation " + fmt(worst_ratio)
                      : o.detail;
    return o;
}

Outcome mult_op()
{
    Outcome o;
    const SobolevPencil pm(mm(unit()), MomentMatrix::zero());
    const SobolevPencil ph(mm(half()), MomentMatrix::zero());
    double worst_m = 0.0;
    double worst_h = 0.0;
    for (int n = 1; n <= 32; ++n) {
        worst_m = std::max(worst_m, std::abs(mult_op_norm(pm, n) - 1.0));
    }
    for (int n = 1; n <= 24; ++n) {
        worst_h = std::max(worst_h, std::abs(mult_op_norm(ph, n) - 0.5));
    }
    o.require(worst_m <= 1e-10, "M(m) deviation " + fmt(worst_m));
    o.require(worst_h <= 1e-10, "M(m_{0;1/2}) deviation " + fmt(worst_h));
    o.detail = o.pass ? "deviations " + fmt(worst_m) + ", " + fmt(worst_h) : o.detail;
    return o;
}

Outcome zeros_bounded()
{
    Outcome o;
    const std::vector<std::pair<std::string, SobolevPencil>> pencils = {
        {"example6-circles", SobolevPencil(mm(unit()), mm(Measure::circle(0.5, 2.0)))},
        {"example7", SobolevPencil(mm(half()), mm(unit()))},
    };
    for (const auto& [name, p] : pencils) {
        std::vector<double> norms(33, 0.0);
        for (int n = 2; n <= 32; ++n) {
            norms[static_cast<std::size_t>(n)] = mult_op_norm(p, n);
        }
        for (int d = 1; d <= 20; ++d) {
            double biggest = 0.0;
            for (const auto& z : sobolev_zeros(p, d)) {
                biggest = std::max(biggest, std::abs(z));
            }
            o.require(biggest <= norms[static_cast<std::size_t>(d) + 1] + 1e-6,
                      name + " degree " + std::to_string(d) + " zero modulus " + fmt(biggest));
        }
        o.require(is_plateau(norms[16], norms[32]), name + " mult_op not plateaued");
    }
    const auto e6 = cli::run_builtin("example6-circles", cli::kDefaultNMax, 0).report["result"];
    const auto e7 = cli::run_builtin("example7", cli::kDefaultNMax, 0).report["result"]["pencil"];
    o.require(e6["zeros_within_bound"].get<bool>() && e6["multop"]["plateau"].get<bool>(), "example6-circles builtin flags");
    o.require(e7["zeros_within_bound"].get<bool>() && e7["multop"]["plateau"].get<bool>(), "example7 builtin flags");
    o.detail = o.pass ? "degrees 1..20 within bound, plateau on both pencils" : o.detail;
    return o;
}

Outcome eigen_sandwich()
{
    Outcome o;
    const auto w = TrigWeight::from_coefficients({{0, 1.0}, {1, 0.4}});
    const auto lim = eigen_limit_estimate(w, 32);
    std::map<int, std::pair<double, double>> at;
    for (std::size_t k = 0; k < lim.n_list.size(); ++k) {
        at[lim.n_list[k]] = {lim.smallest[k], lim.largest[k]};
    }
    for (const int n : {8, 16, 32}) {
        o.require(at.contains(n), "missing n = " + std::to_string(n));
    }
    if (!o.pass) {
        return o;
    }
    const auto [lo32, hi32] = at[32];
    o.require(lo32 >= 0.2 - 1e-10 && hi32 <= 1.8 + 1e-10, "n = 32 outside [0.2, 1.8]");
    // Oracle: Toeplitz sections of 1 + 0.8 cos have eigenvalues 1 + 0.8 cos(k pi / (n + 1)).
    const double lo_exact = 1.0 + 0.8 * std::cos(32.0 * std::numbers::pi / 33.0);
    const double hi_exact = 1.0 + 0.8 * std::cos(std::numbers::pi / 33.0);
    o.require(std::abs(lo32 - lo_exact) <= 1e-10 && std::abs(hi32 - hi_exact) <= 1e-10, "n = 32 off the exact spectrum");
    double prev_lo = 1e300;
    double prev_hi = 1e300;
    for (const int n : {8, 16, 32}) {
        const double dl = at[n].first - 0.2;
        const double dh = 1.8 - at[n].second;
        o.require(dl < prev_lo && dh < prev_hi, "gap not decreasing at n = " + std::to_string(n));
        prev_lo = dl;
        prev_hi = dh;
    }
    o.detail = o.pass ? "lambda_32 = " + fmt(lo32) + ", beta_32 = " + fmt(hi32) : o.detail;
    return o;
}

std::map<std::string, std::string> read_dir(const std::filesystem::path& dir)
{
    std::map<std::string, std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(e.path(), std::ios::binary);
        files[e.path().filename().string()] =
            std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return files;
}

Outcome determinism()
{
    Outcome o;
    const auto base = std::filesystem::temp_directory_path() / ("sobolab_acceptance_" + std::to_string(std::random_device{}()));
    std::vector<std::map<std::string, std::string>> runs;
    for (int k = 0; k < 2; ++k) {
        const auto dir = base / std::to_string(k);
        std::filesystem::create_directories(dir);
        cli::RunOptions opt;
        opt.builtin = "all";
        opt.out = dir;
        opt.seed = 0;
        std::ostringstream err;
        const int code = cli::run(opt, err);
        o.require(code == cli::kExitOk, "run " + std::to_string(k) + " exit " + std::to_string(code) + " " + err.str());
        runs.push_back(read_dir(dir));
    }
    std::filesystem::remove_all(base);
    o.require(!runs[0].empty(), "no files written");
    o.require(runs[0] == runs[1], "outputs differ between runs");
    o.detail = o.pass ? std::to_string(runs[0].size()) + " files byte-identical" : o.detail;
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"identity moment matrix", identity_moments},
        {"shifted-circle Wirtinger inequality and identity", lemma3},
        {"gamma two-method agreement and closed form", gamma_agreement},
        {"bounded point evaluation geometry", bpe_geometry},
        {"Wirtinger and Toeplitz rigidity", rigidity},
        {"dominance witness and comparability", examples_4_7},
        {"multiplication operator norms", mult_op},
        {"zeros bounded by the multiplication operator", zeros_bounded},
        {"Toeplitz eigenvalue sandwich", eigen_sandwich},
        {"determinism of the builtin suite", determinism},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
        ++index;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
