#include "sobolab/cli/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "sobolab/errors.hpp"
#include "sobolab/numkernel.hpp"
#include "sobolab/report.hpp"

namespace sobolab::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::array kCommandNames = {"moments", "gram",      "opoly",   "zeros",       "multop",
                                      "gamma",   "bpe",       "wirtinger", "dominance", "cond4",
                                      "compare", "eigenlimits", "prop12"};

cplx point_from_json(const nlohmann::json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgument(std::string(what) + " must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed, const char* where)
{
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw InvalidArgument(std::string("unknown key '") + key + "' in " + where);
        }
    }
}

PencilSpec pencil_from_json(const nlohmann::json& j, const char* where)
{
    if (!j.is_object()) {
        throw InvalidArgument(std::string(where) + " must be an object");
    }
    reject_unknown(j, {"M0", "M1"}, where);
    if (!j.contains("M0")) {
        throw InvalidArgument(std::string(where) + " needs M0");
    }
    PencilSpec p{measure_from_json(j.at("M0")), std::nullopt};
    if (j.contains("M1") && !j.at("M1").is_null()) {
        p.m1 = measure_from_json(j.at("M1"));
    }
    return p;
}

int positive_int(const nlohmann::json& j, const char* what)
{
    if (!j.is_number_integer()) {
        throw InvalidArgument(std::string(what) + " must be an integer");
    }
    const auto v = j.get<long long>();
    if (v < 0 || v > 1000000) {
        throw InvalidArgument(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
}

void require(bool ok, const Scenario& s, const char* what)
{
    if (!ok) {
        throw InvalidArgument("command '" + to_string(s.command) + "' requires " + what);
    }
}

void validate(const Scenario& s)
{
    switch (s.command) {
    case Command::moments: require(s.measure.has_value(), s, "measure"); break;
    case Command::gram:
    case Command::opoly:
    case Command::multop:
    case Command::cond4: require(s.pencil.has_value(), s, "pencil"); break;
    case Command::zeros:
        require(s.pencil.has_value(), s, "pencil");
        require(s.degree.has_value() && *s.degree >= 1, s, "degree >= 1");
        break;
    case Command::gamma:
    case Command::bpe:
        require(s.measure.has_value(), s, "measure");
        require(!s.points.empty(), s, "points");
        break;
    case Command::wirtinger:
        require(s.measure.has_value(), s, "measure");
        require(s.c.has_value() && *s.c > 0.0, s, "C > 0");
        break;
    case Command::dominance:
        require(s.pencil.has_value() && s.pencil->m1.has_value(), s, "pencil with M1");
        require(s.c.has_value() && *s.c > 0.0, s, "C > 0");
        break;
    case Command::compare:
        require(s.pencil.has_value(), s, "pencil");
        require(s.other.has_value(), s, "other");
        break;
    case Command::eigenlimits: require(s.weight.has_value(), s, "fourier"); break;
    case Command::prop12:
        require(s.measure.has_value(), s, "measure");
        require(!s.circles.empty(), s, "circles");
        break;
    }
    if (s.n_max && (*s.n_max < 1 || *s.n_max > kMaxSection)) {
        throw InvalidArgument("n_max must be in [1, 64]");
    }
    if (s.degree && *s.degree + 1 > kMaxSection) {
        throw InvalidArgument("degree must be below 64");
    }
}

ojson criterion_entry(const CriterionReport& r, std::vector<Artifact>& artifacts, const std::string& suffix)
{
    artifacts.push_back({suffix + ".csv", sequence_csv(r.n_list, r.values)});
    return to_json(r);
}

ojson run_moments(const Scenario& s, int n, std::vector<Artifact>& artifacts)
{
    const auto m = MomentMatrix::of_measure(*s.measure);
    const Matrix sec = m.section(n);
    const auto eig = herm_eig(sec, m.label());
    double quad_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            quad_dev = std::max(quad_dev, std::abs(sec(i, j) - moment_quadrature(*s.measure, i, j, 4096)));
        }
    }
    artifacts.push_back({"_section.csv", section_csv(sec)});
    ojson r;
    r["label"] = m.label();
    r["n"] = n;
    r["min_eigenvalue"] = eig.values(0);
    r["max_eigenvalue"] = eig.values(n - 1);
    r["max_quadrature_deviation"] = quad_dev;
    return r;
}

ojson run_gram(const SobolevPencil& p, int n, std::vector<Artifact>& artifacts)
{
    const Matrix g = checked_gram_section(p, n);
    const auto eig = herm_eig(g, p.label());
    artifacts.push_back({"_gram.csv", section_csv(g)});
    ojson r;
    r["pencil_label"] = p.label();
    r["n"] = n;
    r["equilibrated_condition"] = equilibrated_condition(g);
    r["min_eigenvalue"] = eig.values(0);
    r["max_eigenvalue"] = eig.values(n - 1);
    return r;
}

ojson run_opoly(const SobolevPencil& p, int n)
{
    const auto ops = orthonormal_polys(p, n);
    const Matrix g = gram_section(p, n);
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vector vi = ops.polys[static_cast<std::size_t>(i)].padded(n);
        for (int j = 0; j < n; ++j) {
            const Vector vj = ops.polys[static_cast<std::size_t>(j)].padded(n);
            const cplx ip = vi.transpose() * g * vj.conjugate();
            defect = std::max(defect, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    auto polys = ojson::array();
    for (const auto& q : ops.polys) {
        polys.push_back(poly_json(q));
    }
    ojson r;
    r["pencil_label"] = p.label();
    r["n"] = n;
    r["orthonormality_defect"] = defect;
    r["polys"] = polys;
    return r;
}

ojson run_zeros(const SobolevPencil& p, int degree, std::vector<Artifact>& artifacts)
{
    const auto zeros = sobolev_zeros(p, degree);
    const double bound = mult_op_norm(p, degree + 1);
    double max_mod = 0.0;
    for (const auto& z : zeros) {
        max_mod = std::max(max_mod, std::abs(z));
    }
    artifacts.push_back({"_zeros.csv", points_csv(zeros)});
    ojson r;
    r["pencil_label"] = p.label();
    r["degree"] = degree;
    r["zeros"] = points_json(zeros);
    r["max_zero_modulus"] = max_mod;
    r["mult_op_norm"] = bound;
    r["within_bound"] = max_mod <= bound + 1e-6;
    return r;
}

ojson run_gamma(const Measure& measure, const std::vector<cplx>& points, int n_max, std::vector<Artifact>& artifacts)
{
    const auto m = MomentMatrix::of_measure(measure);
    auto arr = ojson::array();
    for (std::size_t k = 0; k < points.size(); ++k) {
        std::vector<int> ns;
        std::vector<double> g;
        for (int n = 1; n <= n_max; ++n) {
            ns.push_back(n);
            g.push_back(gamma_index(m, points[k], n));
        }
        ojson e;
        e["point"] = ojson::array({points[k].real(), points[k].imag()});
        e["n_list"] = ns;
        e["gamma"] = g;
        e["gamma_kernel"] = gamma_via_kernel(m, points[k], n_max);
        arr.push_back(e);
        artifacts.push_back({"_gamma_" + std::to_string(k) + ".csv", sequence_csv(ns, g)});
    }
    ojson r;
    r["label"] = m.label();
    r["points"] = arr;
    return r;
}

ojson run_eigenlimits(const TrigWeight& w, int n_max, std::vector<Artifact>& artifacts)
{
    const auto e = eigen_limit_estimate(w, n_max);
    artifacts.push_back({"_smallest.csv", sequence_csv(e.n_list, e.smallest)});
    artifacts.push_back({"_largest.csv", sequence_csv(e.n_list, e.largest)});
    ojson r;
    r["n_list"] = e.n_list;
    r["smallest"] = e.smallest;
    r["largest"] = e.largest;
    r["grid_min"] = e.grid_min;
    r["grid_max"] = e.grid_max;
    r["within_grid_extremes"] = e.lambda() >= e.grid_min - 1e-10 && e.beta() <= e.grid_max + 1e-10;
    return r;
}

} // namespace

std::string to_string(Command c)
{
    return kCommandNames[static_cast<std::size_t>(c)];
}

Command command_from_string(std::string_view s)
{
    for (std::size_t k = 0; k < kCommandNames.size(); ++k) {
        if (s == kCommandNames[k]) {
            return static_cast<Command>(k);
        }
    }
    throw InvalidArgument("unknown command '" + std::string(s) + "'");
}

SobolevPencil PencilSpec::build() const
{
    auto m0m = MomentMatrix::of_measure(m0);
    auto m1m = m1 ? MomentMatrix::of_measure(*m1) : MomentMatrix::zero();
    return SobolevPencil(std::move(m0m), std::move(m1m));
}

Scenario parse_scenario(const nlohmann::json& j)
{
    if (!j.is_object()) {
        throw InvalidArgument("scenario must be a JSON object");
    }
    reject_unknown(j,
                   {"name", "command", "measure", "pencil", "other", "n_max", "points", "C", "degree", "center",
                    "fourier", "circles"},
                   "scenario");
    if (!j.contains("name") || !j.at("name").is_string() || j.at("name").get<std::string>().empty()) {
        throw InvalidArgument("scenario needs a non-empty string 'name'");
    }
    if (!j.contains("command") || !j.at("command").is_string()) {
        throw InvalidArgument("scenario needs a string 'command'");
    }
    Scenario s;
    s.name = j.at("name").get<std::string>();
    if (s.name.find_first_of("/\\") != std::string::npos || s.name == "." || s.name == "..") {
        throw InvalidArgument("scenario name must be a plain file name");
    }
    s.command = command_from_string(j.at("command").get<std::string>());
    if (j.contains("measure")) {
        s.measure = measure_from_json(j.at("measure"));
    }
    if (j.contains("pencil")) {
        s.pencil = pencil_from_json(j.at("pencil"), "pencil");
    }
    if (j.contains("other")) {
        s.other = pencil_from_json(j.at("other"), "other");
    }
    if (j.contains("n_max")) {
        s.n_max = positive_int(j.at("n_max"), "n_max");
    }
    if (j.contains("points")) {
        if (!j.at("points").is_array()) {
            throw InvalidArgument("points must be a list");
        }
        for (const auto& p : j.at("points")) {
            s.points.push_back(point_from_json(p, "point"));
        }
    }
    if (j.contains("C")) {
        if (!j.at("C").is_number()) {
            throw InvalidArgument("C must be a number");
        }
        s.c = j.at("C").get<double>();
    }
    if (j.contains("degree")) {
        s.degree = positive_int(j.at("degree"), "degree");
    }
    if (j.contains("center")) {
        s.center = point_from_json(j.at("center"), "center");
    }
    if (j.contains("fourier")) {
        s.weight = trig_weight_from_json(j.at("fourier"));
    }
    if (j.contains("circles")) {
        if (!j.at("circles").is_array()) {
            throw InvalidArgument("circles must be a list");
        }
        for (const auto& c : j.at("circles")) {
            if (!c.is_object()) {
                throw InvalidArgument("circle entry must be an object");
            }
            reject_unknown(c, {"center", "radius", "fourier"}, "circle");
            if (!c.contains("center") || !c.contains("radius") || !c.at("radius").is_number()) {
                throw InvalidArgument("circle entry needs center and radius");
            }
            WeightedCircleSpec w;
            w.center = point_from_json(c.at("center"), "center");
            w.radius = c.at("radius").get<double>();
            if (!(w.radius > 0.0)) {
                throw InvalidArgument("circle radius must be positive");
            }
            w.weight = c.contains("fourier") ? trig_weight_from_json(c.at("fourier")) : TrigWeight::constant(1.0);
            s.circles.push_back(std::move(w));
        }
    }
    validate(s);
    return s;
}

RunResult run_scenario(const Scenario& s, std::optional<int> n_max_override, std::uint64_t seed)
{
    const int n = n_max_override.value_or(s.n_max.value_or(kDefaultNMax));
    if (n < 1 || n > kMaxSection) {
        throw InvalidArgument("n_max must be in [1, 64]");
    }
    RunResult out;
    ojson result;
    switch (s.command) {
    case Command::moments: result = run_moments(s, n, out.artifacts); break;
    case Command::gram: result = run_gram(s.pencil->build(), n, out.artifacts); break;
    case Command::opoly: result = run_opoly(s.pencil->build(), n); break;
    case Command::zeros: result = run_zeros(s.pencil->build(), *s.degree, out.artifacts); break;
    case Command::multop: {
        const auto p = s.pencil->build();
        const auto seq = norm_sequence(p, n, Quantity::mult_op);
        out.artifacts.push_back({"_multop.csv", sequence_csv(seq)});
        result = sequence_report(p.label(), Quantity::mult_op, seq);
        break;
    }
    case Command::gamma: result = run_gamma(*s.measure, s.points, n, out.artifacts); break;
    case Command::bpe: {
        const auto m = MomentMatrix::of_measure(*s.measure);
        result = ojson::array();
        for (std::size_t k = 0; k < s.points.size(); ++k) {
            result.push_back(criterion_entry(bpe_decide(m, s.points[k], n), out.artifacts,
                                             "_bpe_" + std::to_string(k)));
        }
        break;
    }
    case Command::wirtinger: {
        const Measure target = s.center ? translated(*s.measure, *s.center) : *s.measure;
        result = to_json(wirtinger_psd_check(MomentMatrix::of_measure(target), *s.c, n));
        break;
    }
    case Command::dominance:
        result = to_json(dominance_check(MomentMatrix::of_measure(s.pencil->m0),
                                         MomentMatrix::of_measure(*s.pencil->m1), *s.c, n));
        break;
    case Command::cond4: result = criterion_entry(cond4_bound(s.pencil->build(), n), out.artifacts, "_cond4"); break;
    case Command::compare:
        result = criterion_entry(comparability_bounds(s.pencil->build(), s.other->build(), n), out.artifacts,
                                 "_compare");
        break;
    case Command::eigenlimits: result = run_eigenlimits(*s.weight, n, out.artifacts); break;
    case Command::prop12:
        result = criterion_entry(prop12_report(*s.measure, s.circles, n), out.artifacts, "_prop12");
        break;
    }
    out.report["scenario"] = s.name;
    out.report["command"] = to_string(s.command);
    out.report["n_max"] = n;
    out.report["seed"] = seed;
    out.report["result"] = result;
    return out;
}

} // namespace sobolab::cli
