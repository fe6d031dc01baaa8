#include "sobolab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "sobolab/binomial.hpp"
#include "sobolab/errors.hpp"

namespace sobolab {

namespace {

cplx ipow(cplx z, int p)
{
    cplx r = 1.0;
    for (int k = 0; k < p; ++k) {
        r *= z;
    }
    return r;
}

double ipow(double x, int p)
{
    double r = 1.0;
    for (int k = 0; k < p; ++k) {
        r *= x;
    }
    return r;
}

template<class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_radius(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("circle radius must be positive and finite");
    }
}

cplx circle_moment(const CircleLebesgue& c, int i, int j)
{
    if (c.center == cplx{}) {
        return i == j ? cplx{ipow(c.radius, 2 * i)} : cplx{};
    }
    const cplx a = c.center;
    const cplx abar = std::conj(a);
    const double r2 = c.radius * c.radius;
    cplx sum{};
    for (int k = 0; k <= std::min(i, j); ++k) {
        sum += binomial(i, k) * binomial(j, k) * ipow(a, i - k) * ipow(abar, j - k) * ipow(r2, k);
    }
    return sum;
}

cplx weighted_circle_moment(const WeightedCircle& c, int i, int j)
{
    const int d = c.weight.degree();
    if (c.center == cplx{}) {
        const int shift = j - i;
        if (std::abs(shift) > d) {
            return {};
        }
        return ipow(c.radius, i + j) * c.weight.coeff(shift);
    }
    const cplx a = c.center;
    const cplx abar = std::conj(a);
    cplx sum{};
    for (int k = 0; k <= i; ++k) {
        const cplx left = binomial(i, k) * ipow(a, i - k) * ipow(c.radius, k);
        for (int l = std::max(0, k - d); l <= std::min(j, k + d); ++l) {
            sum += left * binomial(j, l) * ipow(abar, j - l) * ipow(c.radius, l) * c.weight.coeff(l - k);
        }
    }
    return sum;
}

cplx atomic_moment(const Atomic& at, int i, int j)
{
    cplx sum{};
    for (const auto& atom : at.atoms) {
        sum += atom.mass * ipow(atom.point, i) * ipow(std::conj(atom.point), j);
    }
    return sum;
}

cplx component_moment(const MeasureComponent& c, int i, int j)
{
    return std::visit(overloaded{
                          [&](const CircleLebesgue& x) { return circle_moment(x, i, j); },
                          [&](const WeightedCircle& x) { return weighted_circle_moment(x, i, j); },
                          [&](const Atomic& x) { return atomic_moment(x, i, j); },
                      },
                      c);
}

cplx circle_quadrature(cplx center, double radius, const TrigWeight* weight, int i, int j, int grid_points)
{
    cplx sum{};
    for (int t = 0; t < grid_points; ++t) {
        const double theta = 2.0 * std::numbers::pi * t / grid_points;
        const cplx z = center + std::polar(radius, theta);
        const double w = weight != nullptr ? weight->value(theta) : 1.0;
        sum += w * ipow(z, i) * ipow(std::conj(z), j);
    }
    return sum / static_cast<double>(grid_points);
}

cplx json_complex(const nlohmann::json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgument(std::string(what) + " must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed)
{
    if (!j.is_object()) {
        throw InvalidArgument("measure must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
            throw InvalidArgument("unknown key in measure: " + key);
        }
    }
    for (const char* a : allowed) {
        if (!j.contains(a)) {
            throw InvalidArgument(std::string("measure is missing key: ") + a);
        }
    }
}

nlohmann::ordered_json complex_json(cplx z)
{
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

nlohmann::ordered_json weight_json(const TrigWeight& w)
{
    auto arr = nlohmann::ordered_json::array();
    for (int k = -w.degree(); k <= w.degree(); ++k) {
        const cplx c = w.coeff(k);
        if (c != cplx{}) {
            arr.push_back(nlohmann::ordered_json::array({k, c.real(), c.imag()}));
        }
    }
    return arr;
}

nlohmann::ordered_json component_json(const MeasureComponent& c)
{
    return std::visit(overloaded{
                          [](const CircleLebesgue& x) {
                              nlohmann::ordered_json j;
                              j["kind"] = "circle";
                              j["center"] = complex_json(x.center);
                              j["radius"] = x.radius;
                              return j;
                          },
                          [](const WeightedCircle& x) {
                              nlohmann::ordered_json j;
                              j["kind"] = "weighted_circle";
                              j["center"] = complex_json(x.center);
                              j["radius"] = x.radius;
                              j["fourier"] = weight_json(x.weight);
                              return j;
                          },
                          [](const Atomic& x) {
                              nlohmann::ordered_json j;
                              j["kind"] = "atomic";
                              auto atoms = nlohmann::ordered_json::array();
                              for (const auto& a : x.atoms) {
                                  atoms.push_back(
                                      nlohmann::ordered_json::array({a.point.real(), a.point.imag(), a.mass}));
                              }
                              j["atoms"] = atoms;
                              return j;
                          },
                      },
                      c);
}

} // namespace

// --- TrigWeight ---

TrigWeight TrigWeight::from_coefficients(const std::vector<std::pair<int, cplx>>& coeffs)
{
    TrigWeight w;
    std::set<int> seen;
    for (const auto& [k, c] : coeffs) {
        if (!seen.insert(k).second) {
            throw InvalidArgument("duplicate Fourier index " + std::to_string(k));
        }
    }
    for (const auto& [k, c] : coeffs) {
        const int key = std::abs(k);
        const cplx canonical = k >= 0 ? c : std::conj(c);
        if (k == 0 && std::abs(c.imag()) > kGridTolerance) {
            throw InvalidArgument("weight mean coefficient must be real");
        }
        auto it = w.coeffs_.find(key);
        if (it != w.coeffs_.end()) {
            if (std::abs(it->second - canonical) > kGridTolerance * (1.0 + std::abs(canonical))) {
                throw InvalidArgument("weight is not real-valued: coefficient " + std::to_string(-key) +
                                      " is not the conjugate of coefficient " + std::to_string(key));
            }
            continue;
        }
        if (canonical != cplx{}) {
            w.coeffs_[key] = k == 0 ? cplx{c.real(), 0.0} : canonical;
        }
    }
    if (w.grid_min() < -kGridTolerance) {
        throw InvalidArgument("weight is negative somewhere on the circle");
    }
    if (w.grid_max() <= 0.0) {
        throw InvalidArgument("weight vanishes identically");
    }
    return w;
}

TrigWeight TrigWeight::constant(double c)
{
    return from_coefficients({{0, c}});
}

cplx TrigWeight::coeff(int k) const
{
    auto it = coeffs_.find(std::abs(k));
    if (it == coeffs_.end()) {
        return {};
    }
    return k >= 0 ? it->second : std::conj(it->second);
}

int TrigWeight::degree() const noexcept
{
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

double TrigWeight::value(double theta) const
{
    double v = 0.0;
    for (const auto& [k, c] : coeffs_) {
        if (k == 0) {
            v += c.real();
        } else {
            v += 2.0 * (c * std::polar(1.0, k * theta)).real();
        }
    }
    return v;
}

double TrigWeight::grid_min() const
{
    double m = value(0.0);
    for (int t = 1; t < kGridPoints; ++t) {
        m = std::min(m, value(2.0 * std::numbers::pi * t / kGridPoints));
    }
    return m;
}

double TrigWeight::grid_max() const
{
    double m = value(0.0);
    for (int t = 1; t < kGridPoints; ++t) {
        m = std::max(m, value(2.0 * std::numbers::pi * t / kGridPoints));
    }
    return m;
}

// --- Measure ---

Measure Measure::circle(cplx center, double radius)
{
    check_radius(radius);
    Measure m;
    m.terms_.emplace_back(1.0, CircleLebesgue{center, radius});
    return m;
}

Measure Measure::weighted_circle(cplx center, double radius, TrigWeight weight)
{
    check_radius(radius);
    Measure m;
    m.terms_.emplace_back(1.0, WeightedCircle{center, radius, std::move(weight)});
    return m;
}

Measure Measure::atomic(std::vector<Atom> atoms)
{
    if (atoms.empty()) {
        throw InvalidArgument("atomic measure needs at least one atom");
    }
    for (const auto& a : atoms) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
            throw InvalidArgument("atom masses must be positive");
        }
    }
    Measure m;
    m.terms_.emplace_back(1.0, Atomic{std::move(atoms)});
    return m;
}

Measure Measure::sum(const std::vector<std::pair<double, Measure>>& terms)
{
    if (terms.empty()) {
        throw InvalidArgument("sum measure needs at least one term");
    }
    Measure m;
    m.is_sum_ = true;
    for (const auto& [scale, inner] : terms) {
        if (!(scale > 0.0) || !std::isfinite(scale)) {
            throw InvalidArgument("sum scales must be positive");
        }
        for (const auto& [s, component] : inner.terms_) {
            m.terms_.emplace_back(scale * s, component);
        }
    }
    return m;
}

bool Measure::infinite_support() const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return !std::holds_alternative<Atomic>(t.second); });
}

cplx moment(const Measure& m, int i, int j)
{
    if (i < 0 || j < 0) {
        throw InvalidArgument("moment indices must be nonnegative");
    }
    // Evaluate on the canonical side i <= j so that c_ji = conj(c_ij) holds bit for bit.
    const bool swap = i > j;
    const int lo = swap ? j : i;
    const int hi = swap ? i : j;
    cplx sum{};
    for (const auto& [scale, component] : m.terms()) {
        sum += scale * component_moment(component, lo, hi);
    }
    if (lo == hi) {
        return {sum.real(), 0.0};
    }
    return swap ? std::conj(sum) : sum;
}

cplx moment_quadrature(const Measure& m, int i, int j, int grid_points)
{
    if (i < 0 || j < 0) {
        throw InvalidArgument("moment indices must be nonnegative");
    }
    cplx sum{};
    for (const auto& [scale, component] : m.terms()) {
        const cplx part = std::visit(overloaded{
                                         [&](const CircleLebesgue& x) {
                                             if (grid_points < 256) {
                                                 throw InvalidArgument("quadrature needs at least 256 points");
                                             }
                                             return circle_quadrature(x.center, x.radius, nullptr, i, j,
                                                                      grid_points);
                                         },
                                         [&](const WeightedCircle& x) {
                                             if (grid_points < 256) {
                                                 throw InvalidArgument("quadrature needs at least 256 points");
                                             }
                                             return circle_quadrature(x.center, x.radius, &x.weight, i, j,
                                                                      grid_points);
                                         },
                                         [&](const Atomic& x) { return atomic_moment(x, i, j); },
                                     },
                                     component);
        sum += scale * part;
    }
    return sum;
}

Measure translated(const Measure& m, cplx shift)
{
    std::vector<std::pair<double, Measure>> parts;
    for (const auto& [scale, component] : m.terms()) {
        Measure moved = std::visit(overloaded{
                                       [&](const CircleLebesgue& x) { return Measure::circle(x.center - shift, x.radius); },
                                       [&](const WeightedCircle& x) {
                                           return Measure::weighted_circle(x.center - shift, x.radius, x.weight);
                                       },
                                       [&](const Atomic& x) {
                                           auto atoms = x.atoms;
                                           for (auto& a : atoms) {
                                               a.point -= shift;
                                           }
                                           return Measure::atomic(std::move(atoms));
                                       },
                                   },
                                   component);
        if (!m.is_sum()) {
            return moved;
        }
        parts.emplace_back(scale, std::move(moved));
    }
    return Measure::sum(parts);
}

double support_hull_radius(const Measure& m)
{
    double r = 0.0;
    for (const auto& [scale, component] : m.terms()) {
        std::visit(overloaded{
                       [&](const CircleLebesgue& x) { r = std::max(r, std::abs(x.center) + x.radius); },
                       [&](const WeightedCircle& x) { r = std::max(r, std::abs(x.center) + x.radius); },
                       [&](const Atomic& x) {
                           for (const auto& a : x.atoms) {
                               r = std::max(r, std::abs(a.point));
                           }
                       },
                   },
                   component);
    }
    return r;
}

// --- JSON ---

TrigWeight trig_weight_from_json(const nlohmann::json& fourier)
{
    if (!fourier.is_array() || fourier.empty()) {
        throw InvalidArgument("fourier must be a nonempty array of [k, re, im]");
    }
    std::vector<std::pair<int, cplx>> coeffs;
    for (const auto& entry : fourier) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number() ||
            !entry[2].is_number()) {
            throw InvalidArgument("fourier entries must be [k, re, im] with integer k");
        }
        coeffs.emplace_back(entry[0].get<int>(), cplx{entry[1].get<double>(), entry[2].get<double>()});
    }
    return TrigWeight::from_coefficients(coeffs);
}

Measure measure_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw InvalidArgument("measure must be an object with a string \"kind\"");
    }
    const auto kind = j["kind"].get<std::string>();
    auto radius_of = [](const nlohmann::json& r) {
        if (!r.is_number()) {
            throw InvalidArgument("radius must be a number");
        }
        return r.get<double>();
    };
    if (kind == "circle") {
        require_keys(j, {"kind", "center", "radius"});
        return Measure::circle(json_complex(j["center"], "center"), radius_of(j["radius"]));
    }
    if (kind == "weighted_circle") {
        require_keys(j, {"kind", "center", "radius", "fourier"});
        return Measure::weighted_circle(json_complex(j["center"], "center"), radius_of(j["radius"]),
                                        trig_weight_from_json(j["fourier"]));
    }
    if (kind == "atomic") {
        require_keys(j, {"kind", "atoms"});
        const auto& atoms = j["atoms"];
        if (!atoms.is_array()) {
            throw InvalidArgument("atoms must be an array of [re, im, mass]");
        }
        std::vector<Atom> out;
        for (const auto& a : atoms) {
            if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() || !a[2].is_number()) {
                throw InvalidArgument("atoms must be [re, im, mass]");
            }
            out.push_back({cplx{a[0].get<double>(), a[1].get<double>()}, a[2].get<double>()});
        }
        return Measure::atomic(std::move(out));
    }
    if (kind == "sum") {
        require_keys(j, {"kind", "terms"});
        const auto& terms = j["terms"];
        if (!terms.is_array()) {
            throw InvalidArgument("terms must be an array of [scale, measure]");
        }
        std::vector<std::pair<double, Measure>> out;
        for (const auto& t : terms) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_number()) {
                throw InvalidArgument("terms must be [scale, measure]");
            }
            out.emplace_back(t[0].get<double>(), measure_from_json(t[1]));
        }
        return Measure::sum(out);
    }
    throw InvalidArgument("unknown measure kind: " + kind);
}

nlohmann::ordered_json measure_to_json(const Measure& m)
{
    if (!m.is_sum()) {
        return component_json(m.terms().front().second);
    }
    nlohmann::ordered_json j;
    j["kind"] = "sum";
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [scale, component] : m.terms()) {
        terms.push_back(nlohmann::ordered_json::array({scale, component_json(component)}));
    }
    j["terms"] = terms;
    return j;
}

std::string measure_label(const Measure& m)
{
    return measure_to_json(m).dump();
}

} // namespace sobolab
