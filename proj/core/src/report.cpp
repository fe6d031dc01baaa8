#include "sobolab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sobolab {

namespace {

void escape_into(std::string& out, const std::string& s)
{
    out += '"';
    for (const char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(static_cast<unsigned char>(ch)));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    out += '"';
}

bool is_scalar_array(const nlohmann::ordered_json& j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
}

void dump_into(std::string& out, const nlohmann::ordered_json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case nlohmann::ordered_json::value_t::null: out += "null"; break;
    case nlohmann::ordered_json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case nlohmann::ordered_json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
    case nlohmann::ordered_json::value_t::number_unsigned:
        out += std::to_string(j.get<unsigned long long>());
        break;
    case nlohmann::ordered_json::value_t::number_float: {
        const double x = j.get<double>();
        out += std::isfinite(x) ? format_real(x) : "null";
        break;
    }
    case nlohmann::ordered_json::value_t::string: escape_into(out, j.get<std::string>()); break;
    case nlohmann::ordered_json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            break;
        }
        // Arrays of scalars stay on one line.
        if (is_scalar_array(j)) {
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) {
                    out += ", ";
                }
                first = false;
                dump_into(out, e, indent + 1);
            }
            out += ']';
            break;
        }
        out += "[\n";
        bool first = true;
        for (const auto& e : j) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += inner;
            dump_into(out, e, indent + 1);
        }
        out += '\n' + pad + ']';
        break;
    }
    case nlohmann::ordered_json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            break;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += inner;
            escape_into(out, key);
            out += ": ";
            dump_into(out, value, indent + 1);
        }
        out += '\n' + pad + '}';
        break;
    }
    default: out += "null"; break;
    }
}

} // namespace

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

std::string dump_fixed(const nlohmann::ordered_json& j)
{
    std::string out;
    dump_into(out, j, 0);
    out += '\n';
    return out;
}

nlohmann::ordered_json poly_json(const PolyCoeffs& p)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(nlohmann::ordered_json::array({c.real(), c.imag()}));
    }
    return arr;
}

nlohmann::ordered_json points_json(const std::vector<cplx>& points)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& z : points) {
        arr.push_back(nlohmann::ordered_json::array({z.real(), z.imag()}));
    }
    return arr;
}

std::string sequence_csv(const std::vector<SequenceEntry>& seq)
{
    std::string out = "n,value\n";
    for (const auto& e : seq) {
        out += std::to_string(e.n) + ',' + (e.value ? format_real(*e.value) : std::string()) + '\n';
    }
    return out;
}

std::string sequence_csv(const std::vector<int>& n, const std::vector<double>& values)
{
    std::string out = "n,value\n";
    for (std::size_t k = 0; k < std::min(n.size(), values.size()); ++k) {
        out += std::to_string(n[k]) + ',' + format_real(values[k]) + '\n';
    }
    return out;
}

std::string points_csv(const std::vector<cplx>& points)
{
    std::string out = "re,im\n";
    for (const auto& z : points) {
        out += format_real(z.real()) + ',' + format_real(z.imag()) + '\n';
    }
    return out;
}

nlohmann::ordered_json sequence_report(const std::string& pencil_label, Quantity quantity,
                                       const std::vector<SequenceEntry>& seq, const std::vector<cplx>* zeros)
{
    nlohmann::ordered_json j;
    j["pencil_label"] = pencil_label;
    j["quantity"] = to_string(quantity);
    auto values = nlohmann::ordered_json::array();
    for (const auto& e : seq) {
        values.push_back(e.value ? nlohmann::ordered_json(*e.value) : nlohmann::ordered_json(nullptr));
    }
    j["values"] = values;
    j["plateau"] = is_plateau(seq);
    if (zeros != nullptr && !zeros->empty()) {
        double m = 0.0;
        for (const auto& z : *zeros) {
            m = std::max(m, std::abs(z));
        }
        j["max_zero_modulus"] = m;
    } else {
        j["max_zero_modulus"] = nullptr;
    }
    return j;
}

} // namespace sobolab
