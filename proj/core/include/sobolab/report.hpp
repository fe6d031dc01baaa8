#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sobolab/poly_coeffs.hpp"
#include "sobolab/sobolev.hpp"
#include "sobolab/types.hpp"

namespace sobolab {

/// Serializes JSON deterministically: object keys in insertion order, two-space indent,
/// floating-point numbers as %.12e, non-finite numbers as null.
std::string dump_fixed(const nlohmann::ordered_json& j);

/// %.12e
std::string format_real(double x);

/// Coefficient list [[re, im], ...] for a polynomial.
nlohmann::ordered_json poly_json(const PolyCoeffs& p);

/// [[re, im], ...]
nlohmann::ordered_json points_json(const std::vector<cplx>& points);

/// CSV with header "n,value"; failed entries leave the value empty.
std::string sequence_csv(const std::vector<SequenceEntry>& seq);
std::string sequence_csv(const std::vector<int>& n, const std::vector<double>& values);

/// CSV with header "re,im".
std::string points_csv(const std::vector<cplx>& points);

/// {pencil_label, quantity, values[], plateau, max_zero_modulus}. Failed entries are null.
nlohmann::ordered_json sequence_report(const std::string& pencil_label, Quantity quantity,
                                       const std::vector<SequenceEntry>& seq,
                                       const std::vector<cplx>* zeros = nullptr);

} // namespace sobolab
