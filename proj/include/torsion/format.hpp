#pragma once

#include "torsion/int_poly.hpp"
#include "torsion/torsion_polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace torsion {

// Plain-text rendering, descending degree, with every coefficient printed
// explicitly (including 1) so the output stays trivially parseable:
//   "-4*t^2 + 6*t - 1", "1*t^3 - 5*t^2 + 6*t - 1", "0".
std::string poly_to_text(const IntPoly& p);

// LaTeX rendering, descending degree, unit coefficients omitted:
//   "-4t^{2}+6t-1", "t^{3}-5t^{2}+6t-1".
std::string poly_to_latex(const IntPoly& p);

std::vector<std::string> poly_to_decimal_coeffs(const IntPoly& p);
IntPoly poly_from_decimal_coeffs(const std::vector<std::string>& ascending);

// The machine-readable summary of one computed polynomial. Coefficients are
// decimal strings in ascending degree order because they overflow 64-bit
// integers already at small parameters.
struct OutputRecord {
    long p = 0;
    long q = 0;
    long n = 0;
    long N = 0;
    int degree = 0;
    std::vector<std::string> coefficients;
    bool normalization_ok = false;
    bool degree_ok = false;
    bool oracle_match = false;
    bool recurrence_ok = false;
    long precision_bits_used = 0;
};

OutputRecord make_output_record(const SigmaResult& result, bool oracle_match, bool recurrence_ok);

nlohmann::ordered_json record_to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);

} // namespace torsion
