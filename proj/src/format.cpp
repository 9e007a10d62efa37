#include "torsion/format.hpp"

#include <stdexcept>

namespace torsion {

std::string poly_to_text(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const mpz_class& c = p.coeff(d);
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (d == 0) {
            out += a.get_str();
        } else {
            out += a.get_str();
            out += "*t";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

std::string poly_to_latex(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const mpz_class& c = p.coeff(d);
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        if (d == 0 || a != 1) out += a.get_str();
        if (d >= 1) {
            out += "t";
            if (d > 1) out += "^{" + std::to_string(d) + "}";
        }
    }
    return out;
}

std::vector<std::string> poly_to_decimal_coeffs(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).get_str());
    if (out.empty()) out.push_back("0");
    return out;
}

IntPoly poly_from_decimal_coeffs(const std::vector<std::string>& ascending) {
    std::vector<mpz_class> c;
    c.reserve(ascending.size());
    for (const auto& s : ascending) c.emplace_back(s);
    return IntPoly::from_coeffs(std::move(c));
}

OutputRecord make_output_record(const SigmaResult& result, bool oracle_match, bool recurrence_ok) {
    OutputRecord record;
    record.p = result.params.p;
    record.q = result.params.q;
    record.n = result.params.n;
    record.N = result.params.N;
    record.degree = result.degree;
    record.coefficients = poly_to_decimal_coeffs(result.sigma);
    record.normalization_ok = check_normalization(result);
    record.degree_ok = check_degree(result);
    record.oracle_match = oracle_match;
    record.recurrence_ok = recurrence_ok;
    record.precision_bits_used = result.precision_bits_used;
    return record;
}

nlohmann::ordered_json record_to_json(const OutputRecord& record) {
    nlohmann::ordered_json j;
    j["p"] = record.p;
    j["q"] = record.q;
    j["n"] = record.n;
    j["N"] = record.N;
    j["degree"] = record.degree;
    j["coefficients"] = record.coefficients;
    j["normalization_ok"] = record.normalization_ok;
    j["degree_ok"] = record.degree_ok;
    j["oracle_match"] = record.oracle_match;
    j["recurrence_ok"] = record.recurrence_ok;
    j["precision_bits_used"] = record.precision_bits_used;
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord record;
    record.p = j.at("p").get<long>();
    record.q = j.at("q").get<long>();
    record.n = j.at("n").get<long>();
    record.N = j.at("N").get<long>();
    record.degree = j.at("degree").get<int>();
    record.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    record.normalization_ok = j.at("normalization_ok").get<bool>();
    record.degree_ok = j.at("degree_ok").get<bool>();
    record.oracle_match = j.at("oracle_match").get<bool>();
    record.recurrence_ok = j.at("recurrence_ok").get<bool>();
    record.precision_bits_used = j.at("precision_bits_used").get<long>();
    return record;
}

} // namespace torsion
