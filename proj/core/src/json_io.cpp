#include "niep/json_io.hpp"

#include <cmath>
#include <string>

#include "json_detail.hpp"
#include "niep/errors.hpp"

namespace niep::detail {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

json complex_to_json(Complex z) {
    // plain number for a clean real value; [re, im] keeps everything else
    // (including a signed-zero imaginary part) bit-exact through round trips
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return json(z.real());
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, const char* context) {
    if (j.is_number()) return Complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex{j[0].get<double>(), j[1].get<double>()};
    throw ParseError(std::string(context) + ": each value must be a number or an [re, im] pair");
}

json spectrum_to_json(const Spectrum& s) {
    json values = json::array();
    for (Complex z : s.values) values.push_back(complex_to_json(z));
    return json{{"values", std::move(values)}};
}

Spectrum spectrum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw ParseError("spectrum: expected an object with a \"values\" array");
    Spectrum s;
    s.values.reserve(j["values"].size());
    for (const json& v : j["values"]) s.values.push_back(complex_from_json(v, "spectrum"));
    s.validate();
    return s;
}

json matrix_to_json(const DenseMatrix& m) {
    json entries = json::array();
    for (const Complex& z : m.entries()) entries.push_back(complex_to_json(z));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

DenseMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix: expected an object with \"rows\", \"cols\" and \"entries\"");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix: \"rows\" and \"cols\" must be nonnegative integers");
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) throw ParseError("matrix: dimensions must be positive");
    if (!j["entries"].is_array() || j["entries"].size() != rows * cols)
        throw ParseError("matrix: \"entries\" must hold rows*cols values (row-major)");
    DenseMatrix m(rows, cols);
    std::size_t k = 0;
    for (const json& v : j["entries"]) m.entries()[k++] = complex_from_json(v, "matrix");
    if (!m.all_finite()) throw ParseError("matrix: entries must be finite");
    return m;
}

json row_to_json(const CirculantRow& r) {
    json values = json::array();
    for (Complex z : r.row) values.push_back(complex_to_json(z));
    return json{{"row", std::move(values)}};
}

CirculantRow row_from_json(const json& j) {
    if (!j.is_object() || !j.contains("row") || !j["row"].is_array())
        throw ParseError("circulant row: expected an object with a \"row\" array");
    CirculantRow r;
    r.row.reserve(j["row"].size());
    for (const json& v : j["row"]) r.row.push_back(complex_from_json(v, "circulant row"));
    if (r.row.empty()) throw ParseError("circulant row: must contain at least one value");
    for (Complex z : r.row)
        if (!is_finite(z)) throw ParseError("circulant row: entries must be finite");
    return r;
}

json report_to_json(const VerificationReport& r) {
    json pairs = json::array();
    for (const MatchPair& p : r.matching)
        pairs.push_back(json::array({p.expected_index, p.computed_index, p.distance}));
    json out{{"passed", r.passed},
             {"max_distance", r.max_distance},
             {"pairs", std::move(pairs)},
             {"expected", spectrum_to_json(r.expected)["values"]},
             {"computed", spectrum_to_json(r.computed)["values"]}};
    if (r.residuals) out["residuals"] = *r.residuals;
    return out;
}

json necessary_to_json(const NecessaryReport& r) {
    json sums = json::array();
    for (const PowerSum& p : r.power_sums)
        sums.push_back(json{{"k", p.k}, {"value", complex_to_json(p.value)}, {"nonneg", p.nonneg}});
    json jll = json::array();
    for (const JllViolation& v : r.jll_violations) jll.push_back(json::array({v.k, v.m}));
    return json{{"perron_in_list", r.perron_in_list},
                {"conjugate_closed", r.conjugate_closed},
                {"power_sums", std::move(sums)},
                {"jll_violations", std::move(jll)},
                {"passed", r.passed()}};
}

}  // namespace niep::detail

namespace niep {

Spectrum parse_spectrum(const std::string& text) {
    return detail::spectrum_from_json(detail::parse_text(text));
}

DenseMatrix parse_matrix(const std::string& text) {
    return detail::matrix_from_json(detail::parse_text(text));
}

CirculantRow parse_circulant_row(const std::string& text) {
    return detail::row_from_json(detail::parse_text(text));
}

std::string to_json(const Spectrum& s, int indent) {
    return detail::spectrum_to_json(s).dump(indent);
}

std::string to_json(const DenseMatrix& m, int indent) {
    return detail::matrix_to_json(m).dump(indent);
}

std::string to_json(const CirculantRow& r, int indent) {
    return detail::row_to_json(r).dump(indent);
}

std::string to_json(const VerificationReport& r, int indent) {
    return detail::report_to_json(r).dump(indent);
}

std::string to_json(const NecessaryReport& r, int indent) {
    return detail::necessary_to_json(r).dump(indent);
}

}  // namespace niep
