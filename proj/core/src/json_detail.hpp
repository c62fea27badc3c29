#pragma once

// Internal nlohmann-level converters shared by json_io.cpp and cli.cpp.
// Not installed; the public API (niep/json_io.hpp) deals in strings only.

#include <json.hpp>

#include "niep/circulant.hpp"
#include "niep/eig.hpp"
#include "niep/matrix.hpp"
#include "niep/spectra.hpp"

namespace niep::detail {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j, const char* context);

json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const json& j);

json row_to_json(const CirculantRow& r);
CirculantRow row_from_json(const json& j);

json report_to_json(const VerificationReport& r);
json necessary_to_json(const NecessaryReport& r);

json parse_text(const std::string& text);

}  // namespace niep::detail
