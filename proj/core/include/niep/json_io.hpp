#pragma once

#include <string>

#include "niep/circulant.hpp"
#include "niep/eig.hpp"
#include "niep/matrix.hpp"
#include "niep/spectra.hpp"

namespace niep {

// Shared JSON schemas:
//   Spectrum      {"values": [x, ...]}          x = number or [re, im]
//   DenseMatrix   {"rows": r, "cols": c, "entries": [x, ...]}   (row-major)
//   CirculantRow  {"row": [x, ...]}
// Emitted numbers round-trip bit-exactly.

Spectrum parse_spectrum(const std::string& text);
DenseMatrix parse_matrix(const std::string& text);
CirculantRow parse_circulant_row(const std::string& text);

std::string to_json(const Spectrum& s, int indent = -1);
std::string to_json(const DenseMatrix& m, int indent = -1);
std::string to_json(const CirculantRow& r, int indent = -1);
std::string to_json(const VerificationReport& r, int indent = -1);
std::string to_json(const NecessaryReport& r, int indent = -1);

}  // namespace niep
