#pragma once

#include <cmath>
#include <complex>

namespace niep {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace niep
