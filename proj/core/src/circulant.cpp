#include "niep/circulant.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "niep/errors.hpp"

namespace niep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// w^{p*q} with the exponent reduced mod n before evaluating, which keeps the
// roots on the unit circle accurate for larger n.
Complex root_power(std::size_t p, std::size_t q, std::size_t n, bool conjugate) {
    const std::size_t e = (p * q) % n;
    const double angle = kTwoPi * static_cast<double>(e) / static_cast<double>(n);
    return std::polar(1.0, conjugate ? -angle : angle);
}

}  // namespace

CirculantRow CirculantRow::from_reals(const std::vector<double>& r) {
    CirculantRow row;
    row.row.reserve(r.size());
    for (double x : r) row.row.emplace_back(x, 0.0);
    return row;
}

bool CirculantRow::is_real(double tol) const {
    for (Complex z : row)
        if (std::abs(z.imag()) > tol) return false;
    return true;
}

bool CirculantRow::is_nonnegative(double tol) const {
    for (Complex z : row)
        if (std::abs(z.imag()) > tol || z.real() < -tol) return false;
    return true;
}

DenseMatrix circulant_matrix(const CirculantRow& r) {
    const std::size_t n = r.size();
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = r.row[(j + n - i) % n];
    return m;
}

Spectrum circulant_spectrum(const CirculantRow& r) {
    const std::size_t n = r.size();
    Spectrum s;
    s.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += r.row[j] * root_power(k, j, n, false);
        s.values[k] = acc;
    }
    return s;
}

CirculantRow circulant_from_spectrum(const Spectrum& sigma) {
    const std::size_t n = sigma.size();
    CirculantRow r;
    r.row.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += sigma.values[k] * root_power(j, k, n, true);
        r.row[j] = acc / static_cast<double>(n);
    }
    return r;
}

namespace {

void require_branch(int branch) {
    if (branch != 1 && branch != -1) throw ParseError("branch must be +1 or -1");
}

// The even-middle shift without the t >= 0 gate; the paired construction
// legitimately applies it with negative t.
Spectrum even_middle_shift(const Spectrum& sigma, double t, int branch) {
    const std::size_t n = sigma.size();
    if (n < 2 || n % 2 != 0)
        throw GateError("variant order",
                        "even-middle perturbation needs even order n = 2m+2, got n = " +
                            std::to_string(n));
    Spectrum out = sigma;
    out.values[0] += t;
    out.values[n / 2] += static_cast<double>(branch) * t;
    return out;
}

}  // namespace

Spectrum guo_perturb(const Spectrum& sigma, const GuoParams& p) {
    sigma.validate();
    require_branch(p.branch);
    if (p.t < 0.0)
        throw GateError("t range", "perturbation size must be nonnegative, got " +
                                       std::to_string(p.t));
    if (p.variant == GuoVariant::EvenMiddle) return even_middle_shift(sigma, p.t, p.branch);

    const std::size_t n = sigma.size();
    if (n < 3)
        throw GateError("variant order",
                        "general perturbation needs n >= 3, got n = " + std::to_string(n));
    Spectrum out = sigma;
    const Complex swing = static_cast<double>(p.branch) * p.t * std::polar(1.0, p.theta);
    out.values[0] += 2.0 * p.t;
    out.values[1] += swing;
    out.values[n - 1] += std::conj(swing);
    return out;
}

GuoPairResult guo_pair_compose(const Spectrum& sigma1, const Spectrum& sigma2, double t1,
                               double t2, int branch, const CompositionParams& p) {
    sigma1.validate();
    sigma2.validate();
    require_branch(branch);
    if (sigma1.size() != sigma2.size())
        throw DimensionError("paired spectra must have equal length");
    if (t1 < std::abs(t2))
        throw GateError("t1 >= |t2|", "paired perturbation needs t1 >= |t2|, got t1 = " +
                                          std::to_string(t1) + ", t2 = " + std::to_string(t2));

    GuoPairResult result;
    result.sigma_s = even_middle_shift(sigma1, t1, branch);
    result.sigma_c = even_middle_shift(sigma2, t2, branch);

    const CirculantRow raw_s = circulant_from_spectrum(result.sigma_s);
    const CirculantRow raw_c = circulant_from_spectrum(result.sigma_c);
    const double real_tol =
        std::max(default_tol(result.sigma_s), default_tol(result.sigma_c));
    if (!raw_s.is_real(real_tol) || !raw_c.is_real(real_tol))
        throw GateError("conjugate ordering",
                        "perturbed rows are not real; spectra must be conjugate-closed in "
                        "DFT-index order");

    const std::size_t n = sigma1.size();
    constexpr double kFloor = -1e-12;
    std::vector<double> rs(n), rc(n);
    for (std::size_t j = 0; j < n; ++j) {
        rs[j] = raw_s.row[j].real();
        rc[j] = raw_c.row[j].real();
        if (rs[j] < kFloor)
            throw GateError("perturbed row nonnegativity",
                            "first row of the perturbed S is negative at position " +
                                std::to_string(j + 1));
        if (rs[j] + rc[j] < kFloor)
            throw GateError("perturbed row nonnegativity",
                            "first row of the perturbed S+C is negative at position " +
                                std::to_string(j + 1));
        if (rs[j] - rc[j] < kFloor)
            throw GateError("perturbed row nonnegativity",
                            "first row of the perturbed S-C is negative at position " +
                                std::to_string(j + 1));
        if (rs[j] < 0.0) {
            result.max_clamped = std::max(result.max_clamped, -rs[j]);
            rs[j] = 0.0;
        }
    }

    result.row_s = CirculantRow::from_reals(rs);
    result.row_c = CirculantRow::from_reals(rc);

    // Row-level gates above already establish majorization up to roundoff;
    // compose unchecked and clamp the roundoff negatives in the result.
    DenseMatrix m =
        compose_even(circulant_matrix(result.row_s), circulant_matrix(result.row_c), p, true);
    for (Complex& z : m.entries()) {
        if (z.real() < 0.0) {
            result.max_clamped = std::max(result.max_clamped, -z.real());
            z = Complex{0.0, z.imag()};
        }
    }
    result.matrix = std::move(m);
    return result;
}

}  // namespace niep
