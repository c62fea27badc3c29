#include "niep/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "niep/assignment.hpp"
#include "niep/errors.hpp"

namespace niep {

Spectrum Spectrum::from_reals(const std::vector<double>& v) {
    Spectrum s;
    s.values.reserve(v.size());
    for (double x : v) s.values.emplace_back(x, 0.0);
    return s;
}

Complex Spectrum::sum() const {
    Complex acc = 0.0;
    for (Complex z : values) acc += z;
    return acc;
}

double Spectrum::spectral_radius() const {
    double r = 0.0;
    for (Complex z : values) r = std::max(r, std::abs(z));
    return r;
}

bool Spectrum::all_finite() const {
    return std::all_of(values.begin(), values.end(), [](Complex z) { return is_finite(z); });
}

bool Spectrum::is_real(double tol) const {
    return std::all_of(values.begin(), values.end(),
                       [tol](Complex z) { return std::abs(z.imag()) <= tol; });
}

Spectrum Spectrum::reversed() const {
    Spectrum s = *this;
    std::reverse(s.values.begin(), s.values.end());
    return s;
}

void Spectrum::validate() const {
    if (values.empty()) throw ParseError("spectrum must contain at least one value");
    if (!all_finite()) throw ParseError("spectrum contains a non-finite value");
}

double default_tol(const Spectrum& sigma) {
    return 1e-9 * std::max(1.0, sigma.spectral_radius());
}

double default_tol(const DenseMatrix& a) {
    return 1e-9 * std::max(1.0, a.frobenius_norm());
}

bool NecessaryReport::passed() const {
    if (!perron_in_list || !conjugate_closed || !jll_violations.empty()) return false;
    return std::all_of(power_sums.begin(), power_sums.end(),
                       [](const PowerSum& p) { return p.nonneg; });
}

std::string NecessaryReport::first_failure() const {
    if (!perron_in_list) return "Perron eigenvalue not in list";
    if (!conjugate_closed) return "list not closed under conjugation";
    for (const PowerSum& p : power_sums)
        if (!p.nonneg) return "power sum s_" + std::to_string(p.k) + " negative";
    if (!jll_violations.empty())
        return "JLL inequality violated at (k=" + std::to_string(jll_violations.front().k) +
               ", m=" + std::to_string(jll_violations.front().m) + ")";
    return "";
}

bool is_conjugate_closed(const Spectrum& sigma, double tol) {
    const std::size_t n = sigma.size();
    if (n == 0) return true;
    std::vector<double> cost(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[i * n + j] = std::abs(sigma.values[i] - std::conj(sigma.values[j]));
    const auto match = min_cost_assignment(cost, n);
    for (std::size_t i = 0; i < n; ++i)
        if (cost[i * n + match[i]] > tol) return false;
    return true;
}

namespace {

// s_k for k = 1..kmax by iterated multiplication (exact on small integers,
// unlike pow()).
std::vector<Complex> power_sums_upto(const Spectrum& sigma, int kmax) {
    std::vector<Complex> s(static_cast<std::size_t>(kmax) + 1, Complex{});
    std::vector<Complex> pw(sigma.size(), Complex{1.0});
    for (int k = 1; k <= kmax; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            pw[i] *= sigma.values[i];
            acc += pw[i];
        }
        s[static_cast<std::size_t>(k)] = acc;
    }
    return s;
}

double int_pow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

NecessaryReport check_necessary(const Spectrum& sigma, int K, int M, double tol) {
    if (K < 1) throw ParseError("power-sum count K must be >= 1");
    if (M < 1) throw ParseError("JLL depth M must be >= 1");
    sigma.validate();

    NecessaryReport report;
    const double radius = sigma.spectral_radius();
    for (Complex z : sigma.values) {
        if (std::abs(z.imag()) <= tol && z.real() >= -tol && z.real() >= radius - tol) {
            report.perron_in_list = true;
            break;
        }
    }
    report.conjugate_closed = is_conjugate_closed(sigma, tol);

    const auto s = power_sums_upto(sigma, K * M);
    report.power_sums.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        const Complex v = s[static_cast<std::size_t>(k)];
        const bool ok = std::abs(v.imag()) <= tol && v.real() >= -tol;
        report.power_sums.push_back({k, v, ok});
    }

    const double n = static_cast<double>(sigma.size());
    for (int k = 1; k <= K; ++k)
        for (int m = 1; m <= M; ++m) {
            const double lhs = int_pow(s[static_cast<std::size_t>(k)].real(), m);
            const double rhs = int_pow(n, m - 1) * s[static_cast<std::size_t>(k * m)].real();
            if (lhs > rhs + tol) report.jll_violations.push_back({k, m});
        }
    return report;
}

bool is_suleimanova(const Spectrum& sigma, double tol) {
    if (sigma.size() == 0) return false;
    if (!sigma.is_real(tol)) return false;
    std::vector<double> v;
    v.reserve(sigma.size());
    for (Complex z : sigma.values) v.push_back(z.real());
    std::sort(v.begin(), v.end(), std::greater<>());
    if (!(v.front() > 0.0)) return false;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > tol) return false;
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum >= -tol;
}

}  // namespace niep
