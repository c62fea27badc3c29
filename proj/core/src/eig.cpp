#include "niep/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "niep/assignment.hpp"
#include "niep/errors.hpp"

namespace niep {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Unitary similarity to upper Hessenberg form with complex Householder
// reflectors; only the Hessenberg part is kept.
void hessenberg_reduce(DenseMatrix& H) {
    const std::size_t n = H.rows();
    if (n < 3) return;
    std::vector<Complex> v;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            scale += std::abs(H(i, k).real()) + std::abs(H(i, k).imag());
        if (scale == 0.0) continue;

        v.assign(n - k - 1, Complex{});
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i - k - 1] = H(i, k) / scale;
            norm2 += std::norm(v[i - k - 1]);
        }
        const double len = std::sqrt(norm2);
        const Complex x0 = v[0];
        const Complex s = (std::abs(x0) == 0.0) ? Complex{len} : (x0 / std::abs(x0)) * len;
        v[0] += s;
        double vnorm2 = 0.0;
        for (const Complex& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // rows k+1.. : H <- (I - beta v v^H) H
        for (std::size_t c = k + 1; c < n; ++c) {
            Complex w = 0.0;
            for (std::size_t r = k + 1; r < n; ++r) w += std::conj(v[r - k - 1]) * H(r, c);
            w *= beta;
            for (std::size_t r = k + 1; r < n; ++r) H(r, c) -= v[r - k - 1] * w;
        }
        // columns k+1.. : H <- H (I - beta v v^H)
        for (std::size_t r = 0; r < n; ++r) {
            Complex w = 0.0;
            for (std::size_t c = k + 1; c < n; ++c) w += H(r, c) * v[c - k - 1];
            w *= beta;
            for (std::size_t c = k + 1; c < n; ++c) H(r, c) -= w * std::conj(v[c - k - 1]);
        }
        H(k + 1, k) = -s * scale;
        for (std::size_t i = k + 2; i < n; ++i) H(i, k) = 0.0;
    }
}

// Both roots of the 2x2 block [[a, b], [c, d]]. The discriminant is formed
// as ((a-d)/2)^2 + bc, which stays accurate for near-double eigenvalues
// where (a+d)^2 - 4 det would cancel.
std::pair<Complex, Complex> eig2(Complex a, Complex b, Complex c, Complex d) {
    const Complex mid = (a + d) / 2.0;
    const Complex half_gap = (a - d) / 2.0;
    const Complex disc = std::sqrt(half_gap * half_gap + b * c);
    const Complex r1 = (std::norm(mid + disc) >= std::norm(mid - disc)) ? mid + disc : mid - disc;
    if (r1 == Complex{}) return {mid, mid};
    return {r1, (a * d - b * c) / r1};
}

Complex wilkinson_shift(const DenseMatrix& H, std::size_t hi) {
    const auto [r1, r2] = eig2(H(hi - 1, hi - 1), H(hi - 1, hi), H(hi, hi - 1), H(hi, hi));
    return (std::abs(r1 - H(hi, hi)) <= std::abs(r2 - H(hi, hi))) ? r1 : r2;
}

// One explicit shifted QR sweep on the active window [l, hi] via Givens
// rotations; the window stays Hessenberg.
void qr_sweep(DenseMatrix& H, std::size_t l, std::size_t hi, Complex shift) {
    for (std::size_t k = l; k <= hi; ++k) H(k, k) -= shift;

    const std::size_t m = hi - l;
    std::vector<double> cs(m);
    std::vector<Complex> sn(m);
    for (std::size_t k = l; k < hi; ++k) {
        const Complex f = H(k, k);
        const Complex g = H(k + 1, k);
        const double af = std::abs(f);
        const double ag = std::abs(g);
        const double r = std::hypot(af, ag);
        double c;
        Complex s;
        if (r == 0.0) {
            c = 1.0;
            s = 0.0;
        } else if (af == 0.0) {
            c = 0.0;
            s = std::conj(g) / ag;
        } else {
            c = af / r;
            s = (f / af) * std::conj(g) / r;
        }
        cs[k - l] = c;
        sn[k - l] = s;
        for (std::size_t col = k; col <= hi; ++col) {
            const Complex t1 = H(k, col);
            const Complex t2 = H(k + 1, col);
            H(k, col) = c * t1 + s * t2;
            H(k + 1, col) = -std::conj(s) * t1 + c * t2;
        }
    }
    for (std::size_t k = l; k < hi; ++k) {
        const double c = cs[k - l];
        const Complex s = sn[k - l];
        const std::size_t rmax = std::min(k + 1, hi);
        for (std::size_t row = l; row <= rmax; ++row) {
            const Complex t1 = H(row, k);
            const Complex t2 = H(row, k + 1);
            H(row, k) = c * t1 + std::conj(s) * t2;
            H(row, k + 1) = -s * t1 + c * t2;
        }
    }

    for (std::size_t k = l; k <= hi; ++k) H(k, k) += shift;
}

std::vector<Complex> hessenberg_eigenvalues(DenseMatrix& H) {
    const std::size_t n = H.rows();
    std::vector<Complex> eigs;
    eigs.reserve(n);
    if (n == 0) return eigs;

    std::size_t hi = n - 1;
    int iter = 0;
    constexpr int kMaxIter = 40;
    while (true) {
        std::size_t l = hi;
        while (l > 0) {
            const double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
            if (std::abs(H(l, l - 1)) <= kEps * s) {
                H(l, l - 1) = 0.0;
                break;
            }
            --l;
        }

        if (l == hi) {
            eigs.push_back(H(hi, hi));
            iter = 0;
            if (hi == 0) break;
            --hi;
            continue;
        }
        if (l + 1 == hi) {
            const auto [r1, r2] = eig2(H(l, l), H(l, hi), H(hi, l), H(hi, hi));
            eigs.push_back(r1);
            eigs.push_back(r2);
            iter = 0;
            if (hi == 1) break;
            hi -= 2;
            continue;
        }

        if (iter >= kMaxIter)
            throw ConvergenceError("eigenvalue iteration exceeded its budget at block size " +
                                       std::to_string(hi - l + 1),
                                   eigs);
        Complex shift;
        if (iter > 0 && iter % 10 == 0) {
            // stagnation: kick with an exceptional shift
            shift = H(hi, hi) + 0.75 * std::abs(H(hi, hi - 1));
        } else {
            shift = wilkinson_shift(H, hi);
        }
        ++iter;
        qr_sweep(H, l, hi, shift);
    }
    return eigs;
}

double vec_norm(const std::vector<Complex>& v) {
    double sum = 0.0;
    for (const Complex& z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

}  // namespace

Spectrum eigenvalues(const DenseMatrix& A) {
    if (!A.square()) throw DimensionError("eigenvalues need a square matrix");
    if (!A.all_finite()) throw ParseError("matrix has non-finite entries");
    DenseMatrix H = A;
    hessenberg_reduce(H);
    return Spectrum(hessenberg_eigenvalues(H));
}

std::vector<Complex> charpoly_oracle(const DenseMatrix& A) {
    if (!A.square()) throw DimensionError("characteristic polynomial needs a square matrix");
    const std::size_t n = A.rows();
    if (n > 12)
        throw DimensionError("trace-recurrence oracle is limited to n <= 12, got n = " +
                             std::to_string(n));
    std::vector<Complex> coeffs(n + 1);
    coeffs[0] = 1.0;
    if (n == 0) return coeffs;

    DenseMatrix M = A;
    Complex c = -M.trace();
    coeffs[1] = c;
    for (std::size_t k = 2; k <= n; ++k) {
        DenseMatrix T = M;
        for (std::size_t i = 0; i < n; ++i) T(i, i) += c;
        M = A * T;
        c = -M.trace() / static_cast<double>(k);
        coeffs[k] = c;
    }
    return coeffs;
}

Complex polyval(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc = 0.0;
    for (const Complex& c : coeffs) acc = acc * z + c;
    return acc;
}

VerificationReport spectra_match(const Spectrum& expected, const Spectrum& computed, double tol) {
    if (expected.size() != computed.size())
        throw DimensionError("spectrum length mismatch: " + std::to_string(expected.size()) +
                             " vs " + std::to_string(computed.size()));
    VerificationReport report;
    report.expected = expected;
    report.computed = computed;
    const std::size_t n = expected.size();
    if (n == 0) {
        report.passed = true;
        return report;
    }
    std::vector<double> cost(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[i * n + j] = std::abs(expected.values[i] - computed.values[j]);
    const auto match = min_cost_assignment(cost, n);
    report.matching.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = cost[i * n + match[i]];
        report.matching.push_back({i, match[i], d});
        report.max_distance = std::max(report.max_distance, d);
    }
    report.passed = report.max_distance <= tol;
    return report;
}

namespace {

double lifted_residual(const DenseMatrix& A, Complex value, const std::vector<Complex>& lifted) {
    const double norm = vec_norm(lifted);
    if (norm == 0.0) return std::numeric_limits<double>::infinity();
    const std::vector<Complex> av = A * lifted;
    double sum = 0.0;
    for (std::size_t i = 0; i < lifted.size(); ++i) sum += std::norm(av[i] - value * lifted[i]);
    return std::sqrt(sum) / norm;
}

}  // namespace

VerificationReport structured_eigvec_check(const DenseMatrix& A,
                                           const std::vector<EigPair>& s_pairs,
                                           const std::vector<EigPair>& c_pairs, bool odd,
                                           double tol) {
    if (!A.square()) throw DimensionError("eigenvector check needs a square matrix");
    const std::size_t N = A.rows();
    if (odd ? (N % 2 == 0) : (N % 2 != 0))
        throw DimensionError("matrix order does not match the odd flag");
    const std::size_t n = odd ? (N - 1) / 2 : N / 2;
    if (tol < 0.0) tol = default_tol(A);

    VerificationReport report;
    std::vector<double> residuals;
    residuals.reserve(s_pairs.size() + c_pairs.size());

    for (const EigPair& p : s_pairs) {
        if (p.vector.size() != (odd ? n + 1 : n))
            throw DimensionError("S eigenvector has the wrong length");
        std::vector<Complex> w(N, Complex{});
        for (std::size_t j = 0; j < n; ++j) {
            w[2 * j] = p.vector[j];
            w[2 * j + 1] = p.vector[j];
        }
        if (odd) w[N - 1] = p.vector[n];
        residuals.push_back(lifted_residual(A, p.value, w));
        report.expected.values.push_back(p.value);
    }
    for (const EigPair& p : c_pairs) {
        if (p.vector.size() != n) throw DimensionError("C eigenvector has the wrong length");
        std::vector<Complex> y(N, Complex{});
        for (std::size_t j = 0; j < n; ++j) {
            y[2 * j] = p.vector[j];
            y[2 * j + 1] = -p.vector[j];
        }
        residuals.push_back(lifted_residual(A, p.value, y));
        report.expected.values.push_back(p.value);
    }

    report.computed = report.expected;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        report.matching.push_back({i, i, residuals[i]});
        report.max_distance = std::max(report.max_distance, residuals[i]);
    }
    report.passed = report.max_distance <= tol;
    report.residuals = std::move(residuals);
    return report;
}

namespace {

struct LuFactors {
    DenseMatrix lu;
    std::vector<std::size_t> piv;
};

// Partial-pivot LU; singular pivots are floored so the solve stays usable
// for inverse iteration (the iterate then aligns with the null direction).
LuFactors lu_factor(DenseMatrix B) {
    const std::size_t n = B.rows();
    const double floor_value = std::max(kEps * B.frobenius_norm(), 1e-300);
    LuFactors f{std::move(B), std::vector<std::size_t>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(f.lu(i, k));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        f.piv[k] = pivot;
        if (pivot != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(pivot, j));
        if (std::abs(f.lu(k, k)) < floor_value) f.lu(k, k) = floor_value;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = f.lu(i, k) / f.lu(k, k);
            f.lu(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

std::vector<Complex> lu_solve(const LuFactors& f, std::vector<Complex> b) {
    const std::size_t n = f.lu.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (f.piv[k] != k) std::swap(b[k], b[f.piv[k]]);
        for (std::size_t i = k + 1; i < n; ++i) b[i] -= f.lu(i, k) * b[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = k + 1; j < n; ++j) b[k] -= f.lu(k, j) * b[j];
        b[k] /= f.lu(k, k);
    }
    return b;
}

}  // namespace

std::optional<std::vector<Complex>> inverse_iteration(const DenseMatrix& A, Complex lambda,
                                                      int steps, double tol) {
    if (!A.square()) throw DimensionError("inverse iteration needs a square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return std::nullopt;
    if (tol < 0.0) tol = default_tol(A);

    DenseMatrix B = A;
    for (std::size_t i = 0; i < n; ++i) B(i, i) -= lambda;
    const LuFactors f = lu_factor(std::move(B));

    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (Complex& z : v) z = Complex{dist(rng), dist(rng)};
    double norm = vec_norm(v);
    for (Complex& z : v) z /= norm;

    for (int step = 0; step < steps; ++step) {
        v = lu_solve(f, std::move(v));
        norm = vec_norm(v);
        if (!std::isfinite(norm) || norm == 0.0) return std::nullopt;
        for (Complex& z : v) z /= norm;
    }

    const std::vector<Complex> av = A * v;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::norm(av[i] - lambda * v[i]);
    if (std::sqrt(sum) > tol) return std::nullopt;
    return v;
}

}  // namespace niep
