#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "niep/blockcomp.hpp"
#include "niep/matrix.hpp"
#include "niep/spectra.hpp"

namespace niep {

/// First row of a circulant matrix; determines it entirely.
struct CirculantRow {
    std::vector<Complex> row;

    CirculantRow() = default;
    explicit CirculantRow(std::vector<Complex> r) : row(std::move(r)) {}
    CirculantRow(std::initializer_list<Complex> r) : row(r) {}
    static CirculantRow from_reals(const std::vector<double>& r);

    std::size_t size() const { return row.size(); }
    bool is_real(double tol = 0.0) const;
    bool is_nonnegative(double tol = 0.0) const;
};

/// The full circulant: row i is the first row cyclically shifted right i times.
DenseMatrix circulant_matrix(const CirculantRow& r);

/// Eigenvalues in DFT-index order: sigma_k = sum_j r_j w^{(k-1)(j-1)},
/// w = exp(2*pi*i/n). Direct O(n^2) evaluation.
Spectrum circulant_spectrum(const CirculantRow& r);

/// Inverse DFT: the first row whose circulant has spectrum sigma (taken in
/// DFT-index order). Non-real rows are returned as-is; is_real() flags them.
CirculantRow circulant_from_spectrum(const Spectrum& sigma);

enum class GuoVariant {
    General,     // perturbs positions 1, 2 and n (requires n >= 3)
    EvenMiddle,  // perturbs positions 1 and m+2 for n = 2m+2 (requires even n)
};

struct GuoParams {
    double t = 0.0;      // perturbation size, >= 0
    double theta = 0.0;  // phase (radians), general variant only
    int branch = +1;     // the +/- choice in the displayed lists
    GuoVariant variant = GuoVariant::General;
};

/// Perron-increasing perturbation of a circulant spectrum, DFT-index order:
///   general:     (l1 + 2t, l2 + b*t*e^{i*theta}, l3, ..., ln + b*t*e^{-i*theta})
///   even-middle: (l1 + t, l2, ..., l_{m+1}, l_{m+2} + b*t, l_{m+3}, ..., ln)
/// Nonnegativity of the realizing row is preserved for t >= 0.
Spectrum guo_perturb(const Spectrum& sigma, const GuoParams& p);

struct GuoPairResult {
    DenseMatrix matrix;       // the 2n x 2n permutative composition
    CirculantRow row_s;       // perturbed first row of S (realified)
    CirculantRow row_c;       // perturbed first row of C (realified)
    Spectrum sigma_s;         // even-middle perturbation of sigma1 by t1
    Spectrum sigma_c;         // even-middle perturbation of sigma2 by t2
    double max_clamped = 0.0; // largest roundoff negative clamped to zero
};

/// Paired even-middle perturbation (same branch on both lists, t1 >= |t2|)
/// of two circulant spectra whose realizing rows satisfy r_s, r_s +/- r_c
/// nonnegative, followed by the even interleaving. The result realizes the
/// perturbed sigma1 followed by (sign*gamma) * perturbed sigma2.
GuoPairResult guo_pair_compose(const Spectrum& sigma1, const Spectrum& sigma2,
                               double t1, double t2, int branch,
                               const CompositionParams& p);

}  // namespace niep
