#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/spectra.hpp"

namespace niep {

struct MatchPair {
    std::size_t expected_index = 0;
    std::size_t computed_index = 0;
    double distance = 0.0;
};

struct VerificationReport {
    Spectrum expected;
    Spectrum computed;
    std::vector<MatchPair> matching;  // perfect matching when lengths agree
    double max_distance = 0.0;        // max over matched pairs
    bool passed = false;
    std::optional<std::vector<double>> residuals;  // eigenvector checks only
};

/// All eigenvalues with multiplicity. Householder reduction to Hessenberg
/// form followed by Wilkinson-shifted QR with deflation; works uniformly on
/// real and complex input. Throws ConvergenceError (with partial results)
/// if an eigenvalue fails to deflate within the iteration budget.
Spectrum eigenvalues(const DenseMatrix& A);

/// Characteristic polynomial coefficients, highest power first (monic), by
/// the Faddeev-LeVerrier trace recurrence. Independent of eigenvalues();
/// restricted to n <= 12 where the recurrence is numerically sound.
std::vector<Complex> charpoly_oracle(const DenseMatrix& A);

/// Horner evaluation of a coefficient list (highest power first).
Complex polyval(const std::vector<Complex>& coeffs, Complex z);

/// Multiset comparison by minimum-cost perfect assignment on |e_i - c_j|;
/// passes iff the largest matched distance is <= tol.
VerificationReport spectra_match(const Spectrum& expected, const Spectrum& computed, double tol);

struct EigPair {
    Complex value;
    std::vector<Complex> vector;
};

/// Checks a composed block matrix against eigenpairs of its summands by
/// lifting them: S-vectors expand through (1,1) blocks (odd case: plus a
/// scalar tail), C-vectors through (1,-1) blocks (odd case: zero tail).
/// Residuals are |A v - lambda v|_2 / |v|_2; passes iff all <= tol
/// (tol < 0 selects the scale-aware default).
VerificationReport structured_eigvec_check(const DenseMatrix& A,
                                           const std::vector<EigPair>& s_pairs,
                                           const std::vector<EigPair>& c_pairs,
                                           bool odd, double tol = -1.0);

/// A few steps of shifted inverse iteration from a deterministic start
/// vector. Returns nullopt when the iterate fails to reach an eigenvector
/// residual <= tol (tol < 0 selects the scale-aware default); callers treat
/// that as "skip", never as a pass.
std::optional<std::vector<Complex>> inverse_iteration(const DenseMatrix& A, Complex lambda,
                                                      int steps = 3, double tol = -1.0);

}  // namespace niep
