#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/scalar.hpp"

namespace niep {

/// An eigenvalue list with multiplicity. Order is significant only where an
/// operation says so (circulant operations use DFT-index order; most checks
/// treat the list as a multiset).
struct Spectrum {
    std::vector<Complex> values;

    Spectrum() = default;
    explicit Spectrum(std::vector<Complex> v) : values(std::move(v)) {}
    Spectrum(std::initializer_list<Complex> v) : values(v) {}
    static Spectrum from_reals(const std::vector<double>& v);

    std::size_t size() const { return values.size(); }
    Complex sum() const;
    double spectral_radius() const;
    bool all_finite() const;
    bool is_real(double tol = 0.0) const;
    Spectrum reversed() const;

    /// Throws ParseError unless non-empty with finite entries.
    void validate() const;
};

/// Scale-aware default tolerance: 1e-9 * max(1, spectral radius).
double default_tol(const Spectrum& sigma);
/// Scale-aware default tolerance: 1e-9 * max(1, Frobenius norm).
double default_tol(const DenseMatrix& a);

struct PowerSum {
    int k = 0;
    Complex value;
    bool nonneg = false;  // real within tol and >= -tol
};

struct JllViolation {
    int k = 0;
    int m = 0;
};

/// Outcome of the four classical necessary conditions on a candidate list.
struct NecessaryReport {
    bool perron_in_list = false;
    bool conjugate_closed = false;
    std::vector<PowerSum> power_sums;      // k = 1..K
    std::vector<JllViolation> jll_violations;

    bool passed() const;
    /// Short name of the first failing condition, or empty when passed.
    std::string first_failure() const;
};

/// True iff conjugating the list permutes it (as a multiset, matched by
/// minimum-cost assignment on |sigma_i - conj(sigma_j)| with max matched
/// distance <= tol).
bool is_conjugate_closed(const Spectrum& sigma, double tol);

/// Evaluates Perron dominance, conjugate closure, power-sum nonnegativity
/// for k <= K and the JLL inequalities s_k^m <= n^{m-1} s_{km} for
/// k <= K, m <= M.
NecessaryReport check_necessary(const Spectrum& sigma, int K, int M, double tol);

/// True iff the list is real with a single positive entry dominating a
/// nonpositive tail and a nonnegative sum (order-insensitive).
bool is_suleimanova(const Spectrum& sigma, double tol);

}  // namespace niep
