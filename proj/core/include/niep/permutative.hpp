#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/spectra.hpp"

namespace niep {

/// n-tuple of permutations of {0,...,n-1} with perms[0] = identity. Row j of
/// the generated matrix is the first row reindexed through perms[j].
struct PermutationTuple {
    std::vector<std::vector<std::size_t>> perms;

    static PermutationTuple identity(std::size_t n);
    /// (id, phi, phi^2, ..., phi^{n-1})
    static PermutationTuple powers_of(const std::vector<std::size_t>& phi);
    /// tau_i swaps positions 0 and i; the shape of the Suleimanova realization.
    static PermutationTuple leading_transpositions(std::size_t n);
    /// Generators of circulant / left-circulant matrices:
    /// phi(i) = i-1 mod n, resp. phi(i) = i+1 mod n.
    static PermutationTuple circulant_shifts(std::size_t n);
    static PermutationTuple left_circulant_shifts(std::size_t n);

    std::size_t size() const { return perms.size(); }
    bool operator==(const PermutationTuple&) const = default;

    /// Throws ParseError when a row is not a permutation or perms[0] != id.
    void validate() const;
};

/// The matrix whose row j is (a_{tau_j(0)}, ..., a_{tau_j(n-1)}).
DenseMatrix build_tau_matrix(const PermutationTuple& tau, const std::vector<Complex>& a);

/// Row i equals row 0 with positions 0 and i transposed. Permutative with
/// the leading-transposition tuple. Requires n >= 2.
DenseMatrix paparella_matrix(const std::vector<Complex>& x);

/// Closed-form spectrum of paparella_matrix(x):
/// (sum x_i, x_0 - x_1, ..., x_0 - x_{n-1}).
Spectrum paparella_spectrum(const std::vector<Complex>& x);

/// Inverts the closed form: the x with paparella_spectrum(x) = sigma in the
/// given order (x_0 = mean, x_i = x_0 - sigma_i).
std::vector<Complex> paparella_vector(const Spectrum& sigma);

/// Nonnegative realization of a Suleimanova list (consumed in sorted
/// descending order). tol < 0 selects the scale-aware default.
/// Throws GateError on non-Suleimanova input.
DenseMatrix realize_suleimanova(const Spectrum& sigma, double tol = -1.0);

/// A witness tuple tau with A = tau(row 0 of A), or nullopt. With duplicate
/// first-row entries any witness may be returned.
std::optional<PermutationTuple> detect_permutative(const DenseMatrix& A, double tol);

/// True iff one tuple tau generates both A and B from their first rows.
bool are_permutatively_equivalent(const DenseMatrix& A, const DenseMatrix& B, double tol);

}  // namespace niep
