#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/spectra.hpp"

namespace niep {

struct CompositionParams {
    double gamma = 1.0;  // scale applied to the C spectrum, in [0, 1]
    int sign = +1;       // +1 or -1: which of the two interleavings to build
};

/// Split of the bottom border row of the odd composition. Entries must be
/// nonnegative with phi1[j] + phi2[j] equal to the corresponding last-row
/// entry of S.
struct OddTail {
    std::vector<double> phi1;
    std::vector<double> phi2;

    /// phi1 = phi2 = last row of S halved (the canonical choice).
    static OddTail equal_split(const DenseMatrix& S);
};

/// Entrywise |C| <= S (equivalently S, S+C, S-C all nonnegative).
/// Requires real square matrices of equal order.
bool check_majorization(const DenseMatrix& S, const DenseMatrix& C);

/// The 2n x 2n interleaving with (i,j) block
///   [ (s + g*c)/2  (s - g*c)/2 ]
///   [ (s - g*c)/2  (s + g*c)/2 ]     (g = sign * gamma)
/// realizing spectrum(S) followed by (sign*gamma)*spectrum(C).
/// `unchecked` skips the realness/majorization/gamma gates so the identity
/// can be exercised over arbitrary complex matrices.
DenseMatrix compose_even(const DenseMatrix& S, const DenseMatrix& C,
                         const CompositionParams& p, bool unchecked = false);

/// Left inverse of compose_even up to the gamma scaling: recovers
/// (S, gamma*C) from a matrix of 2x2 blocks [[a,b],[b,a]] (within tol).
std::pair<DenseMatrix, DenseMatrix> extract_even(const DenseMatrix& A, double tol);

enum class PairingPolicy {
    Sorted,  // sort both lists descending and pair by index
    Search,  // try every arrangement of sigma_c against sorted sigma_s (n <= 8)
    Given,   // trust the caller's ordering of both lists
};

/// Builds both realizing matrices from the two lists (sigma_s Suleimanova,
/// sigma_c real) and interleaves them into one permutative matrix realizing
/// sigma_s followed by (sign*gamma)*sigma_c. Throws GateError naming the sum
/// condition (cc1) or the pairing condition (cc2) when they fail under every
/// pairing tried.
DenseMatrix realize_pair_suleimanova(const Spectrum& sigma_s, const Spectrum& sigma_c,
                                     const CompositionParams& p,
                                     PairingPolicy pairing = PairingPolicy::Sorted,
                                     double tol = -1.0);

/// The (2n+1) x (2n+1) bordered interleaving: leading blocks as in
/// compose_even on the first n rows/columns of S and C, last column of S
/// duplicated down each block row, last row of S split into (phi1, phi2)
/// pairs, corner S(n, n). S is (n+1) x (n+1), C is n x n. Realizes
/// spectrum(S) followed by (sign*gamma)*spectrum(C).
DenseMatrix compose_odd(const DenseMatrix& S, const DenseMatrix& C,
                        const CompositionParams& p, const OddTail& tail,
                        bool unchecked = false);
/// Same with the equal split.
DenseMatrix compose_odd(const DenseMatrix& S, const DenseMatrix& C,
                        const CompositionParams& p);

/// Odd composition in summand form: blocks [[a_ij, b_ij],[b_ij, a_ij]],
/// border column x (duplicated), border row y (duplicated), corner u.
/// Realizes spectrum([[A+B, x],[2y, u]]) followed by spectrum(A-B);
/// symmetric whenever A, B are symmetric and x = y.
DenseMatrix compose_odd_sym(const DenseMatrix& A, const DenseMatrix& B,
                            const std::vector<double>& x, const std::vector<double>& y,
                            double u, bool unchecked = false);

/// The pair (S, C) whose spectra the symmetric odd composition joins:
/// S = [[A+B, x],[2y, u]], C = A - B.
std::pair<DenseMatrix, DenseMatrix> odd_sym_summands(const DenseMatrix& A, const DenseMatrix& B,
                                                     const std::vector<double>& x,
                                                     const std::vector<double>& y, double u);

/// Inverse of compose_odd: recovers ((n+1) x (n+1) S, n x n gamma*C) from a
/// (2n+1) x (2n+1) matrix matching the bordered block pattern within tol.
/// The split of the last row is not recoverable (only the pair sums are).
std::pair<DenseMatrix, DenseMatrix> extract_odd(const DenseMatrix& A, double tol);

}  // namespace niep
