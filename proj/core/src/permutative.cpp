#include "niep/permutative.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "niep/assignment.hpp"
#include "niep/errors.hpp"

namespace niep {

namespace {

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

bool is_permutation(const std::vector<std::size_t>& p) {
    std::vector<char> seen(p.size(), 0);
    for (std::size_t v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

PermutationTuple PermutationTuple::identity(std::size_t n) {
    PermutationTuple t;
    t.perms.assign(n, identity_perm(n));
    return t;
}

PermutationTuple PermutationTuple::powers_of(const std::vector<std::size_t>& phi) {
    const std::size_t n = phi.size();
    PermutationTuple t;
    t.perms.reserve(n);
    std::vector<std::size_t> cur = identity_perm(n);
    for (std::size_t j = 0; j < n; ++j) {
        t.perms.push_back(cur);
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = phi[cur[i]];
        cur = std::move(next);
    }
    return t;
}

PermutationTuple PermutationTuple::leading_transpositions(std::size_t n) {
    PermutationTuple t = identity(n);
    for (std::size_t i = 1; i < n; ++i) std::swap(t.perms[i][0], t.perms[i][i]);
    return t;
}

PermutationTuple PermutationTuple::circulant_shifts(std::size_t n) {
    std::vector<std::size_t> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = (i + n - 1) % n;
    return powers_of(phi);
}

PermutationTuple PermutationTuple::left_circulant_shifts(std::size_t n) {
    std::vector<std::size_t> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = (i + 1) % n;
    return powers_of(phi);
}

void PermutationTuple::validate() const {
    const std::size_t n = perms.size();
    if (n == 0) throw ParseError("permutation tuple is empty");
    for (const auto& p : perms) {
        if (p.size() != n) throw ParseError("permutation tuple is not square");
        if (!is_permutation(p)) throw ParseError("tuple row is not a permutation");
    }
    if (perms.front() != identity_perm(n))
        throw ParseError("first tuple entry must be the identity permutation");
}

DenseMatrix build_tau_matrix(const PermutationTuple& tau, const std::vector<Complex>& a) {
    tau.validate();
    const std::size_t n = tau.size();
    if (a.size() != n)
        throw DimensionError("vector length " + std::to_string(a.size()) +
                             " does not match tuple order " + std::to_string(n));
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < n; ++p) m(j, p) = a[tau.perms[j][p]];
    return m;
}

DenseMatrix paparella_matrix(const std::vector<Complex>& x) {
    const std::size_t n = x.size();
    if (n < 2) throw DimensionError("realization shape needs at least 2 entries");
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = x[j];
        m(i, 0) = x[i];
        m(i, i) = x[0];
    }
    return m;
}

Spectrum paparella_spectrum(const std::vector<Complex>& x) {
    const std::size_t n = x.size();
    if (n < 2) throw DimensionError("realization shape needs at least 2 entries");
    Spectrum s;
    s.values.reserve(n);
    Complex sum = 0.0;
    for (Complex v : x) sum += v;
    s.values.push_back(sum);
    for (std::size_t i = 1; i < n; ++i) s.values.push_back(x[0] - x[i]);
    return s;
}

std::vector<Complex> paparella_vector(const Spectrum& sigma) {
    const std::size_t n = sigma.size();
    if (n < 2) throw DimensionError("realization shape needs at least 2 entries");
    const Complex x0 = sigma.sum() / static_cast<double>(n);
    std::vector<Complex> x(n);
    x[0] = x0;
    for (std::size_t i = 1; i < n; ++i) x[i] = x0 - sigma.values[i];
    return x;
}

DenseMatrix realize_suleimanova(const Spectrum& sigma, double tol) {
    if (tol < 0.0) tol = default_tol(sigma);
    if (!is_suleimanova(sigma, tol))
        throw GateError("Suleimanova condition",
                        "list is not real with one positive entry and nonnegative sum");
    std::vector<double> v;
    v.reserve(sigma.size());
    for (Complex z : sigma.values) v.push_back(z.real());
    std::sort(v.begin(), v.end(), std::greater<>());
    return paparella_matrix(paparella_vector(Spectrum::from_reals(v)));
}

namespace {

// Admissible target indices per position of one row: q is admissible for p
// when rowA[p] matches firstA[q] (and, when B is present, rowB[p] matches
// firstB[q]). A perfect matching of positions to indices is exactly a
// witness permutation for this row.
std::optional<std::vector<std::size_t>> row_witness(const DenseMatrix& A, const DenseMatrix* B,
                                                    std::size_t row, double tol) {
    const std::size_t n = A.cols();
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (std::abs(A(row, p) - A(0, q)) > tol) continue;
            if (B != nullptr && std::abs((*B)(row, p) - (*B)(0, q)) > tol) continue;
            adjacency[p].push_back(q);
        }
        if (adjacency[p].empty()) return std::nullopt;
    }
    return perfect_matching(adjacency);
}

std::optional<PermutationTuple> witness_tuple(const DenseMatrix& A, const DenseMatrix* B,
                                              double tol) {
    const std::size_t n = A.rows();
    PermutationTuple tau = PermutationTuple::identity(n);
    for (std::size_t row = 1; row < n; ++row) {
        auto w = row_witness(A, B, row, tol);
        if (!w) return std::nullopt;
        tau.perms[row] = std::move(*w);
    }
    return tau;
}

}  // namespace

std::optional<PermutationTuple> detect_permutative(const DenseMatrix& A, double tol) {
    if (!A.square()) throw DimensionError("permutative detection needs a square matrix");
    if (A.rows() == 0) return std::nullopt;
    return witness_tuple(A, nullptr, tol);
}

bool are_permutatively_equivalent(const DenseMatrix& A, const DenseMatrix& B, double tol) {
    if (!A.square() || !B.square())
        throw DimensionError("permutative equivalence needs square matrices");
    if (A.rows() != B.rows()) throw DimensionError("permutative equivalence needs equal orders");
    if (A.rows() == 0) return false;
    return witness_tuple(A, &B, tol).has_value();
}

}  // namespace niep
