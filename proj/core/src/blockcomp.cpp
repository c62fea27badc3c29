#include "niep/blockcomp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "niep/errors.hpp"
#include "niep/permutative.hpp"

namespace niep {

namespace {

void require_sign(int sign) {
    if (sign != 1 && sign != -1) throw ParseError("sign must be +1 or -1");
}

void require_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw GateError("gamma range", "gamma must lie in [0, 1], got " + std::to_string(gamma));
}

std::string at_index(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

// First (i, j) with |c_ij| > s_ij, if any. Inputs must be real.
std::optional<std::pair<std::size_t, std::size_t>> majorization_violation(const DenseMatrix& S,
                                                                          const DenseMatrix& C) {
    for (std::size_t i = 0; i < S.rows(); ++i)
        for (std::size_t j = 0; j < S.cols(); ++j)
            if (std::abs(C.real_at(i, j)) > S.real_at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

void place_block(DenseMatrix& m, std::size_t i, std::size_t j, Complex s, Complex c, double g) {
    const Complex on = (s + g * c) / 2.0;
    const Complex off = (s - g * c) / 2.0;
    m(2 * i, 2 * j) = on;
    m(2 * i, 2 * j + 1) = off;
    m(2 * i + 1, 2 * j) = off;
    m(2 * i + 1, 2 * j + 1) = on;
}

}  // namespace

OddTail OddTail::equal_split(const DenseMatrix& S) {
    if (!S.square() || S.rows() == 0) throw DimensionError("tail split needs a square matrix");
    const std::size_t n = S.rows() - 1;
    OddTail tail;
    tail.phi1.reserve(n);
    for (std::size_t j = 0; j < n; ++j) tail.phi1.push_back(S.real_at(n, j) / 2.0);
    tail.phi2 = tail.phi1;
    return tail;
}

bool check_majorization(const DenseMatrix& S, const DenseMatrix& C) {
    if (!S.square() || !C.square() || S.rows() != C.rows())
        throw DimensionError("majorization check needs square matrices of equal order");
    if (!S.is_real() || !C.is_real()) return false;
    return !majorization_violation(S, C).has_value();
}

DenseMatrix compose_even(const DenseMatrix& S, const DenseMatrix& C, const CompositionParams& p,
                         bool unchecked) {
    if (!S.square() || !C.square() || S.rows() != C.rows())
        throw DimensionError("even composition needs square matrices of equal order");
    require_sign(p.sign);
    if (!unchecked) {
        require_gamma(p.gamma);
        if (!S.is_real() || !C.is_real())
            throw GateError("real input", "nonnegative composition needs real matrices");
        if (auto v = majorization_violation(S, C))
            throw GateError("majorization",
                            "|c_ij| <= s_ij fails at " + at_index(v->first, v->second));
    }

    const std::size_t n = S.rows();
    const double g = p.gamma * p.sign;
    DenseMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) place_block(m, i, j, S(i, j), C(i, j), g);
    return m;
}

std::pair<DenseMatrix, DenseMatrix> extract_even(const DenseMatrix& A, double tol) {
    if (!A.square()) throw DimensionError("extraction needs a square matrix");
    if (A.rows() % 2 != 0) throw DimensionError("even extraction needs even order");
    const std::size_t n = A.rows() / 2;
    DenseMatrix S(n, n), C(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex a = A(2 * i, 2 * j);
            const Complex b = A(2 * i, 2 * j + 1);
            if (std::abs(A(2 * i + 1, 2 * j + 1) - a) > tol ||
                std::abs(A(2 * i + 1, 2 * j) - b) > tol)
                throw GateError("block pattern",
                                "2x2 block at " + at_index(i, j) + " is not [[a,b],[b,a]]");
            S(i, j) = a + b;
            C(i, j) = a - b;
        }
    return {std::move(S), std::move(C)};
}

namespace {

struct PairedLists {
    std::vector<double> lambda;  // sorted descending
    std::vector<double> mu;      // arranged against lambda
};

bool cc2_holds(const std::vector<double>& lambda, const std::vector<double>& mu, double tol,
               std::size_t* bad_index = nullptr) {
    const double n = static_cast<double>(lambda.size());
    double lam_sum = 0.0, mu_sum = 0.0;
    for (double v : lambda) lam_sum += v;
    for (double v : mu) mu_sum += v;
    const double lam_mean = lam_sum / n;
    const double mu_mean = mu_sum / n;
    for (std::size_t i = 1; i < lambda.size(); ++i) {
        if (std::abs(mu_mean - mu[i]) > (lam_mean - lambda[i]) + tol) {
            if (bad_index != nullptr) *bad_index = i;
            return false;
        }
    }
    return true;
}

PairedLists arrange_pair(const Spectrum& sigma_s, const Spectrum& sigma_c, PairingPolicy pairing,
                         double tol) {
    PairedLists lists;
    lists.lambda.reserve(sigma_s.size());
    for (Complex z : sigma_s.values) lists.lambda.push_back(z.real());
    std::sort(lists.lambda.begin(), lists.lambda.end(), std::greater<>());
    lists.mu.reserve(sigma_c.size());
    for (Complex z : sigma_c.values) lists.mu.push_back(z.real());

    switch (pairing) {
        case PairingPolicy::Given:
            break;
        case PairingPolicy::Sorted:
            std::sort(lists.mu.begin(), lists.mu.end(), std::greater<>());
            break;
        case PairingPolicy::Search: {
            if (lists.mu.size() > 8)
                throw GateError("pairing search",
                                "exhaustive pairing is limited to lists of length <= 8");
            std::sort(lists.mu.begin(), lists.mu.end());
            std::vector<double> best = lists.mu;
            bool found = false;
            do {
                if (cc2_holds(lists.lambda, lists.mu, tol)) {
                    best = lists.mu;
                    found = true;
                    break;
                }
            } while (std::next_permutation(lists.mu.begin(), lists.mu.end()));
            lists.mu = best;
            if (!found) {
                // keep the sorted arrangement; the caller re-checks and names cc2
                std::sort(lists.mu.begin(), lists.mu.end(), std::greater<>());
            }
            break;
        }
    }
    return lists;
}

}  // namespace

DenseMatrix realize_pair_suleimanova(const Spectrum& sigma_s, const Spectrum& sigma_c,
                                     const CompositionParams& p, PairingPolicy pairing,
                                     double tol) {
    sigma_s.validate();
    sigma_c.validate();
    if (sigma_s.size() != sigma_c.size())
        throw DimensionError("paired lists must have equal length");
    if (tol < 0.0) tol = std::max(default_tol(sigma_s), default_tol(sigma_c));
    if (!is_suleimanova(sigma_s, tol))
        throw GateError("Suleimanova condition", "first list is not a Suleimanova spectrum");
    if (!sigma_c.is_real(tol))
        throw GateError("real list", "second list must be real for the paired realization");

    if (sigma_c.sum().real() > sigma_s.sum().real() + tol)
        throw GateError("cc1", "sum of second list exceeds sum of first list");

    const PairedLists lists = arrange_pair(sigma_s, sigma_c, pairing, tol);
    std::size_t bad = 0;
    if (!cc2_holds(lists.lambda, lists.mu, tol, &bad))
        throw GateError("cc2", "pairing condition fails at index " + std::to_string(bad + 1) +
                                   (pairing == PairingPolicy::Search ? " under every pairing"
                                                                     : ""));

    const std::size_t n = lists.lambda.size();
    DenseMatrix S, C;
    if (n == 1) {
        S = DenseMatrix(1, 1, Complex{lists.lambda[0]});
        C = DenseMatrix(1, 1, Complex{lists.mu[0]});
    } else {
        S = paparella_matrix(paparella_vector(Spectrum::from_reals(lists.lambda)));
        C = paparella_matrix(paparella_vector(Spectrum::from_reals(lists.mu)));
    }
    return compose_even(S, C, p);
}

namespace {

void check_odd_gates(const DenseMatrix& S, const DenseMatrix& C, const OddTail& tail,
                     double split_tol) {
    const std::size_t n = C.rows();
    if (!S.is_real() || !C.is_real())
        throw GateError("real input", "nonnegative composition needs real matrices");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(C.real_at(i, j)) > S.real_at(i, j))
                throw GateError("majorization", "s_ij >= |c_ij| fails at " + at_index(i, j));
    for (std::size_t i = 0; i <= n; ++i)
        if (S.real_at(i, n) < 0.0)
            throw GateError("border nonnegativity",
                            "last column of S has a negative entry at row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
        if (tail.phi1[j] < 0.0 || tail.phi2[j] < 0.0)
            throw GateError("phi split", "split entries must be nonnegative");
        if (std::abs(tail.phi1[j] + tail.phi2[j] - S.real_at(n, j)) > split_tol)
            throw GateError("phi split", "phi1 + phi2 must equal the last row of S at column " +
                                             std::to_string(j + 1));
    }
}

}  // namespace

DenseMatrix compose_odd(const DenseMatrix& S, const DenseMatrix& C, const CompositionParams& p,
                        const OddTail& tail, bool unchecked) {
    if (!S.square() || !C.square() || S.rows() != C.rows() + 1)
        throw DimensionError("odd composition needs S of order n+1 and C of order n");
    require_sign(p.sign);
    const std::size_t n = C.rows();
    if (tail.phi1.size() != n || tail.phi2.size() != n)
        throw DimensionError("tail split length must match the order of C");
    if (!unchecked) {
        require_gamma(p.gamma);
        check_odd_gates(S, C, tail, default_tol(S));
    }

    const double g = p.gamma * p.sign;
    DenseMatrix m(2 * n + 1, 2 * n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) place_block(m, i, j, S(i, j), C(i, j), g);
    for (std::size_t i = 0; i < n; ++i) {
        m(2 * i, 2 * n) = S(i, n);
        m(2 * i + 1, 2 * n) = S(i, n);
    }
    for (std::size_t j = 0; j < n; ++j) {
        m(2 * n, 2 * j) = tail.phi1[j];
        m(2 * n, 2 * j + 1) = tail.phi2[j];
    }
    m(2 * n, 2 * n) = S(n, n);
    return m;
}

DenseMatrix compose_odd(const DenseMatrix& S, const DenseMatrix& C, const CompositionParams& p) {
    return compose_odd(S, C, p, OddTail::equal_split(S));
}

DenseMatrix compose_odd_sym(const DenseMatrix& A, const DenseMatrix& B,
                            const std::vector<double>& x, const std::vector<double>& y, double u,
                            bool unchecked) {
    if (!A.square() || !B.square() || A.rows() != B.rows())
        throw DimensionError("summand matrices must be square of equal order");
    const std::size_t n = A.rows();
    if (x.size() != n || y.size() != n)
        throw DimensionError("border vectors must match the summand order");
    if (!unchecked) {
        if (!A.is_real() || !B.is_real())
            throw GateError("real input", "nonnegative composition needs real matrices");
        // the composed matrix carries the entries of A and B directly, so
        // these are exactly the entries that must be nonnegative
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (A.real_at(i, j) < 0.0)
                    throw GateError("summand nonnegativity",
                                    "A has a negative entry at " + at_index(i, j));
                if (B.real_at(i, j) < 0.0)
                    throw GateError("summand nonnegativity",
                                    "B has a negative entry at " + at_index(i, j));
            }
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] < 0.0 || y[i] < 0.0)
                throw GateError("border nonnegativity", "border vectors must be nonnegative");
        if (u < 0.0) throw GateError("border nonnegativity", "corner entry must be nonnegative");
    }

    DenseMatrix m(2 * n + 1, 2 * n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(2 * i, 2 * j) = A(i, j);
            m(2 * i, 2 * j + 1) = B(i, j);
            m(2 * i + 1, 2 * j) = B(i, j);
            m(2 * i + 1, 2 * j + 1) = A(i, j);
        }
    for (std::size_t i = 0; i < n; ++i) {
        m(2 * i, 2 * n) = x[i];
        m(2 * i + 1, 2 * n) = x[i];
        m(2 * n, 2 * i) = y[i];
        m(2 * n, 2 * i + 1) = y[i];
    }
    m(2 * n, 2 * n) = u;
    return m;
}

std::pair<DenseMatrix, DenseMatrix> odd_sym_summands(const DenseMatrix& A, const DenseMatrix& B,
                                                     const std::vector<double>& x,
                                                     const std::vector<double>& y, double u) {
    if (!A.square() || !B.square() || A.rows() != B.rows())
        throw DimensionError("summand matrices must be square of equal order");
    const std::size_t n = A.rows();
    if (x.size() != n || y.size() != n)
        throw DimensionError("border vectors must match the summand order");
    DenseMatrix S(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) S(i, j) = A(i, j) + B(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        S(i, n) = x[i];
        S(n, i) = 2.0 * y[i];
    }
    S(n, n) = u;
    return {std::move(S), A - B};
}

std::pair<DenseMatrix, DenseMatrix> extract_odd(const DenseMatrix& A, double tol) {
    if (!A.square()) throw DimensionError("extraction needs a square matrix");
    if (A.rows() % 2 == 0) throw DimensionError("odd extraction needs odd order");
    const std::size_t n = (A.rows() - 1) / 2;
    DenseMatrix S(n + 1, n + 1), C(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex a = A(2 * i, 2 * j);
            const Complex b = A(2 * i, 2 * j + 1);
            if (std::abs(A(2 * i + 1, 2 * j + 1) - a) > tol ||
                std::abs(A(2 * i + 1, 2 * j) - b) > tol)
                throw GateError("block pattern",
                                "2x2 block at " + at_index(i, j) + " is not [[a,b],[b,a]]");
            S(i, j) = a + b;
            C(i, j) = a - b;
        }
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = A(2 * i, 2 * n);
        if (std::abs(A(2 * i + 1, 2 * n) - a) > tol)
            throw GateError("block pattern",
                            "last-column pair at row " + std::to_string(i + 1) + " differs");
        S(i, n) = a;
    }
    for (std::size_t j = 0; j < n; ++j) S(n, j) = A(2 * n, 2 * j) + A(2 * n, 2 * j + 1);
    S(n, n) = A(2 * n, 2 * n);
    return {std::move(S), std::move(C)};
}

}  // namespace niep
