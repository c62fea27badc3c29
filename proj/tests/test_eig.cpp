#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "goldens.hpp"
#include "niep/eig.hpp"
#include "niep/errors.hpp"
#include "niep/permutative.hpp"
#include "testutil.hpp"

using namespace niep;

namespace {

// Greedy multiset matching: repeatedly take the globally closest unmatched
// pair (ties by index). The dual route the assignment result must dominate.
double greedy_max_distance(const Spectrum& a, const Spectrum& b) {
    const std::size_t n = a.size();
    std::vector<char> used_a(n, 0), used_b(n, 0);
    double worst = 0.0;
    for (std::size_t round = 0; round < n; ++round) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (used_a[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (used_b[j]) continue;
                const double d = std::abs(a.values[i] - b.values[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_a[bi] = 1;
        used_b[bj] = 1;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

TEST_CASE("eigenvalues of the worked matrices") {
    CHECK(testutil::multiset_ok(goldens::circ_s3_spectrum(), eigenvalues(goldens::circ_s3()),
                                1e-12));
    CHECK(testutil::multiset_ok(goldens::pair_m8_spectrum(), eigenvalues(goldens::pair_m8()),
                                1e-9));
    CHECK(testutil::multiset_ok(Spectrum::from_reals({1, -1}),
                                eigenvalues(DenseMatrix::from_rows({{0, 1}, {1, 0}})), 1e-12));

    DenseMatrix diag(5, 5);
    for (std::size_t i = 0; i < 5; ++i) diag(i, i) = static_cast<double>(i) - 2.0;
    CHECK(testutil::multiset_ok(Spectrum::from_reals({-2, -1, 0, 1, 2}), eigenvalues(diag),
                                1e-13));

    CHECK(eigenvalues(DenseMatrix::from_rows({{42}})).values == std::vector<Complex>{42.0});
    CHECK_THROWS_AS(eigenvalues(DenseMatrix(2, 3)), DimensionError);
}

TEST_CASE("repeated eigenvalues in one trailing block stay accurate") {
    // regression: a double eigenvalue landing in the final 2x2 used to lose
    // half its digits through the naive discriminant
    const DenseMatrix m = paparella_matrix({0.0, 0.375, 3.25, 0.375, 4.625});
    const Spectrum expected = Spectrum::from_reals({8.625, -0.375, -3.25, -0.375, -4.625});
    CHECK(spectra_match(expected, eigenvalues(m), 1e-9).passed);

    const DenseMatrix twin = paparella_matrix({1.0, 2.0, 2.0, 5.0, 5.0});
    CHECK(spectra_match(Spectrum::from_reals({15, -1, -1, -4, -4}), eigenvalues(twin), 1e-9)
              .passed);
}

TEST_CASE("defective blocks converge") {
    // Jordan-type structure: repeated eigenvalue 1 with a single chain
    const DenseMatrix j = DenseMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(testutil::multiset_ok(Spectrum::from_reals({1, 1, 1}), eigenvalues(j), 1e-5));
    // rotation-like matrix: purely imaginary pair
    const DenseMatrix rot = DenseMatrix::from_rows({{0, -1}, {1, 0}});
    CHECK(testutil::multiset_ok(Spectrum{{0.0, 1.0}, {0.0, -1.0}}, eigenvalues(rot), 1e-12));
}

TEST_CASE("characteristic polynomial oracle on the worked matrices") {
    const auto swap2 = charpoly_oracle(DenseMatrix::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(swap2.size() == 3);
    CHECK(std::abs(swap2[0] - Complex{1.0}) < 1e-15);
    CHECK(std::abs(swap2[1]) < 1e-15);
    CHECK(std::abs(swap2[2] - Complex{-1.0}) < 1e-15);

    const auto circ = charpoly_oracle(goldens::circ_s3());
    const std::vector<double> expect_circ{1, -6, 6, -5};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(circ[i] - Complex{expect_circ[i]}) < 1e-12);

    // (x-10)(x+1)(x+2)(x+3) = x^4 - 4x^3 - 49x^2 - 104x - 60
    const auto real4 = charpoly_oracle(goldens::suleimanova_s4());
    const std::vector<double> expect4{1, -4, -49, -104, -60};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(std::abs(real4[i] - Complex{expect4[i]}) < 1e-10);

    CHECK_THROWS_AS(charpoly_oracle(DenseMatrix(13, 13)), DimensionError);
}

TEST_CASE("solver and oracle agree on random matrices") {
    auto rng = testutil::make_rng(3001);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const DenseMatrix a = trial % 2 == 0 ? testutil::random_complex_matrix(rng, n, 2.0)
                                             : testutil::random_real_matrix(rng, n, -2.0, 2.0);
        const Spectrum eigs = eigenvalues(a);
        const auto poly = charpoly_oracle(a);

        double norm_pow = 1.0;
        for (std::size_t i = 0; i < n; ++i) norm_pow *= std::max(1.0, a.frobenius_norm());
        for (Complex lambda : eigs.values) CHECK(std::abs(polyval(poly, lambda)) <= 1e-6 * norm_pow);

        const Complex sum = eigs.sum();
        CHECK(std::abs(sum - a.trace()) <= 1e-9 * std::max(1.0, std::abs(a.trace())));
    }
}

TEST_CASE("real input yields a conjugate-closed spectrum") {
    auto rng = testutil::make_rng(3102);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const DenseMatrix a = testutil::random_real_matrix(rng, n, -3.0, 3.0);
        CHECK(is_conjugate_closed(eigenvalues(a), default_tol(a)));
    }
}

TEST_CASE("spectrum matching") {
    const VerificationReport perm = spectra_match(Spectrum::from_reals({1, 2, 3}),
                                                  Spectrum::from_reals({3, 1, 2}), 0.0);
    CHECK(perm.passed);
    CHECK(perm.max_distance == 0.0);
    REQUIRE(perm.matching.size() == 3);

    const double tol = 1e-6;
    const VerificationReport off =
        spectra_match(Spectrum::from_reals({1, 1}), Spectrum{1.0, 1.0 + 2 * tol}, tol);
    CHECK_FALSE(off.passed);
    CHECK(off.max_distance == doctest::Approx(2 * tol));

    CHECK_THROWS_AS(spectra_match(Spectrum::from_reals({1}), Spectrum::from_reals({1, 2}), 0.0),
                    DimensionError);
}

TEST_CASE("matching is symmetric in its arguments") {
    auto rng = testutil::make_rng(3203);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 6;
        Spectrum a, b;
        for (std::size_t i = 0; i < n; ++i) {
            a.values.push_back(testutil::rand_complex(rng, 3.0));
            b.values.push_back(trial % 3 == 0 ? a.values.back()
                                              : testutil::rand_complex(rng, 3.0));
        }
        if (trial % 3 == 0) std::shuffle(b.values.begin(), b.values.end(), rng);
        for (double tol : {1e-12, 0.5, 2.0})
            CHECK(spectra_match(a, b, tol).passed == spectra_match(b, a, tol).passed);
    }
}

TEST_CASE("assignment matching dominates greedy matching") {
    auto rng = testutil::make_rng(3304);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 6;
        Spectrum a, b;
        for (std::size_t i = 0; i < n; ++i) a.values.push_back(testutil::rand_complex(rng, 2.0));
        if (trial % 2 == 0) {
            b = a;
            std::shuffle(b.values.begin(), b.values.end(), rng);
            for (Complex& z : b.values) z += testutil::rand_complex(rng, 1e-6);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                b.values.push_back(testutil::rand_complex(rng, 2.0));
        }
        const VerificationReport rep = spectra_match(a, b, 1.0);
        CHECK(rep.max_distance <= greedy_max_distance(a, b) + 1e-15);
    }
}

TEST_CASE("structured eigenvector check on the worked interleavings") {
    // Perron pair of circ(2,2,1): all-ones vector, eigenvalue 5. Its lift is
    // the all-ones vector of length 6 and the residual is exactly zero.
    const DenseMatrix m6 = goldens::circ_m6_plus();
    const EigPair perron{5.0, {1.0, 1.0, 1.0}};
    const VerificationReport even = structured_eigvec_check(m6, {perron}, {}, false);
    CHECK(even.passed);
    REQUIRE(even.residuals.has_value());
    CHECK((*even.residuals)[0] == 0.0);

    // odd case: an eigenpair of C = I2 lifts with a zero tail entry
    const DenseMatrix m5 = goldens::odd_m5_identity();
    const EigPair c_pair{1.0, {1.0, 0.0}};
    const VerificationReport odd = structured_eigvec_check(m5, {}, {c_pair}, true);
    CHECK(odd.passed);
    CHECK((*odd.residuals)[0] == 0.0);

    // S-side pair for the odd matrix via inverse iteration on S
    const DenseMatrix s = goldens::odd_s1();
    const auto v3 = inverse_iteration(s, 3.0);
    REQUIRE(v3.has_value());
    const VerificationReport odd_s = structured_eigvec_check(m5, {{3.0, *v3}}, {}, true);
    CHECK(odd_s.passed);

    // analytic Fourier eigenpair of circ(2,2,1): (1 + i sqrt3)/2 with (1, w, w^2)
    const Complex w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
    const EigPair fourier{{0.5, goldens::kSqrt3 / 2}, {1.0, w, w * w}};
    const VerificationReport complex_pair = structured_eigvec_check(m6, {fourier}, {}, false);
    CHECK(complex_pair.passed);
    CHECK(complex_pair.max_distance < 1e-12);
}

TEST_CASE("structured eigenvector check fails on a wrong pair") {
    const DenseMatrix m6 = goldens::circ_m6_plus();
    const EigPair wrong{4.0, {1.0, 1.0, 1.0}};
    CHECK_FALSE(structured_eigvec_check(m6, {wrong}, {}, false).passed);
    CHECK_THROWS_AS(structured_eigvec_check(m6, {{5.0, {1.0}}}, {}, false), DimensionError);
}

TEST_CASE("inverse iteration recovers eigenvectors") {
    auto rng = testutil::make_rng(3405);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const DenseMatrix a = testutil::random_real_matrix(rng, n, -2.0, 2.0);
        const Spectrum eigs = eigenvalues(a);
        const auto v = inverse_iteration(a, eigs.values[0]);
        if (!v.has_value()) continue;  // skip is allowed, silent pass is not
        const std::vector<Complex> av = a * *v;
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            res += std::norm(av[i] - eigs.values[0] * (*v)[i]);
        CHECK(std::sqrt(res) <= default_tol(a));
    }
}
