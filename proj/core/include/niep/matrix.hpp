#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "niep/errors.hpp"
#include "niep/scalar.hpp"

namespace niep {

/// Row-major dense matrix of complex scalars. Real matrices carry zero
/// imaginary parts; constructions that require real input test is_real().
/// A default-constructed (0 x 0) matrix is the degenerate empty value.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, Complex fill = Complex{});

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static DenseMatrix from_complex_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double real_at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j].real(); }

    std::vector<Complex>& entries() { return data_; }
    const std::vector<Complex>& entries() const { return data_; }
    std::vector<Complex> row(std::size_t i) const;

    bool is_real(double tol = 0.0) const;
    bool all_finite() const;
    bool is_nonnegative(double tol = 0.0) const;  // real with entries >= -tol
    double frobenius_norm() const;
    Complex trace() const;
    DenseMatrix transpose() const;

    /// Entrywise |a_ij - b_ij| <= tol; false on shape mismatch.
    bool equals(const DenseMatrix& other, double tol = 0.0) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex scalar, const DenseMatrix& a);
std::vector<Complex> operator*(const DenseMatrix& a, const std::vector<Complex>& v);

}  // namespace niep
