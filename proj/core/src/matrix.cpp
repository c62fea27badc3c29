#include "niep/matrix.hpp"

#include <cmath>

namespace niep {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Complex fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged row list");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

DenseMatrix DenseMatrix::from_complex_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged row list");
        std::size_t j = 0;
        for (Complex v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<Complex> DenseMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool DenseMatrix::is_real(double tol) const {
    for (const Complex& z : data_)
        if (std::abs(z.imag()) > tol) return false;
    return true;
}

bool DenseMatrix::all_finite() const {
    for (const Complex& z : data_)
        if (!is_finite(z)) return false;
    return true;
}

bool DenseMatrix::is_nonnegative(double tol) const {
    for (const Complex& z : data_)
        if (std::abs(z.imag()) > tol || z.real() < -tol) return false;
    return true;
}

double DenseMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

Complex DenseMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool DenseMatrix::equals(const DenseMatrix& other, double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (std::abs(data_[k] - other.data_[k]) > tol) return false;
    return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix sum shape mismatch");
    DenseMatrix c = a;
    for (std::size_t k = 0; k < c.entries().size(); ++k) c.entries()[k] += b.entries()[k];
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix difference shape mismatch");
    DenseMatrix c = a;
    for (std::size_t k = 0; k < c.entries().size(); ++k) c.entries()[k] -= b.entries()[k];
    return c;
}

DenseMatrix operator*(Complex scalar, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (Complex& z : c.entries()) z *= scalar;
    return c;
}

std::vector<Complex> operator*(const DenseMatrix& a, const std::vector<Complex>& v) {
    if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Complex> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * v[j];
        r[i] = sum;
    }
    return r;
}

}  // namespace niep
