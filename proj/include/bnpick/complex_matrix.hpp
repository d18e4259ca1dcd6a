#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bnpick {

using Complex = std::complex<double>;

/// Small dense complex matrix, row-major. Sized for interpolation problems
/// with at most a few dozen nodes; no view/expression machinery.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

    /// Row-major nested initializer, e.g. {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    ComplexMatrix select(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex s) const;

    double max_abs() const;
    double frobenius() const;
    bool all_finite() const;

    /// max |(*this - adjoint())| entry; 0 for the empty matrix
    double hermitian_defect() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

}  // namespace bnpick
