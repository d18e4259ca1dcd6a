#pragma once

#include <cstddef>
#include <vector>

#include "bnpick/complex_matrix.hpp"
#include "bnpick/errors.hpp"
#include "bnpick/tolerances.hpp"

namespace bnpick {

/// Inertia of a Hermitian matrix at a given zero threshold.
struct Signature {
    int n_pos = 0;
    int n_neg = 0;
    int n_zero = 0;

    int dimension() const { return n_pos + n_neg + n_zero; }
    int rank() const { return n_pos + n_neg; }
    bool invertible() const { return n_zero == 0; }
    bool negative_definite() const { return n_pos == 0 && n_zero == 0; }
    bool negative_semidefinite() const { return n_pos == 0; }
    bool positive_semidefinite() const { return n_neg == 0; }
};

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns; m * V = V * diag(values)
};

/// Eigendecomposition by cyclic Jacobi rotations. Throws NotHermitian when the
/// input exceeds tol.tol_herm. Accurate and simple at the small sizes used here.
HermitianEigen hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol = {});

/// Eigenvalue counts below/above +-zero_tol (absolute, pre-scaled by the caller).
/// zero_tol < 0 selects the default: tol.zero_tol relative to max |eigenvalue|.
Signature signature(const ComplexMatrix& m, double zero_tol = -1.0, const Tolerances& tol = {});

Signature signature_of_eigenvalues(const std::vector<double>& values, double zero_tol);

/// Inverse. Hermitian inputs go through the eigendecomposition (consistent with
/// signature's singularity notion); general square inputs use pivoted elimination.
ComplexMatrix invert(const ComplexMatrix& m, const Tolerances& tol = {});

/// m22 - m21 * m11^{-1} * m12 for the leading split x split block m11.
ComplexMatrix schur_complement(const ComplexMatrix& m, std::size_t split,
                               const Tolerances& tol = {});

}  // namespace bnpick
