#pragma once

namespace bnpick {

/// Numerical tolerances used across the library. Every tolerance is named and
/// overridable so that reports can state exactly which thresholds were in force.
struct Tolerances {
    // hermitian core
    double tol_herm = 1e-12;   ///< max-entry bound on m - m* for Hermitian checks
    double tol_eig = 1e-12;    ///< off-diagonal Frobenius mass target for the Jacobi sweep
    double zero_tol = 1e-9;    ///< eigenvalue zero threshold, relative to the largest |eigenvalue|
    double tol_inv = 1e-10;    ///< residual bound on m * inv(m) - I

    // rational functions
    double tol_root = 1e-10;          ///< residual bound for polished polynomial roots
    double root_match_tol = 1e-8;     ///< numerator/denominator root cancellation distance
    double disk_boundary_tol = 1e-8;  ///< band around |z| = 1 where pole classification is refused
    double tol_unimod = 1e-8;         ///< modulus-one test tolerance
    double tol_eval = 1e-10;          ///< pointwise function-value agreement

    // pick system
    double node_sep_tol = 1e-8;  ///< minimum pairwise node distance
    double tol_stein = 1e-12;    ///< max-entry residual of the Stein identity

    // theta
    double tol_junit = 1e-10;  ///< J-unitarity residual on circle samples
    double pole_tol = 1e-9;    ///< evaluation refused this close to a node

    // boundary classification
    double class_tol = 1e-7;  ///< equality window for the C5/C6 threshold tests
    double value_tol = 1e-8;  ///< boundary value matching on the exact path

    // degenerate solver
    double tol_deg = 1e-8;  ///< ratio consistency bound for the pinned parameter

    // radial estimation
    double divergence_threshold = 1e6;
};

}  // namespace bnpick
