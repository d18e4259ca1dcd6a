#pragma once

#include <array>
#include <optional>

#include "bnpick/pick.hpp"
#include "bnpick/rational.hpp"

namespace bnpick {

/// 2x2 complex matrix with value semantics; the coefficient functions here
/// are all 2x2.
struct Matrix2 {
    Complex a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    /// J = diag(1, -1)
    static Matrix2 J() { return {1.0, 0.0, 0.0, -1.0}; }

    Matrix2 operator*(const Matrix2& r) const {
        return {a11 * r.a11 + a12 * r.a21, a11 * r.a12 + a12 * r.a22,
                a21 * r.a11 + a22 * r.a21, a21 * r.a12 + a22 * r.a22};
    }
    Matrix2 operator-(const Matrix2& r) const {
        return {a11 - r.a11, a12 - r.a12, a21 - r.a21, a22 - r.a22};
    }
    Matrix2 operator+(const Matrix2& r) const {
        return {a11 + r.a11, a12 + r.a12, a21 + r.a21, a22 + r.a22};
    }
    Matrix2 operator*(Complex s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    Matrix2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    Complex det() const { return a11 * a22 - a12 * a21; }
    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

/// The 2x2 rational coefficient matrix of the problem: normalized to the
/// identity at mu, J-unitary on the circle, simple poles at the nodes.
struct ThetaFunction {
    PickSystem sys;
    Complex mu;
    std::vector<Complex> tilde_c;  // residue data, top row
    std::vector<Complex> tilde_e;  // residue data, bottom row
    std::vector<Complex> eta;      // eta_i = tilde_c_i / tilde_e_i, unimodular
    RationalMatrix2 closed_form;   // entries share the denominator prod (z - t_i)

    // precomputed state-space factors
    ComplexMatrix right_eval;  // P^{-1} (I - mu T*)^{-1} [C* -E*],  n x 2
    ComplexMatrix left_inv;    // [C; E](mu I - T)^{-1} P^{-1},      2 x n

    double threshold(std::size_t i) const {
        return -sys.p_tilde_diag[i] / std::norm(tilde_e[i]);
    }
};

/// Deterministic rule: scan e^{i pi (2k+1)/64} and take the first candidate
/// farther than 0.1 from every node.
Complex auto_select_mu(const InterpolationData& data);

ThetaFunction build_theta(const PickSystem& sys, std::optional<Complex> mu = std::nullopt,
                          const Tolerances& tol = {});

Matrix2 theta_eval(const ThetaFunction& th, Complex z, const Tolerances& tol = {});
Matrix2 theta_inverse_eval(const ThetaFunction& th, Complex z, const Tolerances& tol = {});

/// lim_(z -> t_i) (z - t_i) Theta(z) = -[w_i; 1] [conj(tilde_c_i), -conj(tilde_e_i)]
Matrix2 residue_at_node(const ThetaFunction& th, std::size_t i);

/// State-space form of (J - Theta(z) J Theta(zeta)*) / (1 - z conj(zeta)).
Matrix2 kernel_K_theta(const ThetaFunction& th, Complex z, Complex zeta,
                       const Tolerances& tol = {});

/// Inverse-side kernel (Theta(zeta)^{-*} J Theta(z)^{-1} - J) / (1 - z conj(zeta)),
/// state-space form.
Matrix2 kernel_K_theta_inverse_side(const ThetaFunction& th, Complex z, Complex zeta,
                                    const Tolerances& tol = {});

/// Tilde-side kernel (J - Theta(zeta)* J Theta(z)) / (1 - z conj(zeta)),
/// state-space form.
Matrix2 kernel_K_theta_tilde_side(const ThetaFunction& th, Complex z, Complex zeta,
                                  const Tolerances& tol = {});

/// Second factor of the split: built from the trailing block of P^{-1} and the
/// tails of the residue data.
struct ThetaTailFactor {
    Complex mu;
    std::vector<Complex> nodes;    // t_{split+1..n}
    std::vector<Complex> tilde_c2;
    std::vector<Complex> tilde_e2;
    ComplexMatrix left;            // [C2~; E2~](I - mu T2*)^{-1} P22~^{-1},  2 x l

    Matrix2 eval(Complex z, const Tolerances& tol = {}) const;
};

struct ThetaFactorization {
    ThetaFunction theta1;
    ThetaTailFactor theta2_tilde;
    std::size_t split;
};

/// Theta = Theta^(1) * Theta~^(2) over the leading split x split block.
ThetaFactorization factorize_theta(const ThetaFunction& th, std::size_t split,
                                   const Tolerances& tol = {});

}  // namespace bnpick
