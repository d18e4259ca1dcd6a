#pragma once

#include <vector>

#include "bnpick/complex_matrix.hpp"
#include "bnpick/errors.hpp"
#include "bnpick/tolerances.hpp"

namespace bnpick {

/// Dense univariate polynomial over C, coefficients in ascending degree.
/// The zero polynomial is represented by an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    static Polynomial constant(Complex c);
    static Polynomial from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const std::vector<Complex>& coefficients() const { return c_; }
    Complex leading() const { return c_.empty() ? Complex(0.0) : c_.back(); }
    double max_coeff_abs() const;

    Complex eval(Complex z) const;  // Horner
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(Complex s) const;

    /// Drop leading coefficients smaller than rel_eps * max |coeff|.
    Polynomial trimmed(double rel_eps = 1e-13) const;

private:
    std::vector<Complex> c_;
};

/// All roots with multiplicity, via companion-matrix eigenvalues plus a Newton
/// polish. Throws ZeroPolynomial for the zero polynomial; a nonzero constant
/// has no roots.
std::vector<Complex> poly_roots(const Polynomial& p, const Tolerances& tol = {});

}  // namespace bnpick
