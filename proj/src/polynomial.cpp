#include "bnpick/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace bnpick {

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, Complex leading) {
    std::vector<Complex> c{leading};
    for (const Complex& r : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

double Polynomial::max_coeff_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

Complex Polynomial::eval(Complex z) const {
    Complex r = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * z + c_[k];
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Complex> c(std::max(c_.size(), rhs.c_.size()), Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c[k] += rhs.c_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Complex> c(std::max(c_.size(), rhs.c_.size()), Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c[k] -= rhs.c_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Complex> c(c_.size() + rhs.c_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> c = c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::trimmed(double rel_eps) const {
    if (c_.empty()) return *this;
    const double cut = rel_eps * max_coeff_abs();
    std::vector<Complex> c = c_;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return Polynomial(std::move(c));
}

std::vector<Complex> poly_roots(const Polynomial& p, const Tolerances& tol) {
    if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "root finding on the zero polynomial");
    const int deg = p.degree();
    if (deg == 0) return {};
    if (deg == 1) {
        const auto& c = p.coefficients();
        return {-c[0] / c[1]};
    }

    const auto& c = p.coefficients();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);

    const Polynomial dp = p.derivative();
    std::vector<Complex> roots(deg);
    for (int i = 0; i < deg; ++i) {
        Complex z = solver.eigenvalues()(i);
        // Newton polish; bail out if the step stops improving (multiple roots).
        double best = std::abs(p.eval(z));
        for (int it = 0; it < 8; ++it) {
            const Complex f = p.eval(z);
            const Complex d = dp.eval(z);
            if (std::abs(d) < 1e-300) break;
            const Complex z_next = z - f / d;
            const double r = std::abs(p.eval(z_next));
            if (r < best) {
                best = r;
                z = z_next;
            } else {
                break;
            }
        }
        roots[i] = z;
    }

    const double bound = tol.tol_root * std::max(p.max_coeff_abs(), 1e-300);
    for (const Complex& z : roots) {
        // residual scaled by the root magnitude; large roots evaluate large
        const double scale = std::pow(std::max(1.0, std::abs(z)), deg);
        if (std::abs(p.eval(z)) > bound * scale * 1e3)
            raise(ErrorCode::NumericalBreakdown, "companion root failed to polish");
    }
    return roots;
}

}  // namespace bnpick
