#include "bnpick/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bnpick {

namespace {

Polynomial monic_pair(Polynomial& num, const Polynomial& den) {
    const Complex lead = den.leading();
    num = num * (1.0 / lead);
    return den * (1.0 / lead);
}

}  // namespace

RationalFunction::RationalFunction() : num_(), den_(Polynomial::constant(1.0)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) raise(ErrorCode::ZeroPolynomial, "denominator is identically zero");
    den_ = monic_pair(num_, den_);
}

RationalFunction RationalFunction::constant(Complex c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant(1.0));
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(Complex s) const {
    return RationalFunction(num_ * s, den_);
}

BlaschkeProduct BlaschkeProduct::make(std::vector<Complex> zeros, Complex factor,
                                      const Tolerances& tol) {
    for (const Complex& a : zeros)
        if (std::abs(a) >= 1.0 - tol.disk_boundary_tol)
            raise(ErrorCode::DataInvalid, "Blaschke zero not strictly inside the disk");
    if (std::abs(std::abs(factor) - 1.0) > tol.tol_unimod)
        raise(ErrorCode::DataInvalid, "Blaschke factor is not unimodular");
    BlaschkeProduct b;
    b.zeros = std::move(zeros);
    b.unimodular_factor = factor;
    return b;
}

Complex BlaschkeProduct::eval(Complex z) const {
    Complex r = unimodular_factor;
    for (const Complex& a : zeros) r *= (z - a) / (1.0 - std::conj(a) * z);
    return r;
}

RationalFunction BlaschkeProduct::to_rational() const {
    Polynomial num = Polynomial::constant(unimodular_factor);
    Polynomial den = Polynomial::constant(1.0);
    for (const Complex& a : zeros) {
        num = num * Polynomial({-a, 1.0});
        den = den * Polynomial({1.0, -std::conj(a)});
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction reduce(const RationalFunction& r, const Tolerances& tol) {
    Polynomial num = r.num().trimmed();
    Polynomial den = r.den().trimmed();
    if (num.is_zero()) return RationalFunction();

    std::vector<Complex> rn = num.degree() >= 1 ? poly_roots(num, tol) : std::vector<Complex>{};
    std::vector<Complex> rd = den.degree() >= 1 ? poly_roots(den, tol) : std::vector<Complex>{};

    // greedy nearest-pair cancellation
    while (!rn.empty() && !rd.empty()) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < rn.size(); ++i)
            for (std::size_t j = 0; j < rd.size(); ++j) {
                const double d = std::abs(rn[i] - rd[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= tol.root_match_tol) break;
        rn.erase(rn.begin() + static_cast<std::ptrdiff_t>(bi));
        rd.erase(rd.begin() + static_cast<std::ptrdiff_t>(bj));
    }

    Polynomial num2 = Polynomial::from_roots(rn, num.leading());
    Polynomial den2 = Polynomial::from_roots(rd, den.leading());
    return RationalFunction(std::move(num2), std::move(den2));
}

int count_poles_in_disk(const RationalFunction& r, const Tolerances& tol) {
    if (r.poles_cache().has_value()) return *r.poles_cache();
    int count = 0;
    if (r.den().degree() >= 1) {
        for (const Complex& z : poly_roots(r.den(), tol)) {
            const double m = std::abs(z);
            if (std::abs(m - 1.0) <= tol.disk_boundary_tol)
                raise(ErrorCode::BoundaryPole, "pole too close to the unit circle to classify");
            if (m < 1.0) ++count;
        }
    }
    r.poles_cache() = count;
    return count;
}

namespace {

bool same_polynomial(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return false;
    const double scale = std::max({a.max_coeff_abs(), b.max_coeff_abs(), 1e-300});
    for (std::size_t k = 0; k < a.coefficients().size(); ++k)
        if (std::abs(a.coefficients()[k] - b.coefficients()[k]) > 1e-12 * scale) return false;
    return true;
}

// quotient of the synthetic division by (z - a); the remainder is dropped
Polynomial deflate_once(const Polynomial& p, Complex a) {
    const auto& c = p.coefficients();
    std::vector<Complex> q(c.size() - 1);
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        if (k < q.size()) q[k] = acc;
        acc = c[k] + a * acc;
    }
    return Polynomial(std::move(q));
}

// magnitude scale of p at |z| = |a| for the vanishing test
double eval_scale(const Polynomial& p, Complex a) {
    double s = 0.0, pw = 1.0;
    const double m = std::abs(a);
    for (const Complex& c : p.coefficients()) {
        s += std::abs(c) * pw;
        pw *= m;
    }
    return std::max(s, 1e-300);
}

}  // namespace

RationalFunction mobius_apply(const RationalMatrix2& theta, const RationalFunction& e,
                              const Tolerances& tol, const std::vector<Complex>& cancel_anchors) {
    Polynomial wn, wd;
    if (same_polynomial(theta.e11.den(), theta.e12.den()) &&
        same_polynomial(theta.e11.den(), theta.e21.den()) &&
        same_polynomial(theta.e11.den(), theta.e22.den())) {
        // shared denominator cancels in the quotient
        wn = theta.e11.num() * e.num() + theta.e12.num() * e.den();
        wd = theta.e21.num() * e.num() + theta.e22.num() * e.den();
    } else {
        const RationalFunction a = theta.e11 * e + theta.e12;
        const RationalFunction b = theta.e21 * e + theta.e22;
        wn = a.num() * b.den();
        wd = a.den() * b.num();
    }
    if (wd.trimmed().is_zero())
        raise(ErrorCode::DegenerateDenominator, "theta21*e + theta22 vanishes identically");

    for (const Complex& a : cancel_anchors) {
        while (wn.degree() >= 1 && wd.degree() >= 1 &&
               std::abs(wn.eval(a)) <= 1e-10 * eval_scale(wn, a) &&
               std::abs(wd.eval(a)) <= 1e-10 * eval_scale(wd, a)) {
            wn = deflate_once(wn, a);
            wd = deflate_once(wd, a);
        }
    }
    return reduce(RationalFunction(std::move(wn), std::move(wd)), tol);
}

std::pair<BlaschkeProduct, BlaschkeProduct> blaschke_factorize(const RationalFunction& r,
                                                               const Tolerances& tol) {
    // unimodularity on the circle
    for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * std::numbers::pi * (k + 0.37) / 64.0;
        const Complex t = std::polar(1.0, phi);
        const double m = std::abs(r.eval(t));
        if (!std::isfinite(m) || std::abs(m - 1.0) > tol.tol_unimod)
            raise(ErrorCode::NotInnerRatio, "not unimodular on the unit circle");
    }

    std::vector<Complex> zeros_num, zeros_den;
    if (r.num().degree() >= 1) {
        for (const Complex& z : poly_roots(r.num(), tol)) {
            const double m = std::abs(z);
            if (std::abs(m - 1.0) <= tol.disk_boundary_tol)
                raise(ErrorCode::NotInnerRatio, "zero on the unit circle");
            if (m < 1.0) zeros_num.push_back(z);
        }
    }
    if (r.den().degree() >= 1) {
        for (const Complex& z : poly_roots(r.den(), tol)) {
            const double m = std::abs(z);
            if (std::abs(m - 1.0) <= tol.disk_boundary_tol)
                raise(ErrorCode::NotInnerRatio, "pole on the unit circle");
            if (m < 1.0) zeros_den.push_back(z);
        }
    }

    BlaschkeProduct b1 = BlaschkeProduct::make(zeros_num, 1.0, tol);
    BlaschkeProduct b2 = BlaschkeProduct::make(zeros_den, 1.0, tol);

    // pin the unimodular factor at a circle point clear of all roots
    Complex factor(1.0, 0.0);
    for (int k = 0; k < 64; ++k) {
        const Complex t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.11) / 64.0);
        const Complex denom = b1.eval(t) / b2.eval(t);
        if (std::abs(denom) < 0.5) continue;
        factor = r.eval(t) / denom;
        break;
    }
    if (std::abs(std::abs(factor) - 1.0) > tol.tol_unimod)
        raise(ErrorCode::NotInnerRatio, "residual factor is not unimodular");
    b1.unimodular_factor = factor;

    // the factorization must reproduce r on the circle
    for (int k = 0; k < 16; ++k) {
        const Complex t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.53) / 16.0);
        if (std::abs(r.eval(t) - b1.eval(t) / b2.eval(t)) > 1e-7)
            raise(ErrorCode::NotInnerRatio, "Blaschke ratio does not reproduce the function");
    }
    return {b1, b2};
}

}  // namespace bnpick
