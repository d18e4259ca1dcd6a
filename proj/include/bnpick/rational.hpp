#pragma once

#include <optional>
#include <vector>

#include "bnpick/polynomial.hpp"

namespace bnpick {

/// Quotient of polynomials. The denominator is kept monic; construction does
/// not cancel common roots, reduce() does. Instances are immutable apart from
/// the pole-count cache, whose fill is write-once and idempotent.
class RationalFunction {
public:
    RationalFunction();  // 0/1
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(Complex c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Complex eval(Complex z) const { return num_.eval(z) / den_.eval(z); }
    RationalFunction derivative() const;

    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator*(Complex s) const;

    std::optional<int>& poles_cache() const { return poles_cache_; }

private:
    Polynomial num_;
    Polynomial den_;
    mutable std::optional<int> poles_cache_;
};

/// Finite Blaschke product: unimodular_factor * prod (z - a_i)/(1 - conj(a_i) z),
/// all zeros strictly inside the unit disk.
struct BlaschkeProduct {
    std::vector<Complex> zeros;
    Complex unimodular_factor = 1.0;

    static BlaschkeProduct make(std::vector<Complex> zeros, Complex factor,
                                const Tolerances& tol = {});

    int degree() const { return static_cast<int>(zeros.size()); }
    Complex eval(Complex z) const;
    RationalFunction to_rational() const;
};

struct RationalMatrix2 {
    RationalFunction e11, e12, e21, e22;
};

/// Cancel numerator/denominator roots closer than tol.root_match_tol
/// (greedy nearest pair first) and renormalize to a monic denominator.
RationalFunction reduce(const RationalFunction& r, const Tolerances& tol = {});

/// Denominator roots with |root| < 1 - tol.disk_boundary_tol, counted with
/// multiplicity. Roots within the boundary band raise BoundaryPole.
int count_poles_in_disk(const RationalFunction& r, const Tolerances& tol = {});

/// reduce((theta11 e + theta12) / (theta21 e + theta22)). Known common linear
/// factors of the raw numerator and denominator at the anchor points (the
/// interpolation nodes, where the coefficient matrix has its poles) are
/// deflated exactly by synthetic division before root matching; multiple
/// circle roots are beyond what root matching alone can cancel reliably.
RationalFunction mobius_apply(const RationalMatrix2& theta, const RationalFunction& e,
                              const Tolerances& tol = {},
                              const std::vector<Complex>& cancel_anchors = {});

/// Split an inner ratio into Blaschke numerator/denominator. Throws
/// NotInnerRatio when r is not unimodular on the circle (64 samples) or the
/// factorization fails to reproduce r.
std::pair<BlaschkeProduct, BlaschkeProduct> blaschke_factorize(const RationalFunction& r,
                                                               const Tolerances& tol = {});

}  // namespace bnpick
