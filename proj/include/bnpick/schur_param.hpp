#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnpick/rational.hpp"
#include "bnpick/theta.hpp"

namespace bnpick {

/// Boundary behavior of a function at a circle point: the nontangential value
/// (when one is observed) and the limit of (1-|f(z)|^2)/(1-|z|^2).
struct BoundaryData {
    enum class DKind { Finite, Infinite, Unknown };

    std::optional<Complex> value;
    DKind d_kind = DKind::Unknown;
    double d = 0.0;            // meaningful when d_kind == Finite
    double d_error = 0.0;      // reported error bar; 0 on the exact path
    double value_error = 0.0;  // error bar on the value estimate
    bool estimated = false;

    static BoundaryData finite(Complex v, double d, double err = 0.0, bool est = false) {
        return {v, DKind::Finite, d, err, 0.0, est};
    }
    static BoundaryData infinite(std::optional<Complex> v, bool est = false) {
        return {v, DKind::Infinite, 0.0, 0.0, 0.0, est};
    }
};

/// Exhaustive boundary classification of a parameter at a node.
enum class NodeCondition { C1 = 1, C2 = 2, C3 = 3, C4 = 4, C5 = 5, C6 = 6 };

const char* node_condition_name(NodeCondition c);

/// Radial sampling schedule r_k = 1 - 2^{-k} with Richardson extrapolation
/// over the trailing window.
struct RadialSchedule {
    int k_min = 4;
    int k_max = 24;
    int window = 6;
    double divergence_threshold = 1e6;
};

/// A Schur-class parameter: constant, rational, or an opaque evaluator with
/// optionally declared boundary data at specific circle points.
class SchurParameter {
public:
    enum class Kind { Constant, Rational, Opaque };

    static SchurParameter constant(Complex c, const Tolerances& tol = {});
    static SchurParameter rational(RationalFunction r, const Tolerances& tol = {});
    static SchurParameter opaque(std::function<Complex(Complex)> f, std::string name = "opaque",
                                 const Tolerances& tol = {});

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool has_rational_form() const { return kind_ != Kind::Opaque; }
    const RationalFunction& rational_form() const { return rational_; }

    Complex eval(Complex z) const;

    /// Pin the boundary data at a circle point (opaque parameters whose limits
    /// are known analytically); overrides the radial estimate.
    void declare_boundary(Complex point, BoundaryData data);
    std::optional<BoundaryData> declared_boundary(Complex point,
                                                  const Tolerances& tol = {}) const;

    /// Boundary data at t0: exact for constant/rational, declared or radial
    /// otherwise.
    BoundaryData boundary_data(Complex t0, const Tolerances& tol = {},
                               const RadialSchedule& schedule = {}) const;

private:
    Kind kind_ = Kind::Constant;
    RationalFunction rational_;                  // constant/rational carrier
    std::function<Complex(Complex)> evaluator_;  // opaque carrier
    std::string name_;
    std::vector<std::pair<Complex, BoundaryData>> declared_;
};

/// Exact boundary data of a rational function at t0: the value, and for a
/// unimodular value the Caratheodory-Julia quantity Re(t0 f'(t0) conj(f(t0)))
/// by exact differentiation; a sub-unimodular value forces d = infinity.
BoundaryData boundary_data_rational(const RationalFunction& e, Complex t0,
                                    const Tolerances& tol = {});

/// Radial estimate of the boundary data of an arbitrary disk evaluator.
/// Never throws: uncertainty is expressed in the result.
BoundaryData boundary_data_radial(const std::function<Complex(Complex)>& f, Complex t0,
                                  const RadialSchedule& schedule = {},
                                  const Tolerances& tol = {});

/// Classify the parameter at node i of the coefficient matrix into C1..C6.
/// Throws AmbiguousBoundary when an estimated value or d cannot be separated
/// from the C5/C6 equality thresholds at class_tol.
NodeCondition classify_node(const SchurParameter& e, const ThetaFunction& th, std::size_t i,
                            const Tolerances& tol = {});

}  // namespace bnpick
