#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bnpick/schur_param.hpp"

namespace bnpick {

/// An interpolant candidate: rational with an exact pole count, or an opaque
/// evaluator whose negative squares can only be bounded from below by sampling.
class GeneralizedSchurFunction {
public:
    static GeneralizedSchurFunction from_rational(RationalFunction w, std::string provenance = "");
    static GeneralizedSchurFunction from_evaluator(std::function<Complex(Complex)> f,
                                                   std::string provenance = "");

    bool is_rational() const { return rational_.has_value(); }
    const RationalFunction& rational_form() const { return *rational_; }
    Complex eval(Complex z) const;

    /// Exact pole count in the open disk (rational only; BoundaryPole applies).
    int neg_squares(const Tolerances& tol = {}) const;

    const std::string& provenance() const { return provenance_; }

private:
    std::optional<RationalFunction> rational_;
    std::function<Complex(Complex)> evaluator_;
    std::string provenance_;
};

/// w = (theta11 e + theta12) / (theta21 e + theta22). Rational parameters go
/// through the closed form; opaque ones yield an opaque interpolant.
GeneralizedSchurFunction apply_parameter(const ThetaFunction& th, const SchurParameter& e,
                                         const Tolerances& tol = {});

/// What the classification dictates for the interpolant at a node.
struct NodePrediction {
    enum class Kind {
        EqualityBoth,   // d_w = gamma_i and w(t_i) = w_i          (C1, C2)
        DBelowGamma,    // d_w < gamma_i, value matches            (C3)
        DAboveGamma,    // gamma_i < d_w < inf, value matches      (C4)
        TriState,       // no limit | value mismatch | d = inf     (C5)
        ValueMismatch,  // d_w finite, w(t_i) != w_i               (C6)
    };
    Kind kind;
    std::optional<double> d;
    std::optional<Complex> value;
};

/// Quantitative form: for C3/C4, d_w(t_i) = gamma_i - 1/(p~_ii + |e~_i|^2 d_e).
NodePrediction predict_node_behavior(NodeCondition cond, const ThetaFunction& th, std::size_t i,
                                     std::optional<double> d_param);

struct NodeReport {
    std::size_t index = 0;
    std::optional<NodeCondition> condition;  // present when a parameter was classified
    std::optional<NodePrediction> predicted;
    BoundaryData observed;
    bool satisfied = false;  // w(t_i) = w_i and d_w(t_i) <= gamma_i
    bool equality = false;   // w(t_i) = w_i and d_w(t_i) = gamma_i
    std::string flag;        // "", "no-unimodular-limit", "d-divergent", "no-radial-limit", ...
};

struct SolutionMembership {
    bool in_S13 = false;  // equality problem
    bool in_S14 = false;  // relaxed problem, full index
    bool in_S16 = false;  // relaxed problem, reduced index allowed
    bool estimated = false;
};

struct VerificationReport {
    std::vector<NodeReport> nodes;
    SolutionMembership membership;
    int kappa = 0;
    std::optional<int> neg_squares;      // exact when rational
    int neg_squares_lower_bound = 0;     // kernel-sampled
    bool neg_squares_estimated = false;
};

VerificationReport verify_interpolation(const GeneralizedSchurFunction& w, const PickSystem& sys,
                                        const Tolerances& tol = {});

/// Like verify_interpolation, but attaches the per-node classification and
/// predictions of the parameter that produced w.
VerificationReport verify_interpolation(const GeneralizedSchurFunction& w, const PickSystem& sys,
                                        const ThetaFunction& th, const SchurParameter& e,
                                        const Tolerances& tol = {});

struct NegSquaresReport {
    int ell = 0;        // nodes classified C4-C6
    int predicted = 0;  // kappa - ell
    std::optional<int> exact;
    int lower_bound = 0;
    bool consistent = false;
};

NegSquaresReport negative_squares_count(const GeneralizedSchurFunction& w, const PickSystem& sys,
                                        const std::vector<NodeCondition>& conditions,
                                        const Tolerances& tol = {});

/// Seeded sample grid at radii 0.3/0.6 (and 0.45 for larger counts); points
/// landing within 1e-3 of a pole of a rational w are rotated clear.
std::vector<Complex> fmi_grid(std::size_t count, const GeneralizedSchurFunction* w = nullptr,
                              const Tolerances& tol = {});

/// Signature of the sampled block kernel: P bordered by the state-space
/// columns and the scalar kernel of w over the grid.
Signature fmi_kernel_check(const GeneralizedSchurFunction& w, const PickSystem& sys,
                           const std::vector<Complex>& grid, const Tolerances& tol = {});

}  // namespace bnpick
