#include "bnpick/pick.hpp"

#include <cmath>
#include <string>

namespace bnpick {

InterpolationData InterpolationData::create(std::vector<Complex> nodes,
                                            std::vector<Complex> values,
                                            std::vector<double> gammas, const Tolerances& tol) {
    if (nodes.size() != values.size() || nodes.size() != gammas.size())
        raise(ErrorCode::DataInvalid, "nodes/values/gammas lengths differ");
    if (nodes.empty()) raise(ErrorCode::DataInvalid, "empty data set");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (std::abs(std::abs(nodes[i]) - 1.0) > tol.tol_unimod)
            raise(ErrorCode::DataInvalid, "node " + std::to_string(i) + " is not unimodular");
        if (std::abs(std::abs(values[i]) - 1.0) > tol.tol_unimod)
            raise(ErrorCode::DataInvalid, "value " + std::to_string(i) + " is not unimodular");
        if (!std::isfinite(gammas[i]))
            raise(ErrorCode::DataInvalid, "gamma " + std::to_string(i) + " is not finite");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (std::abs(nodes[i] - nodes[j]) <= tol.node_sep_tol)
                raise(ErrorCode::DataInvalid, "nodes " + std::to_string(i) + " and " +
                                                  std::to_string(j) + " coincide");
    InterpolationData d;
    d.nodes = std::move(nodes);
    d.values = std::move(values);
    d.gammas = std::move(gammas);
    return d;
}

InterpolationData InterpolationData::permuted(const std::vector<std::size_t>& order) const {
    InterpolationData d;
    d.nodes.reserve(order.size());
    for (std::size_t k : order) {
        d.nodes.push_back(nodes[k]);
        d.values.push_back(values[k]);
        d.gammas.push_back(gammas[k]);
    }
    return d;
}

ComplexMatrix PickSystem::CE() const {
    ComplexMatrix m(2, n());
    for (std::size_t j = 0; j < n(); ++j) {
        m.at(0, j) = data.values[j];
        m.at(1, j) = 1.0;
    }
    return m;
}

PickSystem build_pick_system(const InterpolationData& data, const Tolerances& tol) {
    const std::size_t n = data.n();
    PickSystem sys;
    sys.data = data;
    sys.P = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.P.at(i, i) = data.gammas[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex pij = (1.0 - std::conj(data.values[i]) * data.values[j]) /
                                (1.0 - std::conj(data.nodes[i]) * data.nodes[j]);
            sys.P.at(i, j) = pij;
            sys.P.at(j, i) = std::conj(pij);
        }
    }
    sys.sig = signature(sys.P, -1.0, tol);
    sys.kappa = sys.sig.n_neg;
    if (sys.sig.invertible()) {
        sys.P_inv = invert(sys.P, tol);
        sys.p_tilde_diag.resize(n);
        for (std::size_t i = 0; i < n; ++i) sys.p_tilde_diag[i] = sys.P_inv->at(i, i).real();
    }
    return sys;
}

double verify_stein(const PickSystem& sys) {
    const std::size_t n = sys.n();
    const ComplexMatrix T = sys.T();
    const ComplexMatrix lhs = sys.P - T.adjoint() * sys.P * T;
    ComplexMatrix rhs(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rhs.at(i, j) = 1.0 - std::conj(sys.data.values[i]) * sys.data.values[j];
    return (lhs - rhs).max_abs();
}

FeasibilityResult omission_feasibility(const PickSystem& sys,
                                       const std::vector<std::size_t>& node_indices,
                                       const Tolerances& tol) {
    if (!sys.invertible()) raise(ErrorCode::SingularPick, "P is singular");
    if (node_indices.empty()) return {Feasibility::Many, 0};
    for (std::size_t k : node_indices)
        if (k >= sys.n()) raise(ErrorCode::DataInvalid, "node index out of range");
    const ComplexMatrix sub = sys.P_inv->select(node_indices, node_indices);
    // zero threshold scaled by the full inverse, not by the submatrix: a zero
    // diagonal entry must classify as zero even when it dominates the submatrix
    const double cut = tol.zero_tol * std::max(sys.P_inv->max_abs(), 1e-300);
    const Signature s = signature(sub, cut, tol);
    if (s.negative_definite()) return {Feasibility::Many, 0};
    if (s.negative_semidefinite()) return {Feasibility::Unique, s.rank()};
    return {Feasibility::Infeasible, 0};
}

bool problems_equivalent(const PickSystem& sys, const Tolerances& tol) {
    if (!sys.invertible()) raise(ErrorCode::SingularPick, "P is singular");
    const double cut = tol.zero_tol * std::max(sys.P_inv->max_abs(), 1e-300);
    for (double v : sys.p_tilde_diag)
        if (v <= cut) return false;
    return true;
}

}  // namespace bnpick
