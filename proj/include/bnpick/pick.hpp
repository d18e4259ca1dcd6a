#pragma once

#include <optional>
#include <vector>

#include "bnpick/hermitian.hpp"

namespace bnpick {

/// Boundary interpolation data: unimodular nodes t_i, unimodular targets w_i,
/// real derivative bounds gamma_i.
struct InterpolationData {
    std::vector<Complex> nodes;
    std::vector<Complex> values;
    std::vector<double> gammas;

    std::size_t n() const { return nodes.size(); }

    /// Validates unimodularity, node separation and matching lengths.
    static InterpolationData create(std::vector<Complex> nodes, std::vector<Complex> values,
                                    std::vector<double> gammas, const Tolerances& tol = {});

    InterpolationData permuted(const std::vector<std::size_t>& order) const;
};

/// The Pick matrix together with the state-space data of the problem.
/// T is diagonal over the nodes, E the all-ones row, C the row of targets.
struct PickSystem {
    InterpolationData data;
    ComplexMatrix P;
    Signature sig;
    int kappa = 0;
    std::optional<ComplexMatrix> P_inv;   // absent when P is singular
    std::vector<double> p_tilde_diag;     // diag of P^{-1}; empty when singular

    std::size_t n() const { return data.n(); }
    bool invertible() const { return P_inv.has_value(); }

    ComplexMatrix T() const { return ComplexMatrix::diagonal(data.nodes); }
    /// [C; E] stacked 2 x n
    ComplexMatrix CE() const;
};

PickSystem build_pick_system(const InterpolationData& data, const Tolerances& tol = {});

/// Max-entry residual of P - T* P T - (E*E - C*C).
double verify_stein(const PickSystem& sys);

enum class Feasibility { Many, Unique, Infeasible };

struct FeasibilityResult {
    Feasibility kind;
    int degree = 0;  // Blaschke degree of the unique parameter when kind == Unique
};

/// Can interpolation be dropped exactly at the given nodes? Decided by the
/// inertia of the corresponding principal submatrix of P^{-1}.
FeasibilityResult omission_feasibility(const PickSystem& sys,
                                       const std::vector<std::size_t>& node_indices,
                                       const Tolerances& tol = {});

/// True iff the relaxed and the strict problem have the same solution set,
/// i.e. every diagonal entry of P^{-1} is positive.
bool problems_equivalent(const PickSystem& sys, const Tolerances& tol = {});

}  // namespace bnpick
