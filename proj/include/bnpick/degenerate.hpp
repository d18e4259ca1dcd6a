#pragma once

#include "bnpick/interpolant.hpp"

namespace bnpick {

/// The unique solution of the reduced-index problem for singular P: a ratio of
/// finite Blaschke products pinned down by an invertible principal block.
struct DegenerateSolution {
    GeneralizedSchurFunction w;  // rational
    BlaschkeProduct b1;
    BlaschkeProduct b2;
    int rank_P = 0;
    int kappa_prime = 0;  // deg b2
    Complex e0{1.0, 0.0};
    std::vector<std::size_t> pivot;      // original indices of the invertible block
    std::vector<std::size_t> non_pivot;  // original indices carrying equality conditions
};

/// Requires P singular. Selects a principal block of full rank carrying all of
/// kappa, pins the unique unimodular parameter from the remaining nodes, and
/// returns the induced solution factorized into Blaschke products.
DegenerateSolution solve_degenerate(const PickSystem& sys, const Tolerances& tol = {});

/// Classical positive-semidefinite singular case: the Blaschke product
///   w(z) = x*(I - z T*)^{-1} E* / x*(I - z T*)^{-1} C*,   P x = 0,
/// with the kernel vector chosen sparse so the raw degree is already rank P.
RationalFunction classical_singular_solution(const PickSystem& sys, const Tolerances& tol = {});

struct DegenerateReport {
    bool unimodular_ok = false;
    bool degree_ok = false;
    bool equality_ok = false;
    bool fmi_ok = false;
    double max_unimod_dev = 0.0;
    int fmi_n_neg = 0;
    std::vector<std::size_t> failed_nodes;

    bool all_ok() const { return unimodular_ok && degree_ok && equality_ok && fmi_ok; }
};

/// Re-derives every property the construction promises: unimodularity on the
/// circle, the degree identity, equality conditions at the non-pivot nodes,
/// and the sampled kernel signature.
DegenerateReport verify_degenerate(const DegenerateSolution& sol, const PickSystem& sys,
                                   const Tolerances& tol = {});

}  // namespace bnpick
