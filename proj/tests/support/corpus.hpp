#pragma once

#include <random>
#include <vector>

#include "bnpick/pick.hpp"
#include "bnpick/rational.hpp"

// Shared generators for the randomized suites. Everything is driven by the
// caller's engine so runs stay reproducible.
namespace testsupport {

using bnpick::Complex;
using bnpick::InterpolationData;
using bnpick::PickSystem;
using bnpick::RationalFunction;

/// Random boundary data: distinct well-separated unimodular nodes, unimodular
/// targets, gammas in [-3, 3].
InterpolationData random_data(std::mt19937_64& rng, std::size_t n);

/// Random data whose Pick matrix is invertible and not too ill-conditioned;
/// the cap keeps the 1e-10 identity checks clear of roundoff amplification.
PickSystem random_invertible_system(std::mt19937_64& rng, std::size_t n,
                                    double cond_cap = 1e3);

/// Random finite Blaschke product of the given degree times a unimodular
/// constant; a Schur-class function with unimodular boundary values.
RationalFunction random_blaschke(std::mt19937_64& rng, int degree);

/// Rational Schur function with value `boundary_value` and Caratheodory-Julia
/// quantity `d_target` (> 0) at the circle point t0: a rotated disk factor.
RationalFunction schur_with_boundary(Complex t0, Complex boundary_value, double d_target);

/// The worked two-point reference problem: t = [1,-1], w = [1,-1], gamma = [1,0].
InterpolationData reference_data();

}  // namespace testsupport
