#include "doctest.h"

#include <cmath>
#include <numeric>

#include "bnpick/pick.hpp"
#include "support/corpus.hpp"

using namespace bnpick;

namespace {

PickSystem reference_system() {
    // t = [1, -1], w = [1, -1], gamma = [1, 0]
    return build_pick_system(InterpolationData::create({1.0, -1.0}, {1.0, -1.0}, {1.0, 0.0}));
}

}  // namespace

TEST_CASE("build_pick_system reference problem") {
    const PickSystem sys = reference_system();
    CHECK(sys.P.at(0, 0) == Complex(1.0));
    CHECK(sys.P.at(0, 1) == Complex(1.0));
    CHECK(sys.P.at(1, 0) == Complex(1.0));
    CHECK(sys.P.at(1, 1) == Complex(0.0));
    CHECK(sys.kappa == 1);
    REQUIRE(sys.invertible());
    const ComplexMatrix want{{0.0, 1.0}, {1.0, -1.0}};
    CHECK((*sys.P_inv - want).max_abs() < 1e-12);
    CHECK(sys.p_tilde_diag[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sys.p_tilde_diag[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("build_pick_system singular cases") {
    SUBCASE("one-point zero gamma") {
        const PickSystem sys =
            build_pick_system(InterpolationData::create({1.0}, {1.0}, {0.0}));
        CHECK(sys.kappa == 0);
        CHECK(!sys.invertible());
        CHECK(sys.sig.n_zero == 1);
    }
    SUBCASE("rank-one two-point system") {
        const PickSystem sys = build_pick_system(
            InterpolationData::create({1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}));
        CHECK(sys.P.at(0, 1) == Complex(1.0));
        CHECK(sys.kappa == 0);
        CHECK(!sys.invertible());
        CHECK(sys.sig.rank() == 1);
    }
}

TEST_CASE("data validation") {
    CHECK_THROWS_WITH_AS(InterpolationData::create({Complex(0.5, 0.0)}, {1.0}, {0.0}),
                         doctest::Contains("DataInvalid"), Error);
    CHECK_THROWS_WITH_AS(InterpolationData::create({1.0, 1.0}, {1.0, -1.0}, {0.0, 0.0}),
                         doctest::Contains("DataInvalid"), Error);
    CHECK_THROWS_WITH_AS(InterpolationData::create({1.0, -1.0}, {1.0}, {0.0, 0.0}),
                         doctest::Contains("DataInvalid"), Error);
}

TEST_CASE("verify_stein") {
    SUBCASE("reference system") { CHECK(verify_stein(reference_system()) < 1e-12); }
    SUBCASE("perturbed P shows the perturbation") {
        // diagonal perturbations cancel identically in P - T*PT, because
        // |t_i| = 1; an off-diagonal bump is what the residual can see
        PickSystem sys = reference_system();
        sys.P.at(0, 1) += 1e-3;
        const double expected = 1e-3 * std::abs(1.0 - std::conj(sys.data.nodes[0]) *
                                                          sys.data.nodes[1]);
        CHECK(verify_stein(sys) == doctest::Approx(expected).epsilon(1e-6));
    }
    SUBCASE("random data satisfies the identity to roundoff") {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 24; ++trial) {
            const PickSystem sys =
                build_pick_system(testsupport::random_data(rng, 2 + trial % 3));
            CHECK(verify_stein(sys) < 1e-12);
        }
    }
}

TEST_CASE("omission_feasibility on the reference problem") {
    const PickSystem sys = reference_system();
    SUBCASE("node 0: p~_11 = 0, unique") {
        const FeasibilityResult r = omission_feasibility(sys, {0});
        CHECK(r.kind == Feasibility::Unique);
        CHECK(r.degree == 0);
    }
    SUBCASE("node 1: p~_22 = -1, many") {
        const FeasibilityResult r = omission_feasibility(sys, {1});
        CHECK(r.kind == Feasibility::Many);
    }
    SUBCASE("both nodes: indefinite submatrix, infeasible") {
        const FeasibilityResult r = omission_feasibility(sys, {0, 1});
        CHECK(r.kind == Feasibility::Infeasible);
    }
    SUBCASE("singular system is refused") {
        const PickSystem sing =
            build_pick_system(InterpolationData::create({1.0}, {1.0}, {0.0}));
        CHECK_THROWS_WITH_AS(omission_feasibility(sing, {0}),
                             doctest::Contains("SingularPick"), Error);
    }
}

TEST_CASE("problems_equivalent") {
    CHECK(!problems_equivalent(reference_system()));  // p~_11 = 0
    const PickSystem one =
        build_pick_system(InterpolationData::create({1.0}, {1.0}, {2.0}));
    CHECK(problems_equivalent(one));  // 1x1, inverse diagonal 1/2 > 0
    const PickSystem neg =
        build_pick_system(InterpolationData::create({1.0}, {1.0}, {-2.0}));
    CHECK(!problems_equivalent(neg));
}

TEST_CASE("kappa is invariant under node relabeling") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const InterpolationData data = testsupport::random_data(rng, 3 + trial % 2);
        const PickSystem sys = build_pick_system(data);
        std::vector<std::size_t> order(data.n());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const PickSystem permuted = build_pick_system(data.permuted(order));
        CHECK(permuted.kappa == sys.kappa);
        CHECK(permuted.sig.n_zero == sys.sig.n_zero);
        // diagonal reads back gamma exactly
        for (std::size_t i = 0; i < data.n(); ++i)
            CHECK(permuted.P.at(i, i) == Complex(data.gammas[order[i]]));
    }
}
