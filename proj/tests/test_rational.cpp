#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bnpick/rational.hpp"

using namespace bnpick;

namespace {

const Complex I(0.0, 1.0);

bool contains_root(const std::vector<Complex>& roots, Complex want, double tol = 1e-9) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](Complex r) { return std::abs(r - want) < tol; });
}

Complex random_disk_point(std::mt19937_64& rng, double rmax = 0.9) {
    std::uniform_real_distribution<double> ur(0.0, rmax), uphi(0.0, 2.0 * std::numbers::pi);
    return std::polar(ur(rng), uphi(rng));
}

}  // namespace

TEST_CASE("poly_roots reference cases") {
    SUBCASE("z^2 - 1") {
        const auto roots = poly_roots(Polynomial({-1.0, 0.0, 1.0}));
        REQUIRE(roots.size() == 2);
        CHECK(contains_root(roots, 1.0));
        CHECK(contains_root(roots, -1.0));
    }
    SUBCASE("iz + 1 - 2i") {
        const auto roots = poly_roots(Polynomial({1.0 - 2.0 * I, I}));
        REQUIRE(roots.size() == 1);
        CHECK(contains_root(roots, 2.0 + I));
    }
    SUBCASE("double root (z-0.5)^2 (z+2)") {
        const Polynomial p = Polynomial::from_roots({0.5, 0.5, -2.0});
        const auto roots = poly_roots(p);
        REQUIRE(roots.size() == 3);
        CHECK(contains_root(roots, -2.0));
        int near_half = 0;
        for (const auto& r : roots)
            if (std::abs(r - Complex(0.5)) < 1e-6) ++near_half;
        CHECK(near_half == 2);
    }
    SUBCASE("zero polynomial") {
        CHECK_THROWS_WITH_AS(poly_roots(Polynomial()), doctest::Contains("ZeroPolynomial"),
                             Error);
    }
    SUBCASE("residual bound at every root") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Complex> want;
            const int deg = 1 + static_cast<int>(rng() % 8);
            for (int k = 0; k < deg; ++k) want.push_back(random_disk_point(rng, 2.0));
            const Polynomial p = Polynomial::from_roots(want, Complex(1.3, -0.4));
            for (const auto& r : poly_roots(p))
                CHECK(std::abs(p.eval(r)) < 1e-8 * p.max_coeff_abs());
        }
    }
}

TEST_CASE("reduce reference cases") {
    const Tolerances tol;
    SUBCASE("(z^2-1)/(z-1) = z+1") {
        const RationalFunction r(Polynomial({-1.0, 0.0, 1.0}), Polynomial({-1.0, 1.0}));
        const RationalFunction red = reduce(r);
        CHECK(red.num().degree() == 1);
        CHECK(red.den().degree() == 0);
        CHECK(std::abs(red.eval(0.3) - Complex(1.3)) < 1e-12);
    }
    SUBCASE("exact cancellation down to a constant") {
        // (2iz^2 - 4iz + 2i) / (-2iz^2 + 4iz - 2i) == -1
        const RationalFunction r(Polynomial({2.0 * I, -4.0 * I, 2.0 * I}),
                                 Polynomial({-2.0 * I, 4.0 * I, -2.0 * I}));
        const RationalFunction red = reduce(r);
        CHECK(red.num().degree() == 0);
        CHECK(red.den().degree() == 0);
        CHECK(std::abs(red.eval(0.1 + 0.2 * I) - Complex(-1.0)) < 1e-12);
    }
    SUBCASE("already reduced input is unchanged") {
        const RationalFunction r(Polynomial({1.0, 1.0}), Polynomial({0.5, 0.0, 1.0}));
        const RationalFunction red = reduce(r);
        CHECK(red.num().degree() == r.num().degree());
        CHECK(red.den().degree() == r.den().degree());
    }
    SUBCASE("reduce preserves values at random points") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Complex> shared, extra_n, extra_d;
            for (int k = 0; k < 2; ++k) shared.push_back(random_disk_point(rng, 1.8));
            for (int k = 0; k < 2; ++k) extra_n.push_back(random_disk_point(rng, 1.8));
            for (int k = 0; k < 2; ++k) extra_d.push_back(random_disk_point(rng, 1.8) + 2.0);
            std::vector<Complex> nroots = shared, droots = shared;
            nroots.insert(nroots.end(), extra_n.begin(), extra_n.end());
            droots.insert(droots.end(), extra_d.begin(), extra_d.end());
            const RationalFunction r(Polynomial::from_roots(nroots, Complex(0.7, 0.1)),
                                     Polynomial::from_roots(droots));
            const RationalFunction red = reduce(r);
            CHECK(red.den().degree() == 2);
            for (int k = 0; k < 16; ++k) {
                const Complex z = random_disk_point(rng, 0.95);
                const Complex a = r.eval(z), b = red.eval(z);
                if (!std::isfinite(std::abs(a))) continue;
                CHECK(std::abs(a - b) < tol.tol_eval * (1.0 + std::abs(a)));
            }
        }
    }
}

TEST_CASE("count_poles_in_disk reference cases") {
    SUBCASE("pole outside the disk") {
        const RationalFunction r(Polynomial({-I, 1.0}), Polynomial({1.0 - 2.0 * I, I}));
        CHECK(count_poles_in_disk(r) == 0);
    }
    SUBCASE("1/z") {
        const RationalFunction r(Polynomial({1.0}), Polynomial({0.0, 1.0}));
        CHECK(count_poles_in_disk(r) == 1);
    }
    SUBCASE("pole on the circle") {
        const RationalFunction r(Polynomial({1.0}), Polynomial({-1.0, 1.0}));
        CHECK_THROWS_WITH_AS(count_poles_in_disk(r), doctest::Contains("BoundaryPole"), Error);
    }
}

TEST_CASE("mobius_apply identity and composition") {
    std::mt19937_64 rng(23);
    const Tolerances tol;
    auto random_rational = [&](int nd, int dd) {
        std::vector<Complex> nr, dr;
        for (int k = 0; k < nd; ++k) nr.push_back(random_disk_point(rng, 1.5));
        for (int k = 0; k < dd; ++k) dr.push_back(random_disk_point(rng, 0.7) + 2.5);
        return RationalFunction(Polynomial::from_roots(nr, Complex(0.4, 0.2)),
                                Polynomial::from_roots(dr));
    };

    SUBCASE("identity coefficient matrix returns the parameter") {
        RationalMatrix2 eye{RationalFunction::constant(1.0), RationalFunction(),
                            RationalFunction(), RationalFunction::constant(1.0)};
        const RationalFunction e = random_rational(2, 2);
        const RationalFunction w = mobius_apply(eye, e);
        for (int k = 0; k < 16; ++k) {
            const Complex z = random_disk_point(rng);
            CHECK(std::abs(w.eval(z) - e.eval(z)) < tol.tol_eval * (1.0 + std::abs(e.eval(z))));
        }
    }

    SUBCASE("composition law") {
        // coefficient matrices whose entries share one denominator, as the
        // interpolation coefficient matrices do
        auto random_matrix = [&]() {
            std::vector<Complex> dr{random_disk_point(rng, 0.5) + 2.0,
                                    random_disk_point(rng, 0.5) - 2.0};
            const Polynomial den = Polynomial::from_roots(dr);
            auto entry = [&](Complex scale, bool near_identity) {
                Polynomial num({Complex(0.2) * scale * random_disk_point(rng, 1.0),
                                scale * random_disk_point(rng, 1.0)});
                if (near_identity) num = num + den;
                return RationalFunction(num, den);
            };
            RationalMatrix2 m;
            m.e11 = entry(1.0, true);
            m.e12 = entry(0.2, false);
            m.e21 = entry(0.05, false);
            m.e22 = entry(1.0, true);
            return m;
        };
        for (int trial = 0; trial < 4; ++trial) {
            const RationalMatrix2 t1 = random_matrix();
            const RationalMatrix2 t2 = random_matrix();
            const RationalFunction e = random_rational(1, 1) * Complex(0.3);
            RationalMatrix2 prod;
            prod.e11 = t1.e11 * t2.e11 + t1.e12 * t2.e21;
            prod.e12 = t1.e11 * t2.e12 + t1.e12 * t2.e22;
            prod.e21 = t1.e21 * t2.e11 + t1.e22 * t2.e21;
            prod.e22 = t1.e21 * t2.e12 + t1.e22 * t2.e22;
            const RationalFunction lhs = mobius_apply(prod, e);
            const RationalFunction rhs = mobius_apply(t1, mobius_apply(t2, e));
            for (int k = 0; k < 16; ++k) {
                const Complex z = random_disk_point(rng);
                const Complex a = lhs.eval(z), b = rhs.eval(z);
                CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(a)));
            }
        }
    }

    SUBCASE("degenerate denominator is rejected") {
        RationalMatrix2 m{RationalFunction::constant(1.0), RationalFunction(),
                          RationalFunction::constant(1.0), RationalFunction()};
        CHECK_THROWS_WITH_AS(mobius_apply(m, RationalFunction()),
                             doctest::Contains("DegenerateDenominator"), Error);
    }
}

TEST_CASE("blaschke products are unimodular on the circle") {
    std::mt19937_64 rng(31);
    const Tolerances tol;
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Complex> zeros;
        const int deg = static_cast<int>(rng() % 4);
        for (int k = 0; k < deg; ++k) zeros.push_back(random_disk_point(rng, 0.8));
        const BlaschkeProduct b =
            BlaschkeProduct::make(zeros, std::polar(1.0, 0.3 * trial), tol);
        for (int k = 0; k < 64; ++k) {
            const Complex t = std::polar(1.0, 2.0 * std::numbers::pi * k / 64.0);
            CHECK(std::abs(std::abs(b.eval(t)) - 1.0) < tol.tol_unimod);
        }
    }
}

TEST_CASE("blaschke_factorize reference cases") {
    SUBCASE("r(z) = z") {
        const RationalFunction r(Polynomial({0.0, 1.0}), Polynomial::constant(1.0));
        const auto [b1, b2] = blaschke_factorize(r);
        CHECK(b1.degree() == 1);
        CHECK(b2.degree() == 0);
        CHECK(std::abs(b1.zeros[0]) < 1e-12);
    }
    SUBCASE("constant -1") {
        const auto [b1, b2] = blaschke_factorize(RationalFunction::constant(-1.0));
        CHECK(b1.degree() == 0);
        CHECK(b2.degree() == 0);
        CHECK(std::abs(b1.unimodular_factor + 1.0) < 1e-12);
    }
    SUBCASE("non-inner function is rejected") {
        const RationalFunction r(Polynomial({-I, 1.0}), Polynomial({1.0 - 2.0 * I, I}));
        CHECK_THROWS_WITH_AS(blaschke_factorize(r), doctest::Contains("NotInnerRatio"), Error);
    }
    SUBCASE("ratio of products round-trips") {
        std::mt19937_64 rng(41);
        const Tolerances tol;
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Complex> z1, z2;
            for (int k = 0; k < 2; ++k) z1.push_back(random_disk_point(rng, 0.75));
            z2.push_back(random_disk_point(rng, 0.75));
            const BlaschkeProduct a = BlaschkeProduct::make(z1, std::polar(1.0, 1.1), tol);
            const BlaschkeProduct b = BlaschkeProduct::make(z2, 1.0, tol);
            const RationalFunction r =
                reduce(RationalFunction(a.to_rational().num() * b.to_rational().den(),
                                        a.to_rational().den() * b.to_rational().num()),
                       tol);
            const auto [b1, b2] = blaschke_factorize(r, tol);
            CHECK(b1.degree() + b2.degree() == 3);
            for (int k = 0; k < 16; ++k) {
                const Complex z = random_disk_point(rng, 0.6);
                const Complex want = a.eval(z) / b.eval(z);
                CHECK(std::abs(b1.eval(z) / b2.eval(z) - want) < 1e-8);
            }
        }
    }
}
