#include "bnpick/degenerate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace bnpick {

namespace {

double abs_det_of_principal(const ComplexMatrix& p, const std::vector<std::size_t>& idx,
                            const Tolerances& tol) {
    const ComplexMatrix sub = p.select(idx, idx);
    double d = 1.0;
    for (double lam : hermitian_eigen(sub, tol).values) d *= std::abs(lam);
    return d;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t r = c.size();
    for (std::size_t i = r; i-- > 0;) {
        if (c[i] < n - r + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool pivot_admissible(const PickSystem& sys, const std::vector<std::size_t>& idx,
                      double zero_cut, const Tolerances& tol) {
    const Signature s = signature(sys.P.select(idx, idx), zero_cut, tol);
    return s.invertible() && s.n_neg == sys.kappa;
}

std::vector<std::size_t> select_pivot(const PickSystem& sys, std::size_t rank,
                                      const Tolerances& tol) {
    const std::size_t n = sys.n();
    const double zero_cut = tol.zero_tol * std::max(sys.P.max_abs(), 1e-300);

    // greedy growth by largest |det| of the principal block
    std::vector<std::size_t> chosen;
    std::vector<bool> used(n, false);
    for (std::size_t step = 0; step < rank; ++step) {
        double best = -1.0;
        std::size_t who = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            std::vector<std::size_t> cand = chosen;
            cand.push_back(j);
            std::sort(cand.begin(), cand.end());
            const double d = abs_det_of_principal(sys.P, cand, tol);
            if (d > best) {
                best = d;
                who = j;
            }
        }
        used[who] = true;
        chosen.push_back(who);
    }
    std::sort(chosen.begin(), chosen.end());
    if (pivot_admissible(sys, chosen, zero_cut, tol)) return chosen;

    // exhaustive fallback in lexicographic order
    std::vector<std::size_t> c(rank);
    std::iota(c.begin(), c.end(), 0);
    do {
        if (pivot_admissible(sys, c, zero_cut, tol)) return c;
    } while (next_combination(c, n));
    raise(ErrorCode::PivotFailure,
          "no principal block of full rank carries all negative eigenvalues");
}

}  // namespace

DegenerateSolution solve_degenerate(const PickSystem& sys, const Tolerances& tol) {
    if (sys.sig.n_zero == 0) raise(ErrorCode::NotSingular, "P is invertible");
    const std::size_t n = sys.n();
    const std::size_t rank = static_cast<std::size_t>(sys.sig.rank());

    DegenerateSolution sol;
    sol.rank_P = static_cast<int>(rank);

    if (rank == 0) {
        // P = 0 forces equal targets and zero gammas
        const double scale = std::max(1.0, sys.P.max_abs());
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(sys.data.values[i] - sys.data.values[0]) > tol.tol_unimod ||
                std::abs(sys.data.gammas[i]) > tol.zero_tol * scale)
                raise(ErrorCode::DataInconsistent,
                      "rank-zero data must pin one constant with zero derivative bounds");
        }
        sol.e0 = sys.data.values[0];
        sol.b1 = BlaschkeProduct::make({}, sys.data.values[0], tol);
        sol.b2 = BlaschkeProduct::make({}, 1.0, tol);
        sol.kappa_prime = 0;
        sol.non_pivot.resize(n);
        std::iota(sol.non_pivot.begin(), sol.non_pivot.end(), 0);
        sol.w = GeneralizedSchurFunction::from_rational(
            RationalFunction::constant(sys.data.values[0]), "degenerate rank-0");
        return sol;
    }

    sol.pivot = select_pivot(sys, rank, tol);
    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(sol.pivot.begin(), sol.pivot.end(), j))
            sol.non_pivot.push_back(j);

    const PickSystem sub = build_pick_system(sys.data.permuted(sol.pivot), tol);
    const Complex mu = auto_select_mu(sys.data);  // clear of every original node
    const ThetaFunction th1 = build_theta(sub, mu, tol);

    // pinned parameter from the dropped nodes
    std::vector<Complex> ratios;
    for (std::size_t k : sol.non_pivot) {
        const Complex t = sys.data.nodes[k];
        const Complex w_k = sys.data.values[k];
        const Matrix2 inv = theta_inverse_eval(th1, t, tol);
        const Complex a = inv.a11 * w_k + inv.a12;
        const Complex b = inv.a21 * w_k + inv.a22;
        if (std::abs(a) < tol.tol_deg || std::abs(std::abs(a) - std::abs(b)) >
                                             tol.tol_deg * std::max(1.0, std::abs(a)))
            raise(ErrorCode::RatioInconsistent,
                  "dropped node does not pin a unimodular parameter");
        ratios.push_back(a / b);
    }
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (std::abs(ratios[i] - ratios[0]) > tol.tol_deg)
            raise(ErrorCode::RatioInconsistent, "dropped nodes pin conflicting parameters");
    Complex e0 = 0.0;
    for (const Complex& r : ratios) e0 += r;
    e0 /= static_cast<double>(ratios.size());
    e0 /= std::abs(e0);
    sol.e0 = e0;

    RationalFunction w = mobius_apply(th1.closed_form, RationalFunction::constant(e0), tol,
                                      sys.data.nodes);
    auto [b1, b2] = blaschke_factorize(w, tol);
    sol.b1 = std::move(b1);
    sol.b2 = std::move(b2);
    sol.kappa_prime = sol.b2.degree();
    sol.w = GeneralizedSchurFunction::from_rational(std::move(w), "degenerate");
    return sol;
}

RationalFunction classical_singular_solution(const PickSystem& sys, const Tolerances& tol) {
    if (sys.sig.n_neg > 0)
        raise(ErrorCode::NotPositive, "P has negative eigenvalues; use the indefinite solver");
    if (sys.sig.n_zero == 0) raise(ErrorCode::NotSingular, "P is invertible");
    const std::size_t n = sys.n();
    const std::size_t null_dim = static_cast<std::size_t>(sys.sig.n_zero);

    const HermitianEigen eig = hermitian_eigen(sys.P, tol);
    ComplexMatrix kernel(n, null_dim);  // columns spanning ker P
    for (std::size_t j = 0; j < null_dim; ++j)
        for (std::size_t i = 0; i < n; ++i) kernel.at(i, j) = eig.vectors.at(i, j);

    // pick x in ker P with null_dim - 1 zero coordinates so the raw degree is
    // already rank P; for a single kernel direction the eigenvector itself works
    std::vector<Complex> x(n, 0.0);
    if (null_dim == 1) {
        for (std::size_t i = 0; i < n; ++i) x[i] = kernel.at(i, 0);
    } else {
        std::vector<std::size_t> rows(null_dim - 1);
        std::iota(rows.begin(), rows.end(), 0);
        bool found = false;
        do {
            // null vector of the (null_dim-1) x null_dim row restriction via
            // the smallest eigenvector of A* A
            ComplexMatrix a(null_dim - 1, null_dim);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t j = 0; j < null_dim; ++j) a.at(r, j) = kernel.at(rows[r], j);
            const ComplexMatrix gram = a.adjoint() * a;
            const HermitianEigen ge = hermitian_eigen(gram, tol);
            double norm2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                Complex acc = 0.0;
                for (std::size_t j = 0; j < null_dim; ++j)
                    acc += kernel.at(i, j) * ge.vectors.at(j, 0);
                x[i] = acc;
                norm2 += std::norm(acc);
            }
            if (norm2 > 1e-16) {
                found = true;
                break;
            }
        } while (next_combination(rows, n));
        if (!found)
            raise(ErrorCode::NumericalBreakdown, "no sparse kernel vector could be formed");
    }

    // drop coordinates that vanish so no spurious circle factors are built in
    double xmax = 0.0;
    for (const Complex& v : x) xmax = std::max(xmax, std::abs(v));
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(x[i]) > 1e-12 * xmax) active.push_back(i);

    Polynomial num, den;
    for (std::size_t i : active) {
        Polynomial others = Polynomial::constant(1.0);
        for (std::size_t j : active)
            if (j != i) others = others * Polynomial({1.0, -std::conj(sys.data.nodes[j])});
        num = num + others * std::conj(x[i]);
        den = den + others * (std::conj(x[i]) * std::conj(sys.data.values[i]));
    }
    return reduce(RationalFunction(std::move(num), std::move(den)), tol);
}

DegenerateReport verify_degenerate(const DegenerateSolution& sol, const PickSystem& sys,
                                   const Tolerances& tol) {
    DegenerateReport rep;
    const RationalFunction& w = sol.w.rational_form();

    rep.max_unimod_dev = 0.0;
    for (int k = 0; k < 64; ++k) {
        const Complex t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.41) / 64.0);
        rep.max_unimod_dev = std::max(rep.max_unimod_dev, std::abs(std::abs(w.eval(t)) - 1.0));
    }
    rep.unimodular_ok = rep.max_unimod_dev < tol.tol_unimod;

    rep.degree_ok = sol.b1.degree() + sol.b2.degree() == sol.rank_P;

    rep.equality_ok = true;
    for (std::size_t k : sol.non_pivot) {
        bool ok = false;
        try {
            const BoundaryData bd = boundary_data_rational(w, sys.data.nodes[k], tol);
            ok = bd.value.has_value() &&
                 std::abs(*bd.value - sys.data.values[k]) < tol.value_tol &&
                 bd.d_kind == BoundaryData::DKind::Finite &&
                 std::abs(bd.d - sys.data.gammas[k]) <= tol.class_tol;
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) {
            rep.equality_ok = false;
            rep.failed_nodes.push_back(k);
        }
    }

    const Signature s = fmi_kernel_check(sol.w, sys, fmi_grid(8, &sol.w, tol), tol);
    rep.fmi_n_neg = s.n_neg;
    rep.fmi_ok = s.n_neg == sys.kappa;
    return rep;
}

}  // namespace bnpick
