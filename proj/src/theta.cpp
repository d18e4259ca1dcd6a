#include "bnpick/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bnpick {

namespace {

void check_away_from_nodes(const std::vector<Complex>& nodes, Complex z, double pole_tol) {
    for (const Complex& t : nodes)
        if (std::abs(z - t) < pole_tol)
            raise(ErrorCode::AtPole, "evaluation point collides with a node");
}

}  // namespace

Complex auto_select_mu(const InterpolationData& data) {
    // deterministic scan of e^{i pi (2k+1)/64}; the winner maximizes the
    // minimal distance to the nodes (ties to the smallest k), which keeps the
    // residue-vector scales small. A candidate closer than 0.1 never wins.
    Complex best{0.0, 0.0};
    double best_sep = 0.1;
    for (int k = 0; k < 64; ++k) {
        const Complex cand = std::polar(1.0, std::numbers::pi * (2.0 * k + 1.0) / 64.0);
        double sep = 1e9;
        for (const Complex& t : data.nodes) sep = std::min(sep, std::abs(cand - t));
        if (sep > best_sep) {
            best_sep = sep;
            best = cand;
        }
    }
    if (best_sep <= 0.1)
        raise(ErrorCode::MuCollidesWithNode, "no candidate normalization point clears the nodes");
    return best;
}

ThetaFunction build_theta(const PickSystem& sys, std::optional<Complex> mu_opt,
                          const Tolerances& tol) {
    if (!sys.invertible()) raise(ErrorCode::SingularPick, "P is singular; use the degenerate solver");
    const std::size_t n = sys.n();
    const Complex mu = mu_opt.value_or(auto_select_mu(sys.data));
    if (std::abs(std::abs(mu) - 1.0) > tol.tol_unimod)
        raise(ErrorCode::MuCollidesWithNode, "mu is not on the unit circle");
    for (const Complex& t : sys.data.nodes)
        if (std::abs(mu - t) <= tol.node_sep_tol)
            raise(ErrorCode::MuCollidesWithNode, "mu coincides with a node");

    ThetaFunction th;
    th.sys = sys;
    th.mu = mu;

    const ComplexMatrix& pinv = *sys.P_inv;
    const std::vector<Complex>& t = sys.data.nodes;
    const std::vector<Complex>& w = sys.data.values;

    // [C~; E~] = [C; E](mu I - T)^{-1} P^{-1} (I - mu T*)
    ComplexMatrix left(2, n);  // [C; E](mu I - T)^{-1}
    for (std::size_t j = 0; j < n; ++j) {
        const Complex f = 1.0 / (mu - t[j]);
        left.at(0, j) = w[j] * f;
        left.at(1, j) = f;
    }
    const ComplexMatrix left_pinv = left * pinv;  // 2 x n
    th.left_inv = left_pinv;
    ComplexMatrix tilde(2, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex g = 1.0 - mu * std::conj(t[j]);
        tilde.at(0, j) = left_pinv.at(0, j) * g;
        tilde.at(1, j) = left_pinv.at(1, j) * g;
    }
    th.tilde_c.resize(n);
    th.tilde_e.resize(n);
    th.eta.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        th.tilde_c[j] = tilde.at(0, j);
        th.tilde_e[j] = tilde.at(1, j);
        const double ac = std::abs(th.tilde_c[j]), ae = std::abs(th.tilde_e[j]);
        if (ae < 1e-14 || std::abs(ac - ae) > 1e-8 * std::max(1.0, ae))
            raise(ErrorCode::NumericalBreakdown,
                  "residue data violates |c~| = |e~| != 0 at node " + std::to_string(j));
        th.eta[j] = th.tilde_c[j] / th.tilde_e[j];
    }

    // P^{-1} (I - mu T*)^{-1} [C* -E*]
    ComplexMatrix rhs(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex f = 1.0 / (1.0 - mu * std::conj(t[i]));
        rhs.at(i, 0) = f * std::conj(w[i]);
        rhs.at(i, 1) = -f;
    }
    th.right_eval = pinv * rhs;

    // closed form over the common denominator D(z) = prod (z - t_i):
    //   N_ab = delta_ab D + sum_i R_i[ab] / (mu - t_i) * (z - mu) * prod_{j != i}(z - t_j)
    // with R_i = [w_i; 1][conj(c~_i), -conj(e~_i)]
    const Polynomial D = Polynomial::from_roots(t);
    Polynomial N11 = D, N12, N21, N22 = D;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Complex> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(t[j]);
        const Polynomial base =
            Polynomial::from_roots(others) * Polynomial({-mu, 1.0}) * (1.0 / (mu - t[i]));
        const Complex rc = std::conj(th.tilde_c[i]);
        const Complex re = -std::conj(th.tilde_e[i]);
        N11 = N11 + base * (w[i] * rc);
        N12 = N12 + base * (w[i] * re);
        N21 = N21 + base * rc;
        N22 = N22 + base * re;
    }
    th.closed_form.e11 = RationalFunction(N11, D);
    th.closed_form.e12 = RationalFunction(N12, D);
    th.closed_form.e21 = RationalFunction(N21, D);
    th.closed_form.e22 = RationalFunction(N22, D);
    return th;
}

Matrix2 theta_eval(const ThetaFunction& th, Complex z, const Tolerances& tol) {
    const std::vector<Complex>& t = th.sys.data.nodes;
    check_away_from_nodes(t, z, tol.pole_tol);
    Matrix2 acc = Matrix2::identity();
    const Complex zm = z - th.mu;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Complex f = zm / (z - t[i]);
        const Complex w_i = th.sys.data.values[i];
        const Complex r0 = th.right_eval.at(i, 0), r1 = th.right_eval.at(i, 1);
        acc.a11 += f * w_i * r0;
        acc.a12 += f * w_i * r1;
        acc.a21 += f * r0;
        acc.a22 += f * r1;
    }
    return acc;
}

Matrix2 theta_inverse_eval(const ThetaFunction& th, Complex z, const Tolerances& tol) {
    const std::vector<Complex>& t = th.sys.data.nodes;
    check_away_from_nodes(t, z, tol.pole_tol);
    Matrix2 acc = Matrix2::identity();
    const Complex zm = z - th.mu;
    for (std::size_t j = 0; j < t.size(); ++j) {
        const Complex f = zm / (1.0 - z * std::conj(t[j]));
        const Complex l0 = th.left_inv.at(0, j), l1 = th.left_inv.at(1, j);
        const Complex cw = std::conj(th.sys.data.values[j]);
        acc.a11 -= f * l0 * cw;
        acc.a12 -= f * l0 * (-1.0);
        acc.a21 -= f * l1 * cw;
        acc.a22 -= f * l1 * (-1.0);
    }
    return acc;
}

Matrix2 residue_at_node(const ThetaFunction& th, std::size_t i) {
    const Complex w_i = th.sys.data.values[i];
    const Complex rc = std::conj(th.tilde_c[i]);
    const Complex re = -std::conj(th.tilde_e[i]);
    return Matrix2{-w_i * rc, -w_i * re, -rc, -re};
}

Matrix2 kernel_K_theta(const ThetaFunction& th, Complex z, Complex zeta, const Tolerances& tol) {
    const std::vector<Complex>& t = th.sys.data.nodes;
    check_away_from_nodes(t, z, tol.pole_tol);
    check_away_from_nodes(t, zeta, tol.pole_tol);
    if (std::abs(1.0 - z * std::conj(zeta)) < 1e-12)
        raise(ErrorCode::OnDiagonalSingularity, "1 - z conj(zeta) vanishes");
    const std::size_t n = t.size();
    const ComplexMatrix& pinv = *th.sys.P_inv;
    Matrix2 acc{};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex fi = 1.0 / (z - t[i]);
        const Complex w_i = th.sys.data.values[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Complex fj = 1.0 / (std::conj(zeta) - std::conj(t[j]));
            const Complex core = fi * pinv.at(i, j) * fj;
            const Complex cwj = std::conj(th.sys.data.values[j]);
            acc.a11 += w_i * core * cwj;
            acc.a12 += w_i * core;
            acc.a21 += core * cwj;
            acc.a22 += core;
        }
    }
    return acc;
}

Matrix2 kernel_K_theta_inverse_side(const ThetaFunction& th, Complex z, Complex zeta,
                                    const Tolerances& tol) {
    // [C; -E](I - conj(zeta) T)^{-1} P^{-1} (I - z T*)^{-1} [C* -E*]
    const std::vector<Complex>& t = th.sys.data.nodes;
    check_away_from_nodes(t, z, tol.pole_tol);
    check_away_from_nodes(t, zeta, tol.pole_tol);
    const std::size_t n = t.size();
    const ComplexMatrix& pinv = *th.sys.P_inv;
    Matrix2 acc{};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex fi = 1.0 / (1.0 - std::conj(zeta) * t[i]);
        const Complex w_i = th.sys.data.values[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Complex fj = 1.0 / (1.0 - z * std::conj(t[j]));
            const Complex core = fi * pinv.at(i, j) * fj;
            const Complex cwj = std::conj(th.sys.data.values[j]);
            acc.a11 += w_i * core * cwj;
            acc.a12 += w_i * core * (-1.0);
            acc.a21 += (-1.0) * core * cwj;
            acc.a22 += core;
        }
    }
    return acc;
}

Matrix2 kernel_K_theta_tilde_side(const ThetaFunction& th, Complex z, Complex zeta,
                                  const Tolerances& tol) {
    // [C~; -E~](conj(zeta) I - T*)^{-1} P (z I - T)^{-1} [C~* -E~*]
    const std::vector<Complex>& t = th.sys.data.nodes;
    check_away_from_nodes(t, z, tol.pole_tol);
    check_away_from_nodes(t, zeta, tol.pole_tol);
    const std::size_t n = t.size();
    Matrix2 acc{};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex fi = 1.0 / (std::conj(zeta) - std::conj(t[i]));
        for (std::size_t j = 0; j < n; ++j) {
            const Complex fj = 1.0 / (z - t[j]);
            const Complex core = fi * th.sys.P.at(i, j) * fj;
            const Complex rc = std::conj(th.tilde_c[j]);
            const Complex re = -std::conj(th.tilde_e[j]);
            acc.a11 += th.tilde_c[i] * core * rc;
            acc.a12 += th.tilde_c[i] * core * re;
            acc.a21 += (-th.tilde_e[i]) * core * rc;
            acc.a22 += (-th.tilde_e[i]) * core * re;
        }
    }
    return acc;
}

Matrix2 ThetaTailFactor::eval(Complex z, const Tolerances& tol) const {
    check_away_from_nodes(nodes, z, tol.pole_tol);
    Matrix2 acc = Matrix2::identity();
    const Complex zm = z - mu;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Complex f = zm / (z - nodes[j]);
        const Complex rc = std::conj(tilde_c2[j]);
        const Complex re = -std::conj(tilde_e2[j]);
        acc.a11 += f * left.at(0, j) * rc;
        acc.a12 += f * left.at(0, j) * re;
        acc.a21 += f * left.at(1, j) * rc;
        acc.a22 += f * left.at(1, j) * re;
    }
    return acc;
}

ThetaFactorization factorize_theta(const ThetaFunction& th, std::size_t split,
                                   const Tolerances& tol) {
    const std::size_t n = th.sys.n();
    if (split == 0 || split > n)
        raise(ErrorCode::DataInvalid, "factorization split out of range");

    std::vector<std::size_t> head(split);
    for (std::size_t i = 0; i < split; ++i) head[i] = i;
    const PickSystem sub = build_pick_system(th.sys.data.permuted(head), tol);
    if (!sub.invertible())
        raise(ErrorCode::SingularLeadingBlock, "leading block of P is singular");

    ThetaFactorization fac;
    fac.split = split;
    fac.theta1 = build_theta(sub, th.mu, tol);

    const std::size_t l = n - split;
    fac.theta2_tilde.mu = th.mu;
    fac.theta2_tilde.nodes.assign(th.sys.data.nodes.begin() + static_cast<std::ptrdiff_t>(split),
                                  th.sys.data.nodes.end());
    fac.theta2_tilde.tilde_c2.assign(th.tilde_c.begin() + static_cast<std::ptrdiff_t>(split),
                                     th.tilde_c.end());
    fac.theta2_tilde.tilde_e2.assign(th.tilde_e.begin() + static_cast<std::ptrdiff_t>(split),
                                     th.tilde_e.end());
    if (l > 0) {
        // the trailing block of P^{-1} is the inverse of the Schur complement
        // of the leading block, which is available directly from P with one
        // block inversion instead of two
        ComplexMatrix p22_inv;
        try {
            p22_inv = schur_complement(th.sys.P, split, tol);
        } catch (const Error&) {
            raise(ErrorCode::SingularLeadingBlock,
                  "trailing block of P^{-1} is numerically singular");
        }
        ComplexMatrix pre(2, l);  // [C2~; E2~](I - mu T2*)^{-1}
        for (std::size_t j = 0; j < l; ++j) {
            const Complex f = 1.0 / (1.0 - th.mu * std::conj(fac.theta2_tilde.nodes[j]));
            pre.at(0, j) = fac.theta2_tilde.tilde_c2[j] * f;
            pre.at(1, j) = fac.theta2_tilde.tilde_e2[j] * f;
        }
        fac.theta2_tilde.left = pre * p22_inv;
    } else {
        fac.theta2_tilde.left = ComplexMatrix(2, 0);
    }
    return fac;
}

}  // namespace bnpick
