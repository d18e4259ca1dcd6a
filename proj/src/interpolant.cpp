#include "bnpick/interpolant.hpp"

#include <cmath>
#include <numbers>

namespace bnpick {

GeneralizedSchurFunction GeneralizedSchurFunction::from_rational(RationalFunction w,
                                                                 std::string provenance) {
    GeneralizedSchurFunction g;
    g.rational_ = std::move(w);
    g.provenance_ = std::move(provenance);
    return g;
}

GeneralizedSchurFunction GeneralizedSchurFunction::from_evaluator(
    std::function<Complex(Complex)> f, std::string provenance) {
    GeneralizedSchurFunction g;
    g.evaluator_ = std::move(f);
    g.provenance_ = std::move(provenance);
    return g;
}

Complex GeneralizedSchurFunction::eval(Complex z) const {
    return rational_ ? rational_->eval(z) : evaluator_(z);
}

int GeneralizedSchurFunction::neg_squares(const Tolerances& tol) const {
    if (!rational_)
        raise(ErrorCode::DataInvalid, "exact negative squares need a rational representation");
    return count_poles_in_disk(*rational_, tol);
}

GeneralizedSchurFunction apply_parameter(const ThetaFunction& th, const SchurParameter& e,
                                         const Tolerances& tol) {
    if (e.has_rational_form()) {
        RationalFunction w =
            mobius_apply(th.closed_form, e.rational_form(), tol, th.sys.data.nodes);
        auto g = GeneralizedSchurFunction::from_rational(std::move(w), e.name());
        (void)g.neg_squares(tol);  // populate the pole-count cache; BoundaryPole surfaces here
        return g;
    }
    auto eval = [th, e, tol](Complex z) {
        const Matrix2 m = theta_eval(th, z, tol);
        const Complex p = e.eval(z);
        return (m.a11 * p + m.a12) / (m.a21 * p + m.a22);
    };
    return GeneralizedSchurFunction::from_evaluator(std::move(eval), e.name());
}

NodePrediction predict_node_behavior(NodeCondition cond, const ThetaFunction& th, std::size_t i,
                                     std::optional<double> d_param) {
    const double gamma = th.sys.data.gammas[i];
    const Complex w_i = th.sys.data.values[i];
    NodePrediction p;
    switch (cond) {
        case NodeCondition::C1:
        case NodeCondition::C2:
            p.kind = NodePrediction::Kind::EqualityBoth;
            p.d = gamma;
            p.value = w_i;
            break;
        case NodeCondition::C3:
        case NodeCondition::C4: {
            p.kind = cond == NodeCondition::C3 ? NodePrediction::Kind::DBelowGamma
                                               : NodePrediction::Kind::DAboveGamma;
            p.value = w_i;
            if (d_param.has_value()) {
                const double denom =
                    th.sys.p_tilde_diag[i] + std::norm(th.tilde_e[i]) * (*d_param);
                p.d = gamma - 1.0 / denom;
            }
            break;
        }
        case NodeCondition::C5:
            p.kind = NodePrediction::Kind::TriState;
            break;
        case NodeCondition::C6:
            p.kind = NodePrediction::Kind::ValueMismatch;
            break;
    }
    return p;
}

namespace {

BoundaryData observe(const GeneralizedSchurFunction& w, Complex t, const Tolerances& tol,
                     std::string* flag) {
    if (w.is_rational()) {
        try {
            return boundary_data_rational(w.rational_form(), t, tol);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PoleAtNode) throw;
            if (flag) *flag = "pole-at-node";
            BoundaryData bd;
            bd.d_kind = BoundaryData::DKind::Infinite;
            return bd;
        }
    }
    return boundary_data_radial([&](Complex z) { return w.eval(z); }, t, RadialSchedule{}, tol);
}

struct NodeChecks {
    bool satisfied = false;
    bool equality = false;
};

NodeChecks check_node(const BoundaryData& bd, Complex target, double gamma,
                      const Tolerances& tol) {
    NodeChecks c;
    if (!bd.value.has_value()) return c;
    const double vtol =
        bd.estimated ? std::max(tol.value_tol, 4.0 * bd.value_error) : tol.value_tol;
    if (std::abs(*bd.value - target) >= vtol) return c;
    if (bd.d_kind != BoundaryData::DKind::Finite) return c;
    const double dtol =
        bd.estimated ? std::max(tol.class_tol, 4.0 * bd.d_error) : tol.class_tol;
    c.satisfied = bd.d <= gamma + dtol;
    c.equality = std::abs(bd.d - gamma) <= dtol;
    return c;
}

std::string boundary_flag(const BoundaryData& bd, const Tolerances& tol) {
    if (bd.d_kind == BoundaryData::DKind::Unknown) return "no-radial-limit";
    if (bd.d_kind == BoundaryData::DKind::Infinite) {
        if (bd.value.has_value() && std::abs(*bd.value) < 1.0 - tol.tol_unimod)
            return "no-unimodular-limit";
        return "d-divergent";
    }
    return "";
}

VerificationReport verify_impl(const GeneralizedSchurFunction& w, const PickSystem& sys,
                               const ThetaFunction* th, const SchurParameter* e,
                               const Tolerances& tol) {
    VerificationReport rep;
    rep.kappa = sys.kappa;

    if (w.is_rational()) {
        rep.neg_squares = w.neg_squares(tol);
        rep.neg_squares_lower_bound = *rep.neg_squares;
    } else {
        rep.neg_squares_estimated = true;
        int bound = 0;
        for (std::size_t count : {8u, 12u}) {
            const std::vector<Complex> grid = fmi_grid(count, &w, tol);
            const std::size_t m = grid.size();
            ComplexMatrix sample(m, m);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    sample.at(a, b) = (1.0 - std::conj(w.eval(grid[b])) * w.eval(grid[a])) /
                                      (1.0 - std::conj(grid[b]) * grid[a]);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < i; ++j) {
                    const Complex v = 0.5 * (sample.at(i, j) + std::conj(sample.at(j, i)));
                    sample.at(i, j) = v;
                    sample.at(j, i) = std::conj(v);
                }
            for (std::size_t i = 0; i < m; ++i) sample.at(i, i) = sample.at(i, i).real();
            const Signature s = signature(sample, 1e-8 * std::max(1.0, sample.max_abs()), tol);
            bound = std::max(bound, s.n_neg);
        }
        rep.neg_squares_lower_bound = bound;
    }

    int satisfied_count = 0;
    bool all_satisfied = true, all_equal = true;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        NodeReport nr;
        nr.index = i;
        nr.observed = observe(w, sys.data.nodes[i], tol, &nr.flag);
        if (nr.flag.empty()) nr.flag = boundary_flag(nr.observed, tol);
        const NodeChecks c =
            check_node(nr.observed, sys.data.values[i], sys.data.gammas[i], tol);
        nr.satisfied = c.satisfied;
        nr.equality = c.equality;
        if (th != nullptr && e != nullptr) {
            const NodeCondition cond = classify_node(*e, *th, i, tol);
            nr.condition = cond;
            const BoundaryData pb = e->boundary_data(sys.data.nodes[i], tol);
            std::optional<double> d_param;
            if (pb.d_kind == BoundaryData::DKind::Finite) d_param = pb.d;
            nr.predicted = predict_node_behavior(cond, *th, i, d_param);
        }
        satisfied_count += nr.satisfied ? 1 : 0;
        all_satisfied = all_satisfied && nr.satisfied;
        all_equal = all_equal && nr.equality;
        rep.nodes.push_back(std::move(nr));
    }

    const int kappa_prime =
        rep.neg_squares.has_value() ? *rep.neg_squares : rep.neg_squares_lower_bound;
    rep.membership.estimated = !rep.neg_squares.has_value();
    rep.membership.in_S16 =
        kappa_prime <= rep.kappa &&
        satisfied_count >= static_cast<int>(sys.n()) - (rep.kappa - kappa_prime);
    rep.membership.in_S14 = all_satisfied && kappa_prime == rep.kappa;
    rep.membership.in_S13 = all_equal && kappa_prime == rep.kappa;
    return rep;
}

}  // namespace

VerificationReport verify_interpolation(const GeneralizedSchurFunction& w, const PickSystem& sys,
                                        const Tolerances& tol) {
    return verify_impl(w, sys, nullptr, nullptr, tol);
}

VerificationReport verify_interpolation(const GeneralizedSchurFunction& w, const PickSystem& sys,
                                        const ThetaFunction& th, const SchurParameter& e,
                                        const Tolerances& tol) {
    return verify_impl(w, sys, &th, &e, tol);
}

NegSquaresReport negative_squares_count(const GeneralizedSchurFunction& w, const PickSystem& sys,
                                        const std::vector<NodeCondition>& conditions,
                                        const Tolerances& tol) {
    NegSquaresReport rep;
    for (NodeCondition c : conditions)
        if (c == NodeCondition::C4 || c == NodeCondition::C5 || c == NodeCondition::C6)
            ++rep.ell;
    rep.predicted = sys.kappa - rep.ell;
    if (w.is_rational()) {
        rep.exact = w.neg_squares(tol);
        rep.lower_bound = *rep.exact;
        rep.consistent = *rep.exact == rep.predicted;
    } else {
        const VerificationReport vr = verify_interpolation(w, sys, tol);
        rep.lower_bound = vr.neg_squares_lower_bound;
        rep.consistent = rep.lower_bound <= sys.kappa;
    }
    return rep;
}

std::vector<Complex> fmi_grid(std::size_t count, const GeneralizedSchurFunction* w,
                              const Tolerances& tol) {
    std::vector<double> radii = {0.3, 0.6};
    if (count > 8) radii.push_back(0.45);
    std::vector<Complex> grid;
    std::size_t k = 0;
    while (grid.size() < count) {
        const double r = radii[k % radii.size()];
        const std::size_t ring_index = k / radii.size();  // phase step within each radius ring
        const double phase =
            2.0 * std::numbers::pi *
            (static_cast<double>(ring_index) + 0.29 + 0.13 * static_cast<double>(k % radii.size())) /
            std::ceil(static_cast<double>(count) / static_cast<double>(radii.size()));
        grid.push_back(std::polar(r, phase));
        ++k;
    }
    if (w != nullptr && w->is_rational() && w->rational_form().den().degree() >= 1) {
        const std::vector<Complex> poles = poly_roots(w->rational_form().den(), tol);
        for (Complex& z : grid) {
            for (int guard = 0; guard < 64; ++guard) {
                bool clear = true;
                for (const Complex& p : poles)
                    if (std::abs(z - p) < 1e-3) clear = false;
                if (clear) break;
                z *= std::polar(1.0, 0.05);
            }
        }
    }
    return grid;
}

Signature fmi_kernel_check(const GeneralizedSchurFunction& w, const PickSystem& sys,
                           const std::vector<Complex>& grid, const Tolerances& tol) {
    const std::size_t n = sys.n();
    const std::size_t m = grid.size();
    if (w.is_rational() && w.rational_form().den().degree() >= 1) {
        const std::vector<Complex> poles = poly_roots(w.rational_form().den(), tol);
        for (const Complex& z : grid)
            for (const Complex& p : poles)
                if (std::abs(z - p) < tol.pole_tol)
                    raise(ErrorCode::AtPole, "grid point collides with a pole");
    }

    std::vector<Complex> wv(m);
    for (std::size_t a = 0; a < m; ++a) wv[a] = w.eval(grid[a]);

    ComplexMatrix K(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) K.at(i, j) = sys.P.at(i, j);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            // F_i(z) = (1 - conj(w_i) w(z)) / (1 - z conj(t_i))
            const Complex f = (1.0 - std::conj(sys.data.values[i]) * wv[a]) /
                              (1.0 - grid[a] * std::conj(sys.data.nodes[i]));
            K.at(i, n + a) = f;
            K.at(n + a, i) = std::conj(f);
        }
        // column index carries the unconjugated kernel argument, matching the
        // cross block whose column b is F(z_b); anything else breaks the
        // congruence with the Schur complement
        for (std::size_t b = 0; b < m; ++b)
            K.at(n + a, n + b) =
                (1.0 - std::conj(wv[a]) * wv[b]) / (1.0 - std::conj(grid[a]) * grid[b]);
    }
    for (std::size_t i = 0; i < n + m; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Complex v = 0.5 * (K.at(i, j) + std::conj(K.at(j, i)));
            K.at(i, j) = v;
            K.at(j, i) = std::conj(v);
        }
    for (std::size_t i = 0; i < n + m; ++i) K.at(i, i) = K.at(i, i).real();
    return signature(K, 1e-8 * std::max(1.0, K.max_abs()), tol);
}

}  // namespace bnpick
