#include "bnpick/schur_param.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace bnpick {

const char* node_condition_name(NodeCondition c) {
    switch (c) {
        case NodeCondition::C1: return "C1";
        case NodeCondition::C2: return "C2";
        case NodeCondition::C3: return "C3";
        case NodeCondition::C4: return "C4";
        case NodeCondition::C5: return "C5";
        case NodeCondition::C6: return "C6";
    }
    return "?";
}

SchurParameter SchurParameter::constant(Complex c, const Tolerances& tol) {
    if (std::abs(c) > 1.0 + tol.tol_unimod)
        raise(ErrorCode::DataInvalid, "constant parameter with modulus > 1");
    SchurParameter p;
    p.kind_ = Kind::Constant;
    p.rational_ = RationalFunction::constant(c);
    p.name_ = "constant";
    return p;
}

SchurParameter SchurParameter::rational(RationalFunction r, const Tolerances& tol) {
    if (r.den().degree() >= 1) {
        for (const Complex& pole : poly_roots(r.den(), tol))
            if (std::abs(pole) <= 1.0 + tol.disk_boundary_tol)
                raise(ErrorCode::DataInvalid, "rational parameter with a pole in the closed disk");
    }
    for (int k = 0; k < 256; ++k) {
        const Complex t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.21) / 256.0);
        if (std::abs(r.eval(t)) > 1.0 + tol.tol_unimod)
            raise(ErrorCode::DataInvalid, "rational parameter with modulus > 1 on the circle");
    }
    SchurParameter p;
    p.kind_ = Kind::Rational;
    p.rational_ = std::move(r);
    p.name_ = "rational";
    return p;
}

SchurParameter SchurParameter::opaque(std::function<Complex(Complex)> f, std::string name,
                                      const Tolerances& tol) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> ur(0.0, 0.97), uphi(0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < 64; ++k) {
        const Complex z = std::polar(ur(rng), uphi(rng));
        const Complex v = f(z);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
            std::abs(v) > 1.0 + tol.tol_unimod)
            raise(ErrorCode::DataInvalid, "opaque parameter exceeds modulus 1 on the disk");
    }
    SchurParameter p;
    p.kind_ = Kind::Opaque;
    p.evaluator_ = std::move(f);
    p.name_ = std::move(name);
    return p;
}

Complex SchurParameter::eval(Complex z) const {
    return kind_ == Kind::Opaque ? evaluator_(z) : rational_.eval(z);
}

void SchurParameter::declare_boundary(Complex point, BoundaryData data) {
    declared_.emplace_back(point, data);
}

std::optional<BoundaryData> SchurParameter::declared_boundary(Complex point,
                                                              const Tolerances& tol) const {
    for (const auto& [p, d] : declared_)
        if (std::abs(p - point) <= tol.node_sep_tol) return d;
    return std::nullopt;
}

BoundaryData SchurParameter::boundary_data(Complex t0, const Tolerances& tol,
                                           const RadialSchedule& schedule) const {
    if (kind_ != Kind::Opaque) return boundary_data_rational(rational_, t0, tol);
    if (auto declared = declared_boundary(t0, tol)) return *declared;
    return boundary_data_radial(evaluator_, t0, schedule, tol);
}

BoundaryData boundary_data_rational(const RationalFunction& e, Complex t0,
                                    const Tolerances& tol) {
    if (e.den().degree() >= 1) {
        for (const Complex& pole : poly_roots(e.den(), tol))
            if (std::abs(pole - t0) < tol.pole_tol)
                raise(ErrorCode::PoleAtNode, "rational function has a pole at the point");
    }
    const Complex value = e.eval(t0);
    if (std::abs(value) < 1.0 - tol.tol_unimod) return BoundaryData::infinite(value);
    const Complex q = t0 * e.derivative().eval(t0) * std::conj(value);
    if (std::abs(q.imag()) >= 1e-9 * std::max(1.0, std::abs(q)))
        raise(ErrorCode::NumericalBreakdown,
              "Caratheodory-Julia quantity has a non-real residual");
    return BoundaryData::finite(value, q.real());
}

namespace {

// Two Richardson levels over the trailing window sampled at h_k = 2^{-k}.
// The level-2 truncation residual is O(h^3), far below the evaluation noise
// at these radii, so the spread of the level-2 column measures the actual
// uncertainty (level-to-level corrections alone miss correlated noise).
template <typename T>
std::pair<T, double> richardson(const std::vector<T>& tail) {
    std::vector<T> t = tail;
    const std::size_t levels = std::min<std::size_t>(2, tail.size() - 1);
    for (std::size_t level = 1; level <= levels; ++level) {
        const double f = std::pow(2.0, static_cast<double>(level));
        for (std::size_t i = 0; i + level < tail.size(); ++i)
            t[i] = (f * t[i + 1] - t[i]) / (f - 1.0);
    }
    const std::size_t column = tail.size() - levels;
    const T est = t[column - 1];
    double spread = 0.0;
    for (std::size_t i = 0; i < column; ++i) spread = std::max(spread, std::abs(t[i] - est));
    return {est, spread};
}

}  // namespace

BoundaryData boundary_data_radial(const std::function<Complex(Complex)>& f, Complex t0,
                                  const RadialSchedule& schedule, const Tolerances& tol) {
    (void)tol;
    std::vector<double> d;
    std::vector<Complex> w;
    for (int k = schedule.k_min; k <= schedule.k_max; ++k) {
        const double r = 1.0 - std::pow(2.0, -k);
        const Complex v = f(r * t0);
        w.push_back(v);
        d.push_back((1.0 - std::norm(v)) / (1.0 - r * r));
    }
    const std::size_t m = d.size();
    const std::size_t win = std::min<std::size_t>(static_cast<std::size_t>(schedule.window), m);

    // boundary value estimate from the trailing window
    std::vector<Complex> wtail(w.end() - static_cast<std::ptrdiff_t>(win), w.end());
    const auto [wext, wcorr] = richardson(wtail);
    const bool value_settles =
        std::abs(w[m - 1] - w[m - 2]) < 0.25 && wcorr < 0.05 * (1.0 + std::abs(wext));
    std::optional<Complex> value;
    if (value_settles) value = wext;

    // divergence: the tail exceeds the threshold while still growing
    std::size_t grow = 0;
    for (std::size_t i = m - win; i + 1 < m; ++i)
        if (d[i + 1] > d[i]) ++grow;
    if (d[m - 1] > schedule.divergence_threshold && grow + 1 >= win)
        return BoundaryData::infinite(value, true);

    std::vector<double> dtail(d.end() - static_cast<std::ptrdiff_t>(win), d.end());
    const auto [dext, dspread] = richardson(dtail);
    const double rmax = 1.0 - std::pow(2.0, -schedule.k_max);
    const double noise = 32.0 * std::numeric_limits<double>::epsilon() / (1.0 - rmax * rmax);
    const double bar = 2.0 * dspread + noise;

    // oscillation guard: the raw tail must already sit near its extrapolant
    const double tail_spread = std::abs(d[m - 1] - dext);
    if (!std::isfinite(dext) || tail_spread > 0.2 * (1.0 + std::abs(dext))) {
        BoundaryData out;
        out.value = value;
        out.d_kind = BoundaryData::DKind::Unknown;
        out.estimated = true;
        return out;
    }

    BoundaryData out = BoundaryData::finite(value.value_or(w.back()), dext, bar, true);
    out.value = value;
    out.value_error = wcorr + 1e-14;
    return out;
}

NodeCondition classify_node(const SchurParameter& e, const ThetaFunction& th, std::size_t i,
                            const Tolerances& tol) {
    if (i >= th.sys.n()) raise(ErrorCode::DataInvalid, "node index out of range");
    const Complex t_i = th.sys.data.nodes[i];
    const Complex eta_i = th.eta[i];
    const double thr = th.threshold(i);
    const double ptilde = th.sys.p_tilde_diag[i];

    const BoundaryData bd = e.boundary_data(t_i, tol);

    if (!bd.value.has_value()) return NodeCondition::C1;
    const double vdist = std::abs(*bd.value - eta_i);
    if (vdist > tol.class_tol) {
        if (bd.estimated && vdist <= std::max(tol.class_tol, 4.0 * bd.value_error))
            raise(ErrorCode::AmbiguousBoundary,
                  "estimated boundary value too close to eta to separate");
        return NodeCondition::C1;
    }

    if (bd.d_kind == BoundaryData::DKind::Infinite) return NodeCondition::C2;
    if (bd.d_kind == BoundaryData::DKind::Unknown)
        raise(ErrorCode::AmbiguousBoundary, "radial estimate of d did not settle");

    const double d = bd.d;
    if (bd.estimated && bd.d_error * 4.0 > tol.class_tol &&
        (std::abs(d - thr) <= 4.0 * bd.d_error || std::abs(d) <= 4.0 * bd.d_error))
        raise(ErrorCode::AmbiguousBoundary,
              "estimated d cannot be separated from the classification threshold");

    if (std::abs(ptilde) <= tol.class_tol && std::abs(d) <= tol.class_tol)
        return NodeCondition::C6;
    if (thr > tol.class_tol && std::abs(d - thr) <= tol.class_tol) return NodeCondition::C5;
    if (d > thr) return NodeCondition::C3;
    return NodeCondition::C4;
}

}  // namespace bnpick
