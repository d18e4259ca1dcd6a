// Command-line front end: problem ingestion, solving, verification and the
// embedded reference example.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "bnpick/json_io.hpp"

using namespace bnpick;

namespace {

const Complex I(0.0, 1.0);

struct Options {
    bool json = false;
    std::string tol_file;
    std::string mu_arg;
    std::string parameter;  // name filter; empty = all
    Tolerances tol;
    std::optional<Complex> mu_override;
};

void finalize_options(Options& opt) {
    if (!opt.tol_file.empty()) {
        std::ifstream in(opt.tol_file);
        if (!in) raise(ErrorCode::DataInvalid, "cannot open " + opt.tol_file);
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            raise(ErrorCode::DataInvalid, std::string("tolerance file: ") + e.what());
        }
        apply_tol_overrides(j, opt.tol);
    }
    if (!opt.mu_arg.empty()) {
        std::istringstream ss(opt.mu_arg);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(ss >> re >> comma >> im) || comma != ',')
            raise(ErrorCode::DataInvalid, "--mu expects re,im");
        opt.mu_override = Complex(re, im);
    }
}

std::optional<Complex> choose_mu(const Options& opt, const ProblemFile& pf) {
    if (opt.mu_override) return opt.mu_override;
    return pf.mu;
}

void emit(const Options& opt, const Json& j, const std::string& human) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string fmt_complex(Complex c) {
    std::ostringstream ss;
    ss.precision(12);
    const double re = c.real() == 0.0 ? 0.0 : c.real();  // drop negative zero
    const double im = c.imag() == 0.0 ? 0.0 : c.imag();
    ss << re;
    if (im >= 0)
        ss << "+" << im << "i";
    else
        ss << "-" << -im << "i";
    return ss.str();
}

std::string fmt_matrix(const ComplexMatrix& m) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ss << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            ss << (j ? ", " : " ") << fmt_complex(m.at(i, j));
        ss << " ]\n";
    }
    return ss.str();
}

// ---------------------------------------------------------------- pick

int run_pick(const Options& opt, const std::string& path) {
    const ProblemFile pf = load_problem_file(path, opt.tol);
    const PickSystem sys = build_pick_system(pf.data, opt.tol);
    const double stein = verify_stein(sys);

    Json j;
    j["n"] = sys.n();
    j["P"] = to_json(sys.P);
    j["signature"] = to_json(sys.sig);
    j["kappa"] = sys.kappa;
    j["singular"] = !sys.invertible();
    j["stein_residual"] = stein;

    std::ostringstream hs;
    hs << "Pick matrix (" << sys.n() << " nodes), kappa = " << sys.kappa
       << ", signature (" << sys.sig.n_pos << " pos, " << sys.sig.n_neg << " neg, "
       << sys.sig.n_zero << " zero)\n"
       << fmt_matrix(sys.P) << "Stein residual: " << stein << "\n";

    if (sys.invertible()) {
        j["P_inv"] = to_json(*sys.P_inv);
        j["p_tilde_diag"] = sys.p_tilde_diag;
        j["equivalent_problems"] = problems_equivalent(sys, opt.tol);
        Json feas = Json::array();
        for (std::size_t i = 0; i < sys.n(); ++i) {
            const FeasibilityResult r = omission_feasibility(sys, {i}, opt.tol);
            Json fe;
            fe["node"] = i;
            fe["kind"] = r.kind == Feasibility::Many
                             ? "many"
                             : (r.kind == Feasibility::Unique ? "unique" : "infeasible");
            if (r.kind == Feasibility::Unique) fe["degree"] = r.degree;
            feas.push_back(fe);
        }
        j["single_node_omission"] = feas;
        hs << "P^{-1}:\n" << fmt_matrix(*sys.P_inv) << "diag(P^{-1}):";
        for (double v : sys.p_tilde_diag) hs << " " << v;
        hs << "\nrelaxed and strict problems equivalent: "
           << (problems_equivalent(sys, opt.tol) ? "yes" : "no") << "\n";
    } else {
        hs << "P is singular (rank " << sys.sig.rank()
           << "); use the `degenerate` command for the unique solution\n";
    }
    emit(opt, j, hs.str());
    return 0;
}

// ---------------------------------------------------------------- theta

int run_theta(const Options& opt, const std::string& path) {
    const ProblemFile pf = load_problem_file(path, opt.tol);
    const PickSystem sys = build_pick_system(pf.data, opt.tol);
    const ThetaFunction th = build_theta(sys, choose_mu(opt, pf), opt.tol);

    // J-unitarity residual on circle samples clear of the nodes
    double junit = 0.0;
    const Matrix2 J = Matrix2::J();
    for (int k = 0; k < 64; ++k) {
        const Complex t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.31) / 64.0);
        bool clear = true;
        for (const Complex& node : sys.data.nodes)
            if (std::abs(t - node) < 0.02) clear = false;
        if (!clear) continue;
        const Matrix2 g = theta_eval(th, t, opt.tol);
        junit = std::max(junit, (g * J * g.adjoint() - J).max_abs());
    }

    Json j = to_json(th);
    j["kappa"] = sys.kappa;
    j["j_unitarity_residual"] = junit;

    std::ostringstream hs;
    hs << "mu = " << fmt_complex(th.mu) << "\n";
    for (std::size_t i = 0; i < sys.n(); ++i)
        hs << "node " << i << ": c~ = " << fmt_complex(th.tilde_c[i])
           << ", e~ = " << fmt_complex(th.tilde_e[i]) << ", eta = " << fmt_complex(th.eta[i])
           << ", threshold -p~/|e~|^2 = " << th.threshold(i) << "\n";
    hs << "J-unitarity residual on circle samples: " << junit << "\n";
    emit(opt, j, hs.str());
    return 0;
}

// ---------------------------------------------------------------- solve / classify / verify

std::vector<std::pair<std::string, SchurParameter>> selected_parameters(const Options& opt,
                                                                        const ProblemFile& pf) {
    std::vector<std::pair<std::string, SchurParameter>> out;
    for (const auto& spec : pf.parameters) {
        if (!opt.parameter.empty() && spec.name != opt.parameter) continue;
        out.emplace_back(spec.name, make_parameter(spec, opt.tol));
    }
    if (out.empty())
        raise(ErrorCode::DataInvalid, opt.parameter.empty()
                                          ? "problem file declares no parameters"
                                          : "no parameter named " + opt.parameter);
    return out;
}

int run_solve(const Options& opt, const std::string& path) {
    const ProblemFile pf = load_problem_file(path, opt.tol);
    const PickSystem sys = build_pick_system(pf.data, opt.tol);
    const ThetaFunction th = build_theta(sys, choose_mu(opt, pf), opt.tol);

    Json out;
    out["theta"] = to_json(th);
    out["kappa"] = sys.kappa;
    Json results = Json::array();
    std::ostringstream hs;
    hs << "kappa = " << sys.kappa << ", mu = " << fmt_complex(th.mu) << "\n";

    for (const auto& [name, param] : selected_parameters(opt, pf)) {
        Json r;
        r["parameter"] = name;
        const GeneralizedSchurFunction w = apply_parameter(th, param, opt.tol);
        if (w.is_rational())
            r["w"] = to_json(w.rational_form());
        else
            r["w"] = Json{{"opaque", true}};
        const VerificationReport rep = verify_interpolation(w, sys, th, param, opt.tol);
        r["report"] = to_json(rep);
        std::vector<NodeCondition> conds;
        for (const auto& nr : rep.nodes) conds.push_back(*nr.condition);
        r["neg_squares"] = to_json(negative_squares_count(w, sys, conds, opt.tol));
        results.push_back(r);

        hs << "parameter " << name << ":\n";
        for (const auto& nr : rep.nodes) {
            hs << "  node " << nr.index << " [" << node_condition_name(*nr.condition)
               << "]: " << (nr.satisfied ? "satisfied" : "violated");
            if (!nr.flag.empty()) hs << " (" << nr.flag << ")";
            hs << "\n";
        }
        hs << "  membership: S13=" << rep.membership.in_S13 << " S14=" << rep.membership.in_S14
           << " S16=" << rep.membership.in_S16 << "\n";
        if (w.is_rational()) {
            hs << "  w = ";
            const auto& nc = w.rational_form().num().coefficients();
            const auto& dc = w.rational_form().den().coefficients();
            hs << "num[";
            for (std::size_t k = 0; k < nc.size(); ++k)
                hs << (k ? ", " : "") << fmt_complex(nc[k]);
            hs << "] / den[";
            for (std::size_t k = 0; k < dc.size(); ++k)
                hs << (k ? ", " : "") << fmt_complex(dc[k]);
            hs << "]\n";
        }
    }
    out["results"] = results;
    emit(opt, out, hs.str());
    return 0;
}

int run_classify(const Options& opt, const std::string& path) {
    const ProblemFile pf = load_problem_file(path, opt.tol);
    const PickSystem sys = build_pick_system(pf.data, opt.tol);
    const ThetaFunction th = build_theta(sys, choose_mu(opt, pf), opt.tol);

    Json out = Json::array();
    std::ostringstream hs;
    for (const auto& [name, param] : selected_parameters(opt, pf)) {
        Json r;
        r["parameter"] = name;
        Json conds = Json::array();
        hs << name << ":";
        for (std::size_t i = 0; i < sys.n(); ++i) {
            const NodeCondition c = classify_node(param, th, i, opt.tol);
            conds.push_back(node_condition_name(c));
            hs << " " << node_condition_name(c);
        }
        hs << "\n";
        r["conditions"] = conds;
        out.push_back(r);
    }
    emit(opt, out, hs.str());
    return 0;
}

int run_verify(const Options& opt, const std::string& path) {
    const ProblemFile pf = load_problem_file(path, opt.tol);
    const PickSystem sys = build_pick_system(pf.data, opt.tol);

    Json out = Json::array();
    std::ostringstream hs;
    bool all_in_s16 = true;

    auto verify_one = [&](const std::string& name, const GeneralizedSchurFunction& w,
                          const VerificationReport& rep) {
        Json r;
        r["name"] = name;
        r["report"] = to_json(rep);
        const Signature fmi = fmi_kernel_check(w, sys, fmi_grid(8, &w, opt.tol), opt.tol);
        r["fmi_signature"] = to_json(fmi);
        r["fmi_matches_kappa"] = fmi.n_neg == sys.kappa;
        out.push_back(r);
        all_in_s16 = all_in_s16 && rep.membership.in_S16 && fmi.n_neg == sys.kappa;
        hs << name << ": S16=" << rep.membership.in_S16 << " S14=" << rep.membership.in_S14
           << " S13=" << rep.membership.in_S13 << " fmi_n_neg=" << fmi.n_neg << " (kappa "
           << sys.kappa << ")\n";
    };

    if (!pf.candidates.empty() && opt.parameter.empty()) {
        for (const auto& c : pf.candidates) {
            const GeneralizedSchurFunction w = GeneralizedSchurFunction::from_rational(
                RationalFunction(Polynomial(c.numerator), Polynomial(c.denominator)), c.name);
            verify_one(c.name, w, verify_interpolation(w, sys, opt.tol));
        }
    } else {
        const ThetaFunction th = build_theta(sys, choose_mu(opt, pf), opt.tol);
        for (const auto& [name, param] : selected_parameters(opt, pf)) {
            const GeneralizedSchurFunction w = apply_parameter(th, param, opt.tol);
            verify_one(name, w, verify_interpolation(w, sys, th, param, opt.tol));
        }
    }
    emit(opt, out, hs.str());
    return all_in_s16 ? 0 : 1;
}

// ---------------------------------------------------------------- degenerate

int run_degenerate(const Options& opt, const std::string& path) {
    const ProblemFile pf = load_problem_file(path, opt.tol);
    const PickSystem sys = build_pick_system(pf.data, opt.tol);
    const DegenerateSolution sol = solve_degenerate(sys, opt.tol);
    const DegenerateReport rep = verify_degenerate(sol, sys, opt.tol);

    Json j = to_json(sol);
    j["kappa"] = sys.kappa;
    j["report"] = to_json(rep);

    std::ostringstream hs;
    hs << "rank P = " << sol.rank_P << ", kappa = " << sys.kappa
       << ", solution class index = " << sol.kappa_prime << "\n"
       << "pinned parameter e0 = " << fmt_complex(sol.e0) << "\n"
       << "B1 degree " << sol.b1.degree() << ", B2 degree " << sol.b2.degree() << "\n"
       << "equality holds at nodes:";
    for (std::size_t k : sol.non_pivot) hs << " " << k;
    hs << "\nchecks: unimodular=" << rep.unimodular_ok << " degree=" << rep.degree_ok
       << " equality=" << rep.equality_ok << " fmi=" << rep.fmi_ok << "\n";
    emit(opt, j, hs.str());
    return rep.all_ok() ? 0 : 1;
}

// ---------------------------------------------------------------- embedded example

#define EX_CHECK(cond, label)                                          \
    do {                                                               \
        const bool ok_ = (cond);                                       \
        report << (ok_ ? "[ok]   " : "[FAIL] ") << (label) << "\n";    \
        if (!ok_) {                                                    \
            std::cout << report.str();                                 \
            return 1;                                                  \
        }                                                              \
    } while (0)

int run_example_sec8(const Options& opt) {
    std::ostringstream report;
    Tolerances tol = opt.tol;

    const InterpolationData data =
        InterpolationData::create({1.0, -1.0}, {1.0, -1.0}, {1.0, 0.0}, tol);
    const PickSystem sys = build_pick_system(data, tol);

    EX_CHECK(std::abs(sys.P.at(0, 0) - 1.0) < 1e-10 && std::abs(sys.P.at(0, 1) - 1.0) < 1e-10 &&
                 std::abs(sys.P.at(1, 1)) < 1e-10,
             "Pick matrix [[1,1],[1,0]]");
    EX_CHECK(sys.kappa == 1, "kappa = 1");
    EX_CHECK(sys.invertible() && std::abs(sys.P_inv->at(0, 0)) < 1e-10 &&
                 std::abs(sys.P_inv->at(0, 1) - 1.0) < 1e-10 &&
                 std::abs(sys.P_inv->at(1, 1) + 1.0) < 1e-10,
             "P^{-1} = [[0,1],[1,-1]]");
    EX_CHECK(verify_stein(sys) < 1e-12, "Stein residual < 1e-12");

    const ThetaFunction th = build_theta(sys, Complex(0.0, 1.0), tol);
    EX_CHECK(std::abs(th.tilde_c[0] - I) < 1e-10 && std::abs(th.tilde_e[0] + I) < 1e-10 &&
                 std::abs(th.tilde_c[1] - (1.0 - I)) < 1e-10 &&
                 std::abs(th.tilde_e[1] + (1.0 + I)) < 1e-10,
             "residue data [[i, 1-i], [-i, -1-i]]");
    EX_CHECK(std::abs(th.eta[0] + 1.0) < 1e-10 && std::abs(th.eta[1] - I) < 1e-10,
             "eta = (-1, i)");
    EX_CHECK(std::abs(sys.p_tilde_diag[0] / std::norm(th.tilde_e[0])) < 1e-10 &&
                 std::abs(sys.p_tilde_diag[1] / std::norm(th.tilde_e[1]) + 0.5) < 1e-10,
             "p~_ii/|e~_i|^2 = (0, -1/2)");
    {
        const Matrix2 got = theta_eval(th, 0.0, tol);
        const Matrix2 want =
            Matrix2{-1.0 - I, I - 1.0, 1.0 + 3.0 * I, 1.0 + I} * Complex(-0.5);
        EX_CHECK((got - want).max_abs() < 1e-10, "Theta(0) closed-form value");
    }
    {
        const FeasibilityResult f0 = omission_feasibility(sys, {0}, tol);
        const FeasibilityResult f1 = omission_feasibility(sys, {1}, tol);
        const FeasibilityResult f01 = omission_feasibility(sys, {0, 1}, tol);
        EX_CHECK(f0.kind == Feasibility::Unique && f0.degree == 0,
                 "omitting node 0: unique degree-0 parameter");
        EX_CHECK(f1.kind == Feasibility::Many, "omitting node 1: infinitely many parameters");
        EX_CHECK(f01.kind == Feasibility::Infeasible, "omitting both nodes: infeasible");
        EX_CHECK(!problems_equivalent(sys, tol), "relaxed/strict problems differ");
    }

    // constant parameter -1
    {
        const SchurParameter e = SchurParameter::constant(-1.0, tol);
        EX_CHECK(classify_node(e, th, 0, tol) == NodeCondition::C6, "constant -1: C6 at node 0");
        EX_CHECK(classify_node(e, th, 1, tol) == NodeCondition::C1, "constant -1: C1 at node 1");
        const GeneralizedSchurFunction w = apply_parameter(th, e, tol);
        EX_CHECK(w.rational_form().num().degree() == 0 &&
                     std::abs(w.eval(0.3 + 0.2 * I) + 1.0) < 1e-10,
                 "constant -1 maps to w = -1");
        EX_CHECK(w.neg_squares(tol) == 0, "w = -1 lies in class index 0");
        const VerificationReport rep = verify_interpolation(w, sys, th, e, tol);
        EX_CHECK(!rep.nodes[0].satisfied && rep.nodes[1].satisfied && rep.nodes[1].equality,
                 "w = -1 satisfies all conditions but the first");
        EX_CHECK(rep.membership.in_S16 && !rep.membership.in_S14, "w = -1 membership");
    }

    // first rational parameter
    {
        const SchurParameter e = make_parameter(
            ParameterSpec{"example1", ParameterSpec::Type::Builtin, {}, {}, {}, "example1", {}},
            tol);
        const BoundaryData pb = e.boundary_data(-1.0, tol);
        EX_CHECK(pb.value && std::abs(*pb.value - I) < 1e-10 &&
                     pb.d_kind == BoundaryData::DKind::Finite && std::abs(pb.d - 0.5) < 1e-10,
                 "example1 parameter: value i, d = 1/2 at -1");
        EX_CHECK(classify_node(e, th, 1, tol) == NodeCondition::C5, "example1: C5 at node 1");
        const GeneralizedSchurFunction w = apply_parameter(th, e, tol);
        // monic form: (-iz - 1)/(z - 2 - i)
        const auto& nc = w.rational_form().num().coefficients();
        const auto& dc = w.rational_form().den().coefficients();
        EX_CHECK(w.rational_form().den().degree() == 1 && std::abs(dc[0] + 2.0 + I) < 1e-9 &&
                     std::abs(nc[0] + 1.0) < 1e-9 && std::abs(nc[1] + I) < 1e-9,
                 "example1 interpolant coefficients (z-i)/(iz+1-2i)");
        const BoundaryData at1 = boundary_data_rational(w.rational_form(), 1.0, tol);
        EX_CHECK(at1.value && std::abs(*at1.value - 1.0) < 1e-9 &&
                     at1.d_kind == BoundaryData::DKind::Finite && std::abs(at1.d - 1.0) < 1e-9,
                 "example1: w(1) = 1, d_w(1) = 1");
        const Complex watm1 = w.eval(-1.0);
        EX_CHECK(std::abs(watm1 - (1.0 + I) / (3.0 * I - 1.0)) < 1e-9,
                 "example1: w(-1) = (1+i)/(3i-1)");
        const BoundaryData radial =
            boundary_data_radial([&](Complex z) { return w.eval(z); }, -1.0, {}, tol);
        EX_CHECK(radial.d_kind == BoundaryData::DKind::Infinite,
                 "example1: radial estimator reports d_w(-1) = infinity");
        EX_CHECK(w.neg_squares(tol) == 0, "example1 interpolant lies in class index 0");
        const Signature fmi = fmi_kernel_check(w, sys, fmi_grid(8, &w, tol), tol);
        EX_CHECK(fmi.n_neg == 1, "example1: sampled kernel has one negative square");
    }

    // second rational parameter
    {
        const SchurParameter e = make_parameter(
            ParameterSpec{"example2", ParameterSpec::Type::Builtin, {}, {}, {}, "example2", {}},
            tol);
        EX_CHECK(classify_node(e, th, 0, tol) == NodeCondition::C3, "example2: C3 at node 0");
        EX_CHECK(classify_node(e, th, 1, tol) == NodeCondition::C5, "example2: C5 at node 1");
        const GeneralizedSchurFunction w = apply_parameter(th, e, tol);
        EX_CHECK(w.rational_form().num().degree() == 0 &&
                     std::abs(w.eval(0.1 * I) - 1.0) < 1e-9,
                 "example2 maps to w = 1");
        const BoundaryData at1 = boundary_data_rational(w.rational_form(), 1.0, tol);
        const BoundaryData atm1 = boundary_data_rational(w.rational_form(), -1.0, tol);
        EX_CHECK(std::abs(*at1.value - 1.0) < 1e-9 && std::abs(at1.d) < 1e-9 &&
                     std::abs(*atm1.value - 1.0) < 1e-9 && std::abs(atm1.d) < 1e-9,
                 "example2: w(1) = 1, d_w(1) = 0, w(-1) = 1, d_w(-1) = 0");
    }

    // transcendental parameter
    {
        ParameterSpec spec;
        spec.name = "example3";
        spec.type = ParameterSpec::Type::Builtin;
        spec.builtin = "example3";
        spec.declared.push_back({Complex(-1.0, 0.0), I, 0.5, false});
        const SchurParameter e = make_parameter(spec, tol);
        const BoundaryData radial = boundary_data_radial(
            [&](Complex z) { return e.eval(z); }, -1.0, {}, tol);
        EX_CHECK(radial.d_kind == BoundaryData::DKind::Finite &&
                     std::abs(radial.d - 0.5) < 1e-5 && radial.value &&
                     std::abs(*radial.value - I) < 1e-5,
                 "example3 parameter: radial estimate matches value i, d = 1/2");
        EX_CHECK(classify_node(e, th, 1, tol) == NodeCondition::C5, "example3: C5 at node 1");
        const GeneralizedSchurFunction w = apply_parameter(th, e, tol);
        const VerificationReport rep = verify_interpolation(w, sys, th, e, tol);
        EX_CHECK(rep.nodes[0].satisfied, "example3: node 0 conditions hold");
        EX_CHECK(!rep.nodes[1].satisfied && !rep.nodes[1].flag.empty(),
                 "example3: no boundary limit at node 1");
        EX_CHECK(rep.membership.in_S16, "example3: reduced-index membership");
    }

    std::cout << report.str();
    std::cout << "all reference-example checks passed\n";
    return 0;
}

#undef EX_CHECK

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary Nevanlinna-Pick interpolation for generalized Schur functions"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON reports");
    app.add_option("--tol-overrides", opt.tol_file, "JSON file with named tolerance overrides");
    app.add_option("--mu", opt.mu_arg, "normalization point re,im on the unit circle");

    std::string file;
    auto* pick = app.add_subcommand("pick", "Pick matrix, signature, inverse, feasibility");
    pick->add_option("file", file)->required();
    auto* theta = app.add_subcommand("theta", "coefficient matrix data");
    theta->add_option("file", file)->required();
    auto* solve = app.add_subcommand("solve", "apply parameters and verify the interpolants");
    solve->add_option("file", file)->required();
    solve->add_option("--parameter", opt.parameter, "restrict to one named parameter");
    auto* classify = app.add_subcommand("classify", "per-node parameter classification");
    classify->add_option("file", file)->required();
    classify->add_option("--parameter", opt.parameter, "restrict to one named parameter");
    auto* verify = app.add_subcommand("verify", "verify candidates or parameter interpolants");
    verify->add_option("file", file)->required();
    verify->add_option("--parameter", opt.parameter, "restrict to one named parameter");
    auto* degenerate = app.add_subcommand("degenerate", "unique solution for singular P");
    degenerate->add_option("file", file)->required();
    auto* example = app.add_subcommand("example-sec8", "run the embedded reference example");

    CLI11_PARSE(app, argc, argv);

    try {
        finalize_options(opt);
        if (pick->parsed()) return run_pick(opt, file);
        if (theta->parsed()) return run_theta(opt, file);
        if (solve->parsed()) return run_solve(opt, file);
        if (classify->parsed()) return run_classify(opt, file);
        if (verify->parsed()) return run_verify(opt, file);
        if (degenerate->parsed()) return run_degenerate(opt, file);
        if (example->parsed()) return run_example_sec8(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::DataInvalid:
            case ErrorCode::ZeroPolynomial:
                return 2;
            case ErrorCode::SingularPick:
            case ErrorCode::NotSingular:
            case ErrorCode::NotPositive:
                return 3;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
