#include "bnpick/json_io.hpp"

#include <fstream>

namespace bnpick {

namespace {

const Complex I(0.0, 1.0);

std::vector<Complex> complex_list(const Json& j, const char* what) {
    if (!j.is_array()) raise(ErrorCode::DataInvalid, std::string(what) + " must be an array");
    std::vector<Complex> out;
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

// the transcendental reference parameter with the essential factor at -1
Complex essential_factor_parameter(Complex z) {
    const Complex g = std::exp((z - 1.0) / (z + 1.0));
    return (((3.0 + I) * z + 1.0 - I) * g - 2.0 * I * z - 2.0) /
           (-2.0 * (1.0 + I * z) * g + (I - 1.0) * z + 3.0 * I + 1.0);
}

}  // namespace

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    raise(ErrorCode::DataInvalid, "complex values are [re, im] pairs");
}

ProblemFile parse_problem_file(const Json& j, const Tolerances& tol) {
    if (!j.is_object()) raise(ErrorCode::DataInvalid, "problem file must be a JSON object");
    if (!j.contains("nodes") || !j.contains("values") || !j.contains("gammas"))
        raise(ErrorCode::DataInvalid, "problem file needs nodes, values and gammas");

    ProblemFile pf;
    const std::vector<Complex> nodes = complex_list(j.at("nodes"), "nodes");
    const std::vector<Complex> values = complex_list(j.at("values"), "values");
    std::vector<double> gammas;
    for (const auto& g : j.at("gammas")) {
        if (!g.is_number()) raise(ErrorCode::DataInvalid, "gammas must be real numbers");
        gammas.push_back(g.get<double>());
    }
    pf.data = InterpolationData::create(nodes, values, gammas, tol);
    if (j.contains("mu") && !j.at("mu").is_null()) pf.mu = complex_from_json(j.at("mu"));

    if (j.contains("parameters")) {
        for (const auto& p : j.at("parameters")) {
            ParameterSpec spec;
            spec.name = p.value("name", "parameter-" + std::to_string(pf.parameters.size()));
            const std::string type = p.value("type", "");
            if (type == "constant") {
                spec.type = ParameterSpec::Type::Constant;
                if (!p.contains("value"))
                    raise(ErrorCode::DataInvalid, "constant parameter needs a value");
                spec.value = complex_from_json(p.at("value"));
            } else if (type == "rational") {
                spec.type = ParameterSpec::Type::Rational;
                if (!p.contains("numerator") || !p.contains("denominator"))
                    raise(ErrorCode::DataInvalid,
                          "rational parameter needs numerator and denominator");
                spec.numerator = complex_list(p.at("numerator"), "numerator");
                spec.denominator = complex_list(p.at("denominator"), "denominator");
            } else if (type == "builtin") {
                spec.type = ParameterSpec::Type::Builtin;
                spec.builtin = p.value("builtin", "");
            } else {
                raise(ErrorCode::DataInvalid, "parameter type must be constant|rational|builtin");
            }
            if (p.contains("declared_boundary")) {
                for (const auto& d : p.at("declared_boundary")) {
                    ParameterSpec::Declared dec;
                    dec.point = complex_from_json(d.at("point"));
                    if (d.contains("value")) dec.value = complex_from_json(d.at("value"));
                    if (d.contains("d")) {
                        if (d.at("d").is_string()) {
                            if (d.at("d").get<std::string>() != "infinity")
                                raise(ErrorCode::DataInvalid, "d is a number or \"infinity\"");
                            dec.d_infinite = true;
                        } else {
                            dec.d = d.at("d").get<double>();
                        }
                    }
                    spec.declared.push_back(dec);
                }
            }
            pf.parameters.push_back(std::move(spec));
        }
    }

    if (j.contains("candidates")) {
        for (const auto& c : j.at("candidates")) {
            CandidateSpec spec;
            spec.name = c.value("name", "candidate-" + std::to_string(pf.candidates.size()));
            spec.numerator = complex_list(c.at("numerator"), "numerator");
            spec.denominator = complex_list(c.at("denominator"), "denominator");
            pf.candidates.push_back(std::move(spec));
        }
    }
    return pf;
}

ProblemFile load_problem_file(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::DataInvalid, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(ErrorCode::DataInvalid, std::string("JSON parse error: ") + e.what());
    }
    return parse_problem_file(j, tol);
}

Json problem_file_to_json(const ProblemFile& pf) {
    Json j;
    j["nodes"] = to_json(pf.data.nodes);
    j["values"] = to_json(pf.data.values);
    j["gammas"] = pf.data.gammas;
    if (pf.mu) j["mu"] = to_json(*pf.mu);
    if (!pf.parameters.empty()) {
        Json arr = Json::array();
        for (const auto& p : pf.parameters) {
            Json e;
            e["name"] = p.name;
            switch (p.type) {
                case ParameterSpec::Type::Constant:
                    e["type"] = "constant";
                    e["value"] = to_json(p.value);
                    break;
                case ParameterSpec::Type::Rational:
                    e["type"] = "rational";
                    e["numerator"] = to_json(p.numerator);
                    e["denominator"] = to_json(p.denominator);
                    break;
                case ParameterSpec::Type::Builtin:
                    e["type"] = "builtin";
                    e["builtin"] = p.builtin;
                    break;
            }
            if (!p.declared.empty()) {
                Json ds = Json::array();
                for (const auto& d : p.declared) {
                    Json de;
                    de["point"] = to_json(d.point);
                    if (d.value) de["value"] = to_json(*d.value);
                    if (d.d_infinite)
                        de["d"] = "infinity";
                    else if (d.d)
                        de["d"] = *d.d;
                    ds.push_back(de);
                }
                e["declared_boundary"] = ds;
            }
            arr.push_back(e);
        }
        j["parameters"] = arr;
    }
    if (!pf.candidates.empty()) {
        Json arr = Json::array();
        for (const auto& c : pf.candidates) {
            Json e;
            e["name"] = c.name;
            e["numerator"] = to_json(c.numerator);
            e["denominator"] = to_json(c.denominator);
            arr.push_back(e);
        }
        j["candidates"] = arr;
    }
    return j;
}

void apply_tol_overrides(const Json& j, Tolerances& tol) {
    if (!j.is_object()) raise(ErrorCode::DataInvalid, "tolerance overrides must be an object");
    auto set = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    set("tol_herm", tol.tol_herm);
    set("tol_eig", tol.tol_eig);
    set("zero_tol", tol.zero_tol);
    set("tol_inv", tol.tol_inv);
    set("tol_root", tol.tol_root);
    set("root_match_tol", tol.root_match_tol);
    set("disk_boundary_tol", tol.disk_boundary_tol);
    set("tol_unimod", tol.tol_unimod);
    set("tol_eval", tol.tol_eval);
    set("node_sep_tol", tol.node_sep_tol);
    set("tol_stein", tol.tol_stein);
    set("tol_junit", tol.tol_junit);
    set("pole_tol", tol.pole_tol);
    set("class_tol", tol.class_tol);
    set("value_tol", tol.value_tol);
    set("tol_deg", tol.tol_deg);
    set("divergence_threshold", tol.divergence_threshold);
}

std::vector<std::string> builtin_parameter_names() {
    return {"example1", "example2", "example3"};
}

SchurParameter make_parameter(const ParameterSpec& spec, const Tolerances& tol) {
    SchurParameter p = [&]() {
        switch (spec.type) {
            case ParameterSpec::Type::Constant:
                return SchurParameter::constant(spec.value, tol);
            case ParameterSpec::Type::Rational:
                return SchurParameter::rational(
                    RationalFunction(Polynomial(spec.numerator), Polynomial(spec.denominator)),
                    tol);
            case ParameterSpec::Type::Builtin: {
                if (spec.builtin == "example1")
                    return SchurParameter::rational(
                        RationalFunction(Polynomial({2.0, 2.0 * I}),
                                         Polynomial({-1.0 - 3.0 * I, 1.0 - I})),
                        tol);
                if (spec.builtin == "example2")
                    return SchurParameter::rational(
                        RationalFunction(Polynomial({-(1.0 + I), 3.0 - I}),
                                         Polynomial({3.0 * I - 1.0, -(1.0 + I)})),
                        tol);
                if (spec.builtin == "example3")
                    return SchurParameter::opaque(essential_factor_parameter, "example3", tol);
                raise(ErrorCode::DataInvalid, "unknown builtin parameter " + spec.builtin);
            }
        }
        raise(ErrorCode::DataInvalid, "bad parameter spec");
    }();
    for (const auto& d : spec.declared) {
        BoundaryData bd;
        bd.value = d.value;
        if (d.d_infinite)
            bd.d_kind = BoundaryData::DKind::Infinite;
        else if (d.d) {
            bd.d_kind = BoundaryData::DKind::Finite;
            bd.d = *d.d;
        }
        p.declare_boundary(d.point, bd);
    }
    return p;
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const std::vector<Complex>& v) {
    Json arr = Json::array();
    for (const Complex& c : v) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const Polynomial& p) { return to_json(p.coefficients()); }

Json to_json(const RationalFunction& r) {
    Json j;
    j["numerator"] = to_json(r.num());
    j["denominator"] = to_json(r.den());
    return j;
}

Json to_json(const Signature& s) {
    Json j;
    j["n_pos"] = s.n_pos;
    j["n_neg"] = s.n_neg;
    j["n_zero"] = s.n_zero;
    return j;
}

Json to_json(const BoundaryData& b) {
    Json j;
    if (b.value)
        j["value"] = to_json(*b.value);
    else
        j["value"] = nullptr;
    switch (b.d_kind) {
        case BoundaryData::DKind::Finite:
            j["d"] = b.d;
            break;
        case BoundaryData::DKind::Infinite:
            j["d"] = "infinity";
            break;
        case BoundaryData::DKind::Unknown:
            j["d"] = "unknown";
            break;
    }
    if (b.estimated) {
        j["estimated"] = true;
        j["d_error"] = b.d_error;
        j["value_error"] = b.value_error;
    }
    return j;
}

Json to_json(const BlaschkeProduct& b) {
    Json j;
    j["zeros"] = to_json(b.zeros);
    j["unimodular_factor"] = to_json(b.unimodular_factor);
    j["degree"] = b.degree();
    return j;
}

Json to_json(const NodeReport& r) {
    Json j;
    j["index"] = r.index;
    if (r.condition) j["condition"] = node_condition_name(*r.condition);
    if (r.predicted) {
        Json p;
        switch (r.predicted->kind) {
            case NodePrediction::Kind::EqualityBoth: p["kind"] = "equality"; break;
            case NodePrediction::Kind::DBelowGamma: p["kind"] = "d-below-gamma"; break;
            case NodePrediction::Kind::DAboveGamma: p["kind"] = "d-above-gamma"; break;
            case NodePrediction::Kind::TriState: p["kind"] = "tri-state"; break;
            case NodePrediction::Kind::ValueMismatch: p["kind"] = "value-mismatch"; break;
        }
        if (r.predicted->d) p["d"] = *r.predicted->d;
        if (r.predicted->value) p["value"] = to_json(*r.predicted->value);
        j["predicted"] = p;
    }
    j["observed"] = to_json(r.observed);
    j["satisfied_0_13"] = r.satisfied;
    j["equality_0_11"] = r.equality;
    if (!r.flag.empty()) j["flag"] = r.flag;
    return j;
}

Json to_json(const SolutionMembership& m) {
    Json j;
    j["in_S13"] = m.in_S13;
    j["in_S14"] = m.in_S14;
    j["in_S16"] = m.in_S16;
    j["estimated"] = m.estimated;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    Json nodes = Json::array();
    for (const auto& nr : r.nodes) nodes.push_back(to_json(nr));
    j["node_reports"] = nodes;
    j["membership"] = to_json(r.membership);
    j["kappa"] = r.kappa;
    if (r.neg_squares)
        j["neg_squares"] = *r.neg_squares;
    else
        j["neg_squares_lower_bound"] = r.neg_squares_lower_bound;
    return j;
}

Json to_json(const NegSquaresReport& r) {
    Json j;
    j["ell"] = r.ell;
    j["predicted"] = r.predicted;
    if (r.exact)
        j["exact"] = *r.exact;
    else
        j["lower_bound"] = r.lower_bound;
    j["consistent"] = r.consistent;
    return j;
}

Json to_json(const ThetaFunction& th) {
    Json j;
    j["mu"] = to_json(th.mu);
    j["tilde_c"] = to_json(th.tilde_c);
    j["tilde_e"] = to_json(th.tilde_e);
    j["eta"] = to_json(th.eta);
    Json thr = Json::array();
    for (std::size_t i = 0; i < th.sys.n(); ++i) thr.push_back(th.threshold(i));
    j["thresholds"] = thr;
    Json cf;
    cf["e11"] = to_json(th.closed_form.e11);
    cf["e12"] = to_json(th.closed_form.e12);
    cf["e21"] = to_json(th.closed_form.e21);
    cf["e22"] = to_json(th.closed_form.e22);
    j["closed_form"] = cf;
    return j;
}

Json to_json(const DegenerateSolution& s) {
    Json j;
    j["rank_P"] = s.rank_P;
    j["kappa_prime"] = s.kappa_prime;
    j["e0"] = to_json(s.e0);
    j["b1"] = to_json(s.b1);
    j["b2"] = to_json(s.b2);
    j["w"] = to_json(s.w.rational_form());
    j["pivot"] = s.pivot;
    j["equality_nodes"] = s.non_pivot;
    return j;
}

Json to_json(const DegenerateReport& r) {
    Json j;
    j["unimodular_ok"] = r.unimodular_ok;
    j["max_unimod_dev"] = r.max_unimod_dev;
    j["degree_ok"] = r.degree_ok;
    j["equality_ok"] = r.equality_ok;
    j["fmi_ok"] = r.fmi_ok;
    j["fmi_n_neg"] = r.fmi_n_neg;
    j["failed_nodes"] = r.failed_nodes;
    j["all_ok"] = r.all_ok();
    return j;
}

}  // namespace bnpick
