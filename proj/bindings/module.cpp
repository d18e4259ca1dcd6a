#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bnpick/json_io.hpp"

namespace py = pybind11;
using namespace bnpick;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

std::vector<std::vector<Complex>> matrix_rows(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    return rows;
}

std::vector<std::vector<Complex>> mat2_rows(const Matrix2& m) {
    return {{m.a11, m.a12}, {m.a21, m.a22}};
}

RationalFunction rational_from_coeffs(const std::vector<Complex>& num,
                                      const std::vector<Complex>& den) {
    return RationalFunction(Polynomial(num), Polynomial(den));
}

}  // namespace

PYBIND11_MODULE(_bnpick, m) {
    m.doc() = "boundary Nevanlinna-Pick interpolation for generalized Schur functions";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::DataInvalid)
                PyErr_SetString(PyExc_ValueError, e.what());
            else
                PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<PickSystem>(m, "PickSystem")
        .def_property_readonly("n", &PickSystem::n)
        .def_readonly("kappa", &PickSystem::kappa)
        .def_property_readonly("singular", [](const PickSystem& s) { return !s.invertible(); })
        .def_property_readonly("P", [](const PickSystem& s) { return matrix_rows(s.P); })
        .def_property_readonly("P_inv",
                               [](const PickSystem& s) -> py::object {
                                   if (!s.P_inv) return py::none();
                                   return py::cast(matrix_rows(*s.P_inv));
                               })
        .def_readonly("p_tilde_diag", &PickSystem::p_tilde_diag)
        .def_property_readonly("signature", [](const PickSystem& s) {
            return py::make_tuple(s.sig.n_pos, s.sig.n_neg, s.sig.n_zero);
        })
        .def_property_readonly("nodes", [](const PickSystem& s) { return s.data.nodes; })
        .def_property_readonly("values", [](const PickSystem& s) { return s.data.values; })
        .def_property_readonly("gammas", [](const PickSystem& s) { return s.data.gammas; });

    m.def(
        "build_pick_system",
        [](std::vector<Complex> nodes, std::vector<Complex> values, std::vector<double> gammas) {
            return build_pick_system(
                InterpolationData::create(std::move(nodes), std::move(values), std::move(gammas)));
        },
        py::arg("nodes"), py::arg("values"), py::arg("gammas"));
    m.def("verify_stein", &verify_stein);
    m.def(
        "omission_feasibility",
        [](const PickSystem& sys, std::vector<std::size_t> idx) {
            const FeasibilityResult r = omission_feasibility(sys, idx);
            py::dict out;
            out["kind"] = r.kind == Feasibility::Many
                              ? "many"
                              : (r.kind == Feasibility::Unique ? "unique" : "infeasible");
            if (r.kind == Feasibility::Unique) out["degree"] = r.degree;
            return out;
        },
        py::arg("system"), py::arg("node_indices"));
    m.def("problems_equivalent",
          [](const PickSystem& sys) { return problems_equivalent(sys); });

    py::class_<ThetaFunction>(m, "Theta")
        .def_readonly("mu", &ThetaFunction::mu)
        .def_readonly("tilde_c", &ThetaFunction::tilde_c)
        .def_readonly("tilde_e", &ThetaFunction::tilde_e)
        .def_readonly("eta", &ThetaFunction::eta)
        .def_property_readonly("thresholds",
                               [](const ThetaFunction& th) {
                                   std::vector<double> out;
                                   for (std::size_t i = 0; i < th.sys.n(); ++i)
                                       out.push_back(th.threshold(i));
                                   return out;
                               })
        .def("eval", [](const ThetaFunction& th, Complex z) { return mat2_rows(theta_eval(th, z)); })
        .def("inverse_eval",
             [](const ThetaFunction& th, Complex z) { return mat2_rows(theta_inverse_eval(th, z)); })
        .def("residue_at_node",
             [](const ThetaFunction& th, std::size_t i) { return mat2_rows(residue_at_node(th, i)); })
        .def("kernel",
             [](const ThetaFunction& th, Complex z, Complex zeta) {
                 return mat2_rows(kernel_K_theta(th, z, zeta));
             })
        .def("closed_form", [](const ThetaFunction& th) {
            py::dict out;
            out["e11"] = json_to_py(to_json(th.closed_form.e11));
            out["e12"] = json_to_py(to_json(th.closed_form.e12));
            out["e21"] = json_to_py(to_json(th.closed_form.e21));
            out["e22"] = json_to_py(to_json(th.closed_form.e22));
            return out;
        });

    m.def(
        "build_theta",
        [](const PickSystem& sys, std::optional<Complex> mu) { return build_theta(sys, mu); },
        py::arg("system"), py::arg("mu") = std::nullopt);

    py::class_<SchurParameter>(m, "SchurParameter")
        .def_property_readonly("name", &SchurParameter::name)
        .def("eval", &SchurParameter::eval)
        .def(
            "declare_boundary",
            [](SchurParameter& p, Complex point, std::optional<Complex> value,
               std::optional<double> d, bool d_infinite) {
                BoundaryData bd;
                bd.value = value;
                if (d_infinite)
                    bd.d_kind = BoundaryData::DKind::Infinite;
                else if (d) {
                    bd.d_kind = BoundaryData::DKind::Finite;
                    bd.d = *d;
                }
                p.declare_boundary(point, bd);
            },
            py::arg("point"), py::arg("value") = std::nullopt, py::arg("d") = std::nullopt,
            py::arg("d_infinite") = false)
        .def("boundary_data", [](const SchurParameter& p, Complex t0) {
            return json_to_py(to_json(p.boundary_data(t0)));
        });

    m.def("constant_parameter",
          [](Complex c) { return SchurParameter::constant(c); });
    m.def(
        "rational_parameter",
        [](std::vector<Complex> num, std::vector<Complex> den) {
            return SchurParameter::rational(rational_from_coeffs(num, den));
        },
        py::arg("numerator"), py::arg("denominator"));
    m.def(
        "opaque_parameter",
        [](std::function<Complex(Complex)> f, std::string name) {
            return SchurParameter::opaque(std::move(f), std::move(name));
        },
        py::arg("evaluator"), py::arg("name") = "opaque");

    m.def("classify_node", [](const SchurParameter& e, const ThetaFunction& th, std::size_t i) {
        return std::string(node_condition_name(classify_node(e, th, i)));
    });
    m.def("classify", [](const SchurParameter& e, const ThetaFunction& th) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < th.sys.n(); ++i)
            out.emplace_back(node_condition_name(classify_node(e, th, i)));
        return out;
    });

    py::class_<GeneralizedSchurFunction>(m, "Interpolant")
        .def_property_readonly("is_rational", &GeneralizedSchurFunction::is_rational)
        .def_property_readonly("numerator",
                               [](const GeneralizedSchurFunction& w) -> py::object {
                                   if (!w.is_rational()) return py::none();
                                   return py::cast(w.rational_form().num().coefficients());
                               })
        .def_property_readonly("denominator",
                               [](const GeneralizedSchurFunction& w) -> py::object {
                                   if (!w.is_rational()) return py::none();
                                   return py::cast(w.rational_form().den().coefficients());
                               })
        .def("eval", &GeneralizedSchurFunction::eval)
        .def("neg_squares",
             [](const GeneralizedSchurFunction& w) { return w.neg_squares(); });

    m.def("apply_parameter", [](const ThetaFunction& th, const SchurParameter& e) {
        return apply_parameter(th, e);
    });
    m.def(
        "verify_interpolation",
        [](const GeneralizedSchurFunction& w, const PickSystem& sys,
           const ThetaFunction* th, const SchurParameter* e) {
            const VerificationReport rep = (th != nullptr && e != nullptr)
                                               ? verify_interpolation(w, sys, *th, *e)
                                               : verify_interpolation(w, sys);
            return json_to_py(to_json(rep));
        },
        py::arg("w"), py::arg("system"), py::arg("theta") = nullptr,
        py::arg("parameter") = nullptr);
    m.def("fmi_kernel_check", [](const GeneralizedSchurFunction& w, const PickSystem& sys) {
        const Signature s = fmi_kernel_check(w, sys, fmi_grid(8, &w));
        return py::make_tuple(s.n_pos, s.n_neg, s.n_zero);
    });

    m.def("solve_degenerate", [](const PickSystem& sys) {
        return json_to_py(to_json(solve_degenerate(sys)));
    });
    m.def("classical_singular_solution", [](const PickSystem& sys) {
        return json_to_py(to_json(classical_singular_solution(sys)));
    });
}
