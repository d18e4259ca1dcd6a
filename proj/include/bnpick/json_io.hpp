#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bnpick/degenerate.hpp"
#include "bnpick/interpolant.hpp"

namespace bnpick {

using Json = nlohmann::ordered_json;

/// Parameter descriptor as it appears in a problem file.
struct ParameterSpec {
    enum class Type { Constant, Rational, Builtin };

    std::string name;
    Type type = Type::Constant;
    Complex value{0.0, 0.0};          // constant
    std::vector<Complex> numerator;   // rational, ascending degree
    std::vector<Complex> denominator;
    std::string builtin;              // builtin id

    struct Declared {
        Complex point;
        std::optional<Complex> value;
        std::optional<double> d;  // absent plus d_infinite=false means unknown
        bool d_infinite = false;
    };
    std::vector<Declared> declared;
};

struct CandidateSpec {
    std::string name;
    std::vector<Complex> numerator;
    std::vector<Complex> denominator;
};

struct ProblemFile {
    InterpolationData data;
    std::optional<Complex> mu;
    std::vector<ParameterSpec> parameters;
    std::vector<CandidateSpec> candidates;
};

/// Throws DataInvalid on malformed content.
ProblemFile parse_problem_file(const Json& j, const Tolerances& tol = {});
ProblemFile load_problem_file(const std::string& path, const Tolerances& tol = {});

Json problem_file_to_json(const ProblemFile& pf);

/// Named tolerance overrides, e.g. {"class_tol": 1e-6}.
void apply_tol_overrides(const Json& j, Tolerances& tol);

SchurParameter make_parameter(const ParameterSpec& spec, const Tolerances& tol = {});

/// Builtin parameter ids available in problem files.
std::vector<std::string> builtin_parameter_names();

// serialization helpers (complex values as [re, im])
Json to_json(Complex c);
Json to_json(const ComplexMatrix& m);
Json to_json(const std::vector<Complex>& v);
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& r);
Json to_json(const Signature& s);
Json to_json(const BoundaryData& b);
Json to_json(const BlaschkeProduct& b);
Json to_json(const NodeReport& r);
Json to_json(const SolutionMembership& m);
Json to_json(const VerificationReport& r);
Json to_json(const NegSquaresReport& r);
Json to_json(const ThetaFunction& th);
Json to_json(const DegenerateSolution& s);
Json to_json(const DegenerateReport& r);

Complex complex_from_json(const Json& j);

}  // namespace bnpick
