#pragma once

#include "qtorus/fiber.hpp"
#include "qtorus/graded_modules.hpp"
#include "qtorus/hc1.hpp"
#include "qtorus/quantum_torus.hpp"
#include "qtorus/roots_weyl.hpp"
#include "qtorus/toroidal.hpp"

#include <json.hpp>

#include <string>

namespace qtorus::io {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Malformed documents raise Error(invalid_input).
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const Degree& a);
Degree degree_from_json(const Json& j, std::size_t n);
/// "2,0" or "2, -1".
Degree parse_degree(const std::string& text, std::size_t n);

Json to_json(const QMatrix& q);
QMatrixPtr torus_from_json(const Json& j);

Json to_json(const TorusElement& x);
TorusElement torus_element_from_json(const QMatrixPtr& q, const Json& j);

Json to_json(const HC1Element& x);
HC1Element hc1_from_json(const QMatrixPtr& q, const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json to_json(const Vector& v);

Json to_json(const ToroidalElement& x);
ToroidalElement toroidal_from_json(const QMatrixPtr& q, std::size_t d, const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const EvalPoints& p);
EvalPoints points_from_json(const Json& j);

Json to_json(const WedderburnReport& w);
Json to_json(const MatrixRep& r);
Json to_json(const WindowReport& r);
Json to_json(const Decomposition& d);

/// {"torus": <config>, "d": d, "points": <EvalPoints>, "rep": name, "window": B}.
struct ModuleSpec {
    QMatrixPtr torus;
    std::size_t d = 2;
    EvalPoints points;
    std::string rep = "natural";
    std::int64_t window = 3;
};

ModuleSpec module_spec_from_json(const Json& j);
Json to_json(const ModuleSpec& s);

Json read_file(const std::string& path);

} // namespace qtorus::io
