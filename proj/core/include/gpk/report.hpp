#pragma once

// JSON encodings of the library's objects. Field elements are written as
// little-endian coefficient lists over GF(p); points as three such lists.

#include <string>

#include <nlohmann/json.hpp>

#include "gpk/construct.hpp"

namespace gpk {

inline constexpr const char* kSchemaVersion = "gpk-report/1";

using json = nlohmann::json;

json to_json(const Field& f);
json to_json(const Elem& e);
json to_json(const ProjPoint& p);
json to_json(const ProjMatrix& m);
json to_json(const MatrixGroup& g, bool with_elements = false);
json to_json(const CurvePoly& p);
json to_json(const CurveFunction& f);
json to_json(const Divisor& d);
json to_json(const RationalityCertificate& c);
json to_json(const CriterionReport& r);
json to_json(const PlaneModel& m);
json to_json(const ModelCertificate& c);
json to_json(const QuotientModel& q);
json to_json(const OuterVerdict& v);

Elem elem_from_json(const Field& f, const json& j);
ProjPoint point_from_json(const Field& f, const json& j);
/// Rebuilds a model written by to_json(PlaneModel).
PlaneModel plane_model_from_json(const json& j);

/// {"schema_version", "command", "instance", "result"}.
json envelope(const std::string& command, const json& instance, json result);

/// Plain-text rendering of an envelope.
std::string render_text(const json& report);

}  // namespace gpk
