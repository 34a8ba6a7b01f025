#pragma once

#include <string>

#include <json.hpp>

#include "santalo/bodies.hpp"
#include "santalo/equipartition.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/measures.hpp"

namespace santalo {

using Json = nlohmann::ordered_json;

// Serialization with insertion-ordered keys and doubles printed with 17
// significant digits, so equal values always produce identical bytes and
// every scalar round-trips losslessly.
std::string dump_json(const Json& j, int indent = 2);

Json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json cloud_to_json(const WeightedPointCloud& cloud);
WeightedPointCloud cloud_from_json(const Json& j);

Json field_to_json(const ScalarField& field);
ScalarField field_from_json(const Json& j);

Json polytope_to_json(const ConvexPolytope& P);
ConvexPolytope polytope_from_json(const Json& j);

Json tree_to_json(const YaoYaoTree& tree);
YaoYaoTree tree_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const EquipartitionReport& report);
EquipartitionReport report_from_json(const Json& j);

Json body_certificate_to_json(const BodyCertificate& cert);
BodyCertificate body_certificate_from_json(const Json& j);

} // namespace santalo
