#pragma once

#include "k3mw/autgroup.hpp"
#include "k3mw/conic.hpp"
#include "k3mw/counting.hpp"
#include "k3mw/family.hpp"
#include "k3mw/geometry.hpp"
#include "k3mw/splitter.hpp"

#include <json.hpp>

namespace k3mw {

inline constexpr const char* kSchema = "k3-mwlat/1";

using json = nlohmann::json;

json to_json(const FamilyReport& r);
FamilyReport family_report_from_json(const json& j);

json to_json(const SurfacePreset& p, const SplitVerdict& v, const DivisorClass& B);
json to_json(const std::vector<AuditEntry>& audit);

json orbit_json(Int d, const DivisorClass& v, const std::set<DivisorClass>& orb);

json to_json(const ConicResult& r);
ConicResult conic_result_from_json(const json& j);

json to_json(const SingularityClass& c);
json to_json(const FibrationModel& m);
json to_json(const FiberProfile& p);
json to_json(const PrincipalTangents& t);
json to_json(const SalientReport& r);
json to_json(const LineIntersection& li);
json to_json(const Quadric44Report& r);
json to_json(const TrisectionReport& r);

json to_json(const FieldTower& F, const std::vector<ModpSingularPoint>& pts);
json to_json(const TraceReport& r);

// Wraps a payload with the schema/command envelope.
json envelope(const std::string& command, json payload);

} // namespace k3mw
