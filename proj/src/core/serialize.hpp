#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "core/bipolar.hpp"
#include "core/face_coloring.hpp"
#include "core/face_filter.hpp"
#include "core/list_core.hpp"
#include "core/pipeline.hpp"
#include "core/plane_graph.hpp"
#include "core/schedule.hpp"
#include "core/special_assignment.hpp"
#include "core/square_filter.hpp"
#include "core/verifier.hpp"
#include "core/walk_filter.hpp"

namespace nonrep {

// Insertion-ordered output keeps every document byte-stable.
using Json = nlohmann::ordered_json;

/// Parses text; throws Parse on malformed input.
Json parse_json(const std::string& text);
std::string dump(const Json& j);

Json graph_to_json(const PlaneGraph& g);
/// {"n", "rotation", "external_face"?}; throws Parse or the graph's own errors.
PlaneGraph graph_from_json(const Json& j);
std::string graph_to_dot(const PlaneGraph& g);

/// {"lists": {"v": [colors]}}; vertices missing from the object get empty lists.
/// Arrays and bare colors (one-color lists) are accepted too.
Json lists_to_json(const ListAssignment& l);
ListAssignment lists_from_json(const Json& j, std::size_t n);

Json coloring_to_json(const std::vector<Color>& c);
std::vector<Color> coloring_from_json(const Json& j, std::size_t n);

Json faces_to_json(const PlaneGraph& g);
Json orientation_to_json(const PlaneGraph& g, const BipolarOrientation& o);
Json special_to_json(const PlaneGraph& g, const SpecialAssignment& sa);
Json decomposition_to_json(const SquareDecomposition& d);
Json face_coloring_to_json(const FaceColoring& c);
Json face_audit_to_json(const FaceAudit& a);
Json walk_audit_to_json(const WalkAudit& a);
Json verdict_to_json(const Verdict& v);
Json square_verdict_to_json(const SquareVerdict& v);
Json stages_to_json(const std::vector<StageAudit>& s);

/// Reads "schedule" ("empirical"|"guaranteed") and "budget" ({key: value}).
SizeSchedule schedule_from_json(const Json& options);

}  // namespace nonrep
