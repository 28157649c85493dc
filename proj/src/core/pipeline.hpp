#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/face_coloring.hpp"
#include "core/face_filter.hpp"
#include "core/list_core.hpp"
#include "core/plane_graph.hpp"
#include "core/schedule.hpp"
#include "core/special_assignment.hpp"

namespace nonrep {

struct PipelineOptions {
  std::size_t m = 1;
  SizeSchedule schedule = SizeSchedule::empirical();
  std::uint64_t seed = 0;
  std::optional<std::pair<Vertex, Vertex>> poles;  // default: smallest adjacent pair on the external face
  std::optional<std::size_t> square_keep;          // default: max(m, min|L| / 125)
  std::uint32_t max_face_colors = 4;
  std::uint64_t color_node_budget = 1'000'000;
  bool keep_face_audits = false;
};

struct StageAudit {
  std::string name;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::size_t faces = 0;  // face rounds only
};

struct PipelineResult {
  ListAssignment lists;
  Vertex s = 0, t = 0;
  SpecialAssignment specials;
  FaceColoring face_colors;
  std::size_t square_keep = 0;
  std::uint64_t attempts = 0;  // face-round runs until success
  std::vector<StageAudit> stages;
  std::vector<FaceAudit> faces;  // when requested, in face-id order per round
};

/// Smallest (u, v) with u < v adjacent along the external face walk.
std::pair<Vertex, Vertex> default_poles(const PlaneGraph& g);

/// Filters L down to m colors per vertex so that every coloring from the
/// result is facially non-repetitive. Guaranteed mode refuses with
/// GuaranteedModeInfeasible as soon as one ladder value exceeds the cap.
PipelineResult run(const PlaneGraph& g, const ListAssignment& lists, const PipelineOptions& opts);

/// The first color of every list.
std::vector<Color> realize_coloring(const PlaneGraph& g, const ListAssignment& lists);

}  // namespace nonrep
