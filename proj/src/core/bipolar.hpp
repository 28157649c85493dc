#pragma once

#include <vector>

#include "core/plane_graph.hpp"

namespace nonrep {

/// (s,t)-bipolar orientation of a 2-connected plane graph. Every edge points
/// from the endpoint with the smaller st-number to the larger one.
struct BipolarOrientation {
  Vertex source = 0;
  Vertex sink = 0;
  std::vector<std::uint32_t> st_number;          // per vertex, source = 0
  std::vector<std::pair<Vertex, Vertex>> face_poles;  // per face: (s(F), t(F))

  bool points_forward(Vertex from, Vertex to) const { return st_number[from] < st_number[to]; }
  /// Directed edge list (tail, head), sorted.
  std::vector<std::pair<Vertex, Vertex>> directed_edges(const PlaneGraph& g) const;
};

/// st-numbering by depth-first search, followed by a check that every face
/// boundary splits into two directed paths. Throws NotTwoConnected or
/// PolesNotOnExternalFace when preconditions fail.
BipolarOrientation orient(const PlaneGraph& g, Vertex s, Vertex t);

std::pair<Vertex, Vertex> face_poles(const BipolarOrientation& o, FaceId f);

/// Number of local minima of the st-number along the face walk; a bipolar face has exactly one.
bool face_is_two_directed_paths(const PlaneGraph& g, const BipolarOrientation& o, FaceId f);

}  // namespace nonrep
