#pragma once

#include <cstdint>
#include <vector>

#include "core/plane_graph.hpp"
#include "core/special_assignment.hpp"

namespace nonrep {

/// Simple graph on face ids.
struct FaceGraph {
  std::vector<std::vector<FaceId>> adj;  // sorted
  std::vector<std::pair<FaceId, FaceId>> edges;  // (a, b) with a < b, sorted
  std::size_t vertex_count() const { return adj.size(); }
};

FaceGraph make_face_graph(std::size_t n, std::vector<std::pair<FaceId, FaceId>> edges);

/// Faces are adjacent when some vertex is regular for both. Throws Internal
/// when the result violates the planar edge bound.
FaceGraph build_H(const PlaneGraph& g, const SpecialAssignment& sa);

struct FaceColoring {
  std::vector<std::uint32_t> color;  // per face
  std::uint32_t colors = 0;          // number of classes used
  bool exact = false;                // found by the bounded search
  std::uint64_t nodes = 0;           // search nodes spent
};

/// DSATUR backtracking for at most `max_colors` colors within `node_budget`
/// search nodes; otherwise the Kempe-chain 5-coloring of a degeneracy order.
FaceColoring proper_color(const FaceGraph& h, std::uint32_t max_colors = 4,
                          std::uint64_t node_budget = 1'000'000);

/// Five colors (or fewer) for any graph whose every subgraph has a vertex of
/// degree at most 5 and is planar. Throws Internal otherwise.
std::vector<std::uint32_t> five_color(const FaceGraph& h);

bool is_proper(const FaceGraph& h, const std::vector<std::uint32_t>& color);

/// True when no two faces of one class share a regular vertex.
bool classes_independent(const PlaneGraph& g, const SpecialAssignment& sa,
                         const std::vector<std::uint32_t>& color);

}  // namespace nonrep
