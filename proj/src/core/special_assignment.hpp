#pragma once

#include <array>
#include <vector>

#include "core/blocks.hpp"
#include "core/plane_graph.hpp"

namespace nonrep {

/// Per-face classification of boundary vertices into two special vertices and
/// the remaining regular ones. A cut vertex that occurs several times on a
/// face is special for it when the vertex is one of the face's two specials;
/// `occurrence_special` records the same tag per occurrence for auditing.
struct SpecialAssignment {
  Vertex s = 0;
  Vertex t = 0;
  std::vector<std::array<Vertex, 2>> specials;          // per face
  std::vector<std::vector<FaceId>> regular_faces;       // per vertex, ascending
  std::vector<std::vector<char>> occurrence_special;    // per face, per occurrence

  bool is_special(FaceId f, Vertex v) const { return specials[f][0] == v || specials[f][1] == v; }
  /// Distinct regular vertices of face f in first-occurrence order.
  std::vector<Vertex> regular_vertices(const PlaneGraph& g, FaceId f) const;
};

/// Drawing Lemma. s and t must be distinct vertices of the external face.
SpecialAssignment assign(const PlaneGraph& g, Vertex s, Vertex t);

/// Throws Internal when one of the three defining invariants fails.
void check_special_assignment(const PlaneGraph& g, const SpecialAssignment& sa);

}  // namespace nonrep
