#pragma once

#include <vector>

#include "core/list_core.hpp"
#include "core/plane_graph.hpp"

namespace nonrep {

struct NearTriangulation {
  PlaneGraph graph;          // same vertex ids, same external walk
  std::vector<Edge> added;   // virtual chords, sorted
};

/// Triangulates every bounded face of a 2-connected plane graph. Each face is
/// fanned from its smallest vertex when possible; otherwise it is split at the
/// lexicographically smallest non-adjacent pair and the halves are revisited.
NearTriangulation near_triangulate(const PlaneGraph& g);

/// Extends a precoloring of cycle[0], cycle[1] to the whole near-triangulation.
/// `cycle` is the external walk, `lists` the working lists (modified), and
/// `out` receives m colors per vertex; out[cycle[0]] and out[cycle[1]] must be
/// set on entry.
void extend_precoloring(const PlaneGraph& nt, std::vector<Vertex> cycle,
                        std::vector<ColorSet>& lists, std::vector<ColorSet>& out, std::size_t m);

/// (5m:m) proper filtering: M(v) has exactly m colors and adjacent vertices get
/// disjoint lists.
ListAssignment filter_proper(const PlaneGraph& g, const ListAssignment& lists, std::size_t m);

/// True when M(u) and M(v) are disjoint on every edge of g.
bool is_proper_assignment(const PlaneGraph& g, const ListAssignment& lists);

}  // namespace nonrep
