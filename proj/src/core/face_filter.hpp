#pragma once

#include <map>
#include <vector>

#include "core/list_core.hpp"
#include "core/plane_graph.hpp"
#include "core/schedule.hpp"
#include "core/special_assignment.hpp"
#include "core/walk_filter.hpp"

namespace nonrep {

/// One face with its two specials, the set A of regular vertices that sit
/// next to a special on the boundary, and the neighbourhoods A5(v).
struct FaceContext {
  FaceId face = 0;
  std::vector<Vertex> walk;             // boundary occurrences
  Vertex s = 0, t = 0;
  std::vector<Vertex> regular;          // distinct, first-occurrence order
  std::vector<Vertex> a;                // distinct, boundary order from s
  std::map<Vertex, std::vector<Vertex>> a5;  // per regular vertex, sorted

  bool special(Vertex v) const { return v == s || v == t; }
  bool in_a(Vertex v) const;
};

FaceContext make_face_context(const PlaneGraph& g, const SpecialAssignment& sa, FaceId f);

/// Maximal simple subwalks of a closed face walk, one direction only. A face
/// whose walk is a cycle of length l yields l paths of l vertices.
std::vector<std::vector<Vertex>> facial_paths(const FaceWalk& w);

struct FaceAudit {
  FaceId face = 0;
  Vertex s = 0, t = 0;
  std::vector<Vertex> a;
  std::map<Vertex, std::vector<Vertex>> a5;
  std::vector<std::vector<Vertex>> runs;
  std::vector<WalkAudit> walks;
};

/// First half of the face filter: A-vertices get target[v] colors, pairwise
/// disjoint across A5 relations, and every other regular vertex loses the
/// colors of its A5 neighbourhood. Equal-cost colors are ordered by `seed`.
ListAssignment prepare_face(const FaceContext& ctx, const ListAssignment& lists,
                            const std::vector<std::size_t>& target, std::uint64_t seed = 0);

/// Reduces every regular vertex v of the face to target[v] colors so that no
/// facial path of the face admits a repeating coloring, whatever colors the
/// specials take from their lists. Specials' lists are copied unchanged.
ListAssignment filter_face(const FaceContext& ctx, const ListAssignment& lists,
                           const std::vector<std::size_t>& target, const SizeSchedule& schedule,
                           std::uint64_t seed, FaceAudit* audit = nullptr);

ListAssignment filter_face(const FaceContext& ctx, const ListAssignment& lists, std::size_t m,
                           const SizeSchedule& schedule, std::uint64_t seed, FaceAudit* audit = nullptr);

}  // namespace nonrep
