#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nonrep {

using Vertex = std::uint32_t;
using FaceId = std::uint32_t;
// A dart is a directed edge, identified by (tail, index into the tail's rotation).
using DartId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

using Edge = std::pair<Vertex, Vertex>;  // always (min, max)

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Closed boundary walk of one face. Occurrence i is `vertices[i]`, and the
/// walk leaves it along `darts[i]` towards `vertices[(i + 1) % size()]`.
struct FaceWalk {
  FaceId id = 0;
  std::vector<Vertex> vertices;
  std::vector<DartId> darts;

  std::size_t size() const { return vertices.size(); }
  Vertex at(std::size_t i) const { return vertices[i % vertices.size()]; }
};

/// Connected simple graph with a rotation system (cyclic neighbour order per
/// vertex) and a designated external face. Immutable after build().
///
/// Face tracing rule: the dart u->v is followed by v->w where w is the
/// successor of u in the rotation of v.
class PlaneGraph {
 public:
  /// Validates the rotation system and traces faces. When `external_face` is
  /// absent the face with the longest walk is chosen (ties: smallest id).
  static PlaneGraph build(std::vector<std::vector<Vertex>> rotation,
                          std::optional<FaceId> external_face = std::nullopt);

  /// Same as build(), but rejects rotations that disagree with `edges`.
  static PlaneGraph build(std::span<const Edge> edges, std::vector<std::vector<Vertex>> rotation,
                          std::optional<FaceId> external_face = std::nullopt);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return dart_count() / 2; }
  std::size_t dart_count() const { return heads_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  std::size_t degree(Vertex v) const { return rotation_[v].size(); }

  /// Position of `neighbor` in the rotation of `v`, or kNone.
  std::uint32_t index_of(Vertex v, Vertex neighbor) const;
  bool adjacent(Vertex u, Vertex v) const { return index_of(u, v) != kNone; }

  DartId dart(Vertex tail, std::uint32_t index) const { return offset_[tail] + index; }
  /// Dart from `tail` to `head`; kNone if they are not adjacent.
  DartId dart_between(Vertex tail, Vertex head) const;
  Vertex tail(DartId d) const { return tails_[d]; }
  Vertex head(DartId d) const { return heads_[d]; }
  DartId twin(DartId d) const { return twins_[d]; }
  DartId next_in_face(DartId d) const;
  FaceId face_of(DartId d) const { return dart_face_[d]; }
  /// Occurrence index of the dart's tail within its face walk.
  std::uint32_t position_in_face(DartId d) const { return dart_pos_[d]; }

  std::span<const FaceWalk> faces() const { return faces_; }
  const FaceWalk& face(FaceId f) const { return faces_[f]; }
  FaceId external_face() const { return external_; }

  /// Sorted list of undirected edges.
  std::vector<Edge> edges() const;

  /// Same rotation system, different external face.
  PlaneGraph with_external_face(FaceId f) const;

 private:
  void trace_faces();

  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::uint32_t> offset_;
  // Per vertex: (neighbor, rotation index) sorted by neighbor.
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> lookup_;
  std::vector<Vertex> tails_;
  std::vector<Vertex> heads_;
  std::vector<DartId> twins_;
  std::vector<FaceId> dart_face_;
  std::vector<std::uint32_t> dart_pos_;
  std::vector<FaceWalk> faces_;
  FaceId external_ = 0;
};

/// One closed walk per face, in face-id order.
std::span<const FaceWalk> facial_walks(const PlaneGraph& g);

/// Edges of the facial square: E(g) plus every pair joined by a facial path
/// with two edges. Sorted, deduplicated, no self-pairs.
std::vector<Edge> facial_square_edges(const PlaneGraph& g);

/// Rotation system induced by straight-line coordinates: neighbours sorted
/// clockwise by angle. Used by generators and tests.
std::vector<std::vector<Vertex>> rotation_from_coordinates(
    std::span<const std::pair<double, double>> points, std::span<const Edge> edges);

}  // namespace nonrep
