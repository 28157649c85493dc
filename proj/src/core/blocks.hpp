#pragma once

#include <vector>

#include "core/plane_graph.hpp"

namespace nonrep {

/// Block-cut decomposition: 2-connected blocks (single edges count as blocks).
struct BlockCut {
  std::vector<std::vector<Vertex>> block_vertices;  // sorted
  std::vector<std::uint32_t> dart_block;            // block id per dart
  std::vector<Vertex> cut_vertices;                 // sorted
  std::vector<std::vector<std::uint32_t>> vertex_blocks;  // blocks containing each vertex

  std::size_t block_count() const { return block_vertices.size(); }
  bool is_cut(Vertex v) const { return vertex_blocks[v].size() > 1; }
};

BlockCut blocks_and_cuts(const PlaneGraph& g);

bool is_two_connected(const PlaneGraph& g);

/// A sub-embedding: the rotation of `g` restricted to a vertex subset and an
/// edge predicate, relabelled densely. Faces of the subgraph map to the faces
/// of `g` that contain their darts.
struct SubEmbedding {
  PlaneGraph graph;
  std::vector<Vertex> to_parent;                  // local -> parent vertex
  std::vector<FaceId> face_to_parent;             // local face -> a parent face its darts lie in
  std::vector<DartId> dart_to_parent;             // local dart -> parent dart
};

/// Embedding of block `b`. The local external face is the one whose darts lie
/// in `parent_face` (defaults to the external face of g when it touches the block).
SubEmbedding block_embedding(const PlaneGraph& g, const BlockCut& bc, std::uint32_t b,
                             FaceId parent_face = kNone);

}  // namespace nonrep
