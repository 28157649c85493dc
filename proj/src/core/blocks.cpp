#include "core/blocks.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace nonrep {

BlockCut blocks_and_cuts(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  BlockCut bc;
  bc.dart_block.assign(g.dart_count(), kNone);
  bc.vertex_blocks.assign(n, {});
  if (g.edge_count() == 0) return bc;

  std::vector<std::uint32_t> disc(n, kNone), low(n, 0);
  std::vector<DartId> edge_stack;
  struct Frame {
    Vertex v;
    DartId parent_dart;
    std::uint32_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;

  auto close_block = [&](DartId until) {
    std::vector<Vertex> verts;
    const auto id = static_cast<std::uint32_t>(bc.block_vertices.size());
    while (true) {
      const DartId d = edge_stack.back();
      edge_stack.pop_back();
      bc.dart_block[d] = id;
      bc.dart_block[g.twin(d)] = id;
      verts.push_back(g.tail(d));
      verts.push_back(g.head(d));
      if (d == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Vertex v : verts) bc.vertex_blocks[v].push_back(id);
    bc.block_vertices.push_back(std::move(verts));
  };

  disc[0] = low[0] = timer++;
  stack.push_back({0, kNone, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    if (f.next < g.degree(v)) {
      const DartId d = g.dart(v, f.next++);
      const Vertex w = g.head(d);
      if (f.parent_dart != kNone && d == g.twin(f.parent_dart)) continue;
      if (disc[w] == kNone) {
        edge_stack.push_back(d);
        disc[w] = low[w] = timer++;
        stack.push_back({w, d, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(d);
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      const DartId pd = f.parent_dart;
      stack.pop_back();
      if (pd == kNone) break;
      const Vertex u = g.tail(pd);
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) close_block(pd);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (bc.vertex_blocks[v].size() > 1) bc.cut_vertices.push_back(v);
  }
  return bc;
}

bool is_two_connected(const PlaneGraph& g) {
  if (g.vertex_count() < 2) return false;
  return blocks_and_cuts(g).block_count() == 1;
}

SubEmbedding block_embedding(const PlaneGraph& g, const BlockCut& bc, std::uint32_t b,
                             FaceId parent_face) {
  const auto& verts = bc.block_vertices[b];
  std::vector<Vertex> local(g.vertex_count(), kNone);
  for (Vertex i = 0; i < verts.size(); ++i) local[verts[i]] = i;

  SubEmbedding sub;
  sub.to_parent = verts;
  std::vector<std::vector<Vertex>> rot(verts.size());
  std::vector<std::vector<DartId>> parent_darts(verts.size());
  for (Vertex i = 0; i < verts.size(); ++i) {
    const Vertex v = verts[i];
    for (std::uint32_t k = 0; k < g.degree(v); ++k) {
      const DartId d = g.dart(v, k);
      if (bc.dart_block[d] != b) continue;
      rot[i].push_back(local[g.head(d)]);
      parent_darts[i].push_back(d);
    }
  }
  PlaneGraph pg = PlaneGraph::build(std::move(rot));
  sub.dart_to_parent.resize(pg.dart_count());
  for (Vertex i = 0; i < verts.size(); ++i)
    for (std::uint32_t k = 0; k < parent_darts[i].size(); ++k)
      sub.dart_to_parent[pg.dart(i, k)] = parent_darts[i][k];

  sub.face_to_parent.resize(pg.face_count());
  if (parent_face == kNone) parent_face = g.external_face();
  FaceId external = kNone;
  for (const FaceWalk& w : pg.faces()) {
    const FaceId pf = g.face_of(sub.dart_to_parent[w.darts.front()]);
    for (DartId d : w.darts)
      ensure(g.face_of(sub.dart_to_parent[d]) == pf, "block face spans several parent faces");
    sub.face_to_parent[w.id] = pf;
    if (pf == parent_face && external == kNone) external = w.id;
  }
  if (external == kNone) external = pg.external_face();
  sub.graph = pg.with_external_face(external);
  return sub;
}

}  // namespace nonrep
