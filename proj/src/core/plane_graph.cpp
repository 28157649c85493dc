#include "core/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "core/errors.hpp"

namespace nonrep {

namespace {

void check_connected(const std::vector<std::vector<Vertex>>& rot) {
  std::vector<char> seen(rot.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rot[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != rot.size())
    fail(ErrorCode::Disconnected,
         "graph is disconnected: " + std::to_string(reached) + " of " +
             std::to_string(rot.size()) + " vertices reachable from 0");
}

}  // namespace

PlaneGraph PlaneGraph::build(std::vector<std::vector<Vertex>> rotation,
                             std::optional<FaceId> external_face) {
  if (rotation.empty()) fail(ErrorCode::InvalidArgument, "graph must be non-empty");
  const auto n = static_cast<Vertex>(rotation.size());

  PlaneGraph g;
  g.rotation_ = std::move(rotation);
  g.offset_.resize(n + 1, 0);
  g.lookup_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = g.rotation_[v];
    auto& lk = g.lookup_[v];
    lk.reserve(r.size());
    for (std::uint32_t i = 0; i < r.size(); ++i) {
      if (r[i] >= n)
        fail(ErrorCode::InvalidArgument,
             "vertex " + std::to_string(v) + " lists out-of-range neighbour " + std::to_string(r[i]));
      if (r[i] == v) fail(ErrorCode::MultiEdgeOrLoop, "loop at vertex " + std::to_string(v));
      lk.emplace_back(r[i], i);
    }
    std::sort(lk.begin(), lk.end());
    for (std::size_t i = 1; i < lk.size(); ++i)
      if (lk[i].first == lk[i - 1].first)
        fail(ErrorCode::MultiEdgeOrLoop, "multi-edge {" + std::to_string(v) + "," +
                                             std::to_string(lk[i].first) + "}");
    g.offset_[v + 1] = g.offset_[v] + static_cast<std::uint32_t>(r.size());
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.rotation_[v])
      if (g.index_of(w, v) == kNone)
        fail(ErrorCode::InvalidArgument, "rotation is not symmetric: " + std::to_string(v) +
                                             " lists " + std::to_string(w) + " but not vice versa");
  check_connected(g.rotation_);

  const std::uint32_t darts = g.offset_[n];
  g.tails_.resize(darts);
  g.heads_.resize(darts);
  g.twins_.resize(darts);
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < g.rotation_[v].size(); ++i) {
      const DartId d = g.offset_[v] + i;
      const Vertex w = g.rotation_[v][i];
      g.tails_[d] = v;
      g.heads_[d] = w;
      g.twins_[d] = g.offset_[w] + g.index_of(w, v);
    }
  }
  g.trace_faces();

  const long long euler = static_cast<long long>(n) - static_cast<long long>(g.edge_count()) +
                          static_cast<long long>(g.face_count());
  if (euler != 2)
    fail(ErrorCode::NotPlanar, "rotation system is not planar: V - E + F = " + std::to_string(euler));

  if (external_face) {
    if (*external_face >= g.face_count())
      fail(ErrorCode::InvalidArgument, "external face " + std::to_string(*external_face) +
                                           " out of range");
    g.external_ = *external_face;
  } else {
    FaceId best = 0;
    for (FaceId f = 1; f < g.face_count(); ++f)
      if (g.faces_[f].size() > g.faces_[best].size()) best = f;
    g.external_ = best;
  }
  return g;
}

PlaneGraph PlaneGraph::build(std::span<const Edge> edges, std::vector<std::vector<Vertex>> rotation,
                             std::optional<FaceId> external_face) {
  PlaneGraph g = build(std::move(rotation), external_face);
  std::vector<Edge> want(edges.begin(), edges.end());
  for (auto& e : want) {
    if (e.first == e.second) fail(ErrorCode::MultiEdgeOrLoop, "loop in edge list");
    e = make_edge(e.first, e.second);
  }
  std::sort(want.begin(), want.end());
  if (std::adjacent_find(want.begin(), want.end()) != want.end())
    fail(ErrorCode::MultiEdgeOrLoop, "duplicate edge in edge list");
  if (want != g.edges())
    fail(ErrorCode::InvalidArgument, "edge list does not match the rotation system");
  return g;
}

void PlaneGraph::trace_faces() {
  const auto n = static_cast<Vertex>(rotation_.size());
  const std::size_t darts = heads_.size();
  dart_face_.assign(darts, kNone);
  dart_pos_.assign(darts, 0);
  faces_.clear();
  if (darts == 0) {
    // Single isolated vertex: one face whose walk is the vertex itself.
    faces_.push_back(FaceWalk{0, {0}, {}});
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < rotation_[v].size(); ++i) {
      const DartId start = offset_[v] + i;
      if (dart_face_[start] != kNone) continue;
      FaceWalk walk;
      walk.id = static_cast<FaceId>(faces_.size());
      DartId d = start;
      do {
        dart_face_[d] = walk.id;
        dart_pos_[d] = static_cast<std::uint32_t>(walk.vertices.size());
        walk.vertices.push_back(tails_[d]);
        walk.darts.push_back(d);
        d = next_in_face(d);
      } while (d != start);
      faces_.push_back(std::move(walk));
    }
  }
}

std::uint32_t PlaneGraph::index_of(Vertex v, Vertex neighbor) const {
  const auto& lk = lookup_[v];
  auto it = std::lower_bound(lk.begin(), lk.end(), std::pair<Vertex, std::uint32_t>{neighbor, 0});
  if (it == lk.end() || it->first != neighbor) return kNone;
  return it->second;
}

DartId PlaneGraph::dart_between(Vertex tail, Vertex head) const {
  const std::uint32_t i = index_of(tail, head);
  return i == kNone ? kNone : offset_[tail] + i;
}

DartId PlaneGraph::next_in_face(DartId d) const {
  const DartId back = twins_[d];  // head -> tail, indexes tail within head's rotation
  const Vertex v = heads_[d];
  const std::uint32_t deg = offset_[v + 1] - offset_[v];
  const std::uint32_t i = back - offset_[v];
  return offset_[v] + (i + 1) % deg;
}

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < rotation_.size(); ++v)
    for (Vertex w : rotation_[v])
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

PlaneGraph PlaneGraph::with_external_face(FaceId f) const {
  if (f >= face_count()) fail(ErrorCode::InvalidArgument, "external face out of range");
  PlaneGraph g = *this;
  g.external_ = f;
  return g;
}

std::span<const FaceWalk> facial_walks(const PlaneGraph& g) { return g.faces(); }

std::vector<Edge> facial_square_edges(const PlaneGraph& g) {
  std::vector<Edge> out = g.edges();
  for (const FaceWalk& w : g.faces()) {
    const std::size_t l = w.size();
    if (l < 3) continue;
    for (std::size_t i = 0; i < l; ++i) {
      const Vertex a = w.vertices[i];
      const Vertex c = w.vertices[(i + 2) % l];
      if (a != c) out.push_back(make_edge(a, c));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Vertex>> rotation_from_coordinates(
    std::span<const std::pair<double, double>> points, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> rot(points.size());
  for (const auto& [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (Vertex v = 0; v < rot.size(); ++v) {
    const auto [x, y] = points[v];
    // Clockwise = decreasing angle.
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex p, Vertex q) {
      const double ap = std::atan2(points[p].second - y, points[p].first - x);
      const double aq = std::atan2(points[q].second - y, points[q].first - x);
      if (ap != aq) return ap > aq;
      return p < q;
    });
  }
  return rot;
}

}  // namespace nonrep
