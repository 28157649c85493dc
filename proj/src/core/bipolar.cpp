#include "core/bipolar.hpp"

#include <algorithm>
#include <string>

#include "core/blocks.hpp"
#include "core/errors.hpp"

namespace nonrep {

namespace {

bool on_face(const FaceWalk& w, Vertex v) {
  return std::find(w.vertices.begin(), w.vertices.end(), v) != w.vertices.end();
}

// Tarjan's list-insertion st-numbering over a DFS tree rooted at s whose
// first tree edge is s -> t. A virtual edge {s,t} is used when the two poles
// are not adjacent; it lies inside the external face, so planarity is kept.
std::vector<std::uint32_t> st_numbering(const PlaneGraph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  const bool virtual_edge = !g.adjacent(s, t);
  auto neighbors = [&](Vertex v, std::uint32_t i) -> Vertex {
    // The virtual edge is appended at the end of s's and t's neighbour lists.
    if (i < g.degree(v)) return g.rotation(v)[i];
    return v == s ? t : s;
  };
  auto degree = [&](Vertex v) -> std::uint32_t {
    auto d = static_cast<std::uint32_t>(g.degree(v));
    if (virtual_edge && (v == s || v == t)) ++d;
    return d;
  };

  std::vector<std::uint32_t> pre(n, kNone);
  std::vector<Vertex> parent(n, kNone), low(n), order;
  order.reserve(n);
  struct Frame {
    Vertex v;
    std::uint32_t next;
  };
  std::vector<Frame> stack;

  pre[s] = 0;
  low[s] = s;
  order.push_back(s);
  pre[t] = 1;
  low[t] = t;
  parent[t] = s;
  order.push_back(t);
  stack.push_back({s, 0});
  stack.push_back({t, 0});
  std::uint32_t counter = 2;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    if (f.next < degree(v)) {
      const Vertex w = neighbors(v, f.next++);
      if (pre[w] == kNone) {
        pre[w] = counter++;
        low[w] = w;
        parent[w] = v;
        order.push_back(w);
        stack.push_back({w, 0});
      } else if (w != parent[v] && pre[w] < pre[low[v]]) {
        low[v] = w;
      }
    } else {
      stack.pop_back();
      if (parent[v] != kNone) {
        const Vertex p = parent[v];
        if (pre[low[v]] < pre[low[p]]) low[p] = low[v];
      }
    }
  }
  if (order.size() != n) fail(ErrorCode::Internal, "st-numbering DFS did not reach every vertex");

  // Doubly linked list [s, t]; sign true means "minus".
  std::vector<Vertex> prev(n, kNone), next(n, kNone);
  std::vector<char> minus(n, 0);
  next[s] = t;
  prev[t] = s;
  minus[s] = 1;
  for (std::size_t i = 2; i < order.size(); ++i) {
    const Vertex v = order[i];
    const Vertex p = parent[v];
    if (minus[low[v]]) {
      const Vertex a = prev[p];
      prev[v] = a;
      next[v] = p;
      prev[p] = v;
      if (a != kNone) next[a] = v;
      minus[p] = 0;
    } else {
      const Vertex b = next[p];
      next[v] = b;
      prev[v] = p;
      next[p] = v;
      if (b != kNone) prev[b] = v;
      minus[p] = 1;
    }
  }
  std::vector<std::uint32_t> number(n, kNone);
  std::uint32_t k = 0;
  for (Vertex v = s; v != kNone; v = next[v]) number[v] = k++;
  if (k != n) fail(ErrorCode::Internal, "st-numbering list is inconsistent");
  return number;
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> BipolarOrientation::directed_edges(const PlaneGraph& g) const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [a, b] : g.edges())
    out.push_back(points_forward(a, b) ? std::pair{a, b} : std::pair{b, a});
  std::sort(out.begin(), out.end());
  return out;
}

BipolarOrientation orient(const PlaneGraph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  if (s >= n || t >= n || s == t) fail(ErrorCode::InvalidArgument, "poles must be distinct vertices");
  if (!is_two_connected(g))
    fail(ErrorCode::NotTwoConnected, "bipolar orientation needs a 2-connected graph");
  const FaceWalk& ext = g.face(g.external_face());
  if (!on_face(ext, s) || !on_face(ext, t))
    fail(ErrorCode::PolesNotOnExternalFace,
         "poles " + std::to_string(s) + "," + std::to_string(t) + " must lie on the external face");

  BipolarOrientation o;
  o.source = s;
  o.sink = t;
  o.st_number = st_numbering(g, s, t);

  // Every vertex other than the poles needs a lower and a higher neighbour.
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    bool lower = false, higher = false;
    for (Vertex w : g.rotation(v)) (o.st_number[w] < o.st_number[v] ? lower : higher) = true;
    if (!lower || !higher) fail(ErrorCode::Internal, "st-numbering is not bipolar");
  }

  o.face_poles.resize(g.face_count());
  for (const FaceWalk& w : g.faces()) {
    Vertex lo = w.vertices.front(), hi = w.vertices.front();
    for (Vertex v : w.vertices) {
      if (o.st_number[v] < o.st_number[lo]) lo = v;
      if (o.st_number[v] > o.st_number[hi]) hi = v;
    }
    o.face_poles[w.id] = {lo, hi};
  }
  // An st-orientation of a plane graph with both poles on the external face is
  // a planar st-graph, so this gate only trips on a bug.
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (!face_is_two_directed_paths(g, o, f))
      fail(ErrorCode::Internal, "face " + std::to_string(f) + " is not bounded by two directed paths");
  return o;
}

std::pair<Vertex, Vertex> face_poles(const BipolarOrientation& o, FaceId f) { return o.face_poles[f]; }

bool face_is_two_directed_paths(const PlaneGraph& g, const BipolarOrientation& o, FaceId f) {
  const FaceWalk& w = g.face(f);
  const std::size_t l = w.size();
  if (l < 2) return false;
  std::size_t changes = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const bool up_in = o.st_number[w.at(i + l - 1)] < o.st_number[w.at(i)];
    const bool up_out = o.st_number[w.at(i)] < o.st_number[w.at(i + 1)];
    if (up_in != up_out) ++changes;
  }
  return changes == 2;
}

}  // namespace nonrep
