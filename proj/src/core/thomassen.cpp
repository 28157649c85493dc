#include "core/thomassen.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "core/blocks.hpp"
#include "core/errors.hpp"

namespace nonrep {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
  const Edge e = make_edge(a, b);
  return (std::uint64_t{e.first} << 32) | e.second;
}

class Triangulator {
 public:
  explicit Triangulator(const PlaneGraph& g) : rot_(g.rotations()) {
    for (const Edge& e : g.edges()) edges_.insert(edge_key(e.first, e.second));
  }

  void triangulate(std::vector<Vertex> walk) {
    std::vector<std::vector<Vertex>> work{std::move(walk)};
    while (!work.empty()) {
      std::vector<Vertex> w = std::move(work.back());
      work.pop_back();
      const std::size_t l = w.size();
      if (l <= 3) continue;
      const auto x = static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin());
      bool fan = true;
      for (std::size_t k = 2; k + 1 < l && fan; ++k)
        fan = !edges_.contains(edge_key(w[x], w[(x + k) % l]));
      std::size_t i, j;
      if (fan) {
        i = x;
        j = (x + 2) % l;
      } else {
        Edge best{kNone, kNone};
        for (std::size_t a = 0; a < l; ++a)
          for (std::size_t b = a + 2; b < l; ++b) {
            if (a == 0 && b == l - 1) continue;
            if (edges_.contains(edge_key(w[a], w[b]))) continue;
            const Edge e = make_edge(w[a], w[b]);
            if (e < best) {
              best = e;
              i = a;
              j = b;
            }
          }
        ensure(best.first != kNone, "bounded face has no admissible chord");
      }
      if (i > j) std::swap(i, j);
      auto [w1, w2] = split(w, i, j);
      work.push_back(std::move(w2));
      work.push_back(std::move(w1));
    }
  }

  std::vector<std::vector<Vertex>>& rotations() { return rot_; }
  std::vector<Edge>& added() { return added_; }

 private:
  void insert_after(Vertex at, Vertex after, Vertex v) {
    auto& r = rot_[at];
    auto it = std::find(r.begin(), r.end(), after);
    ensure(it != r.end(), "chord insertion lost its anchor");
    r.insert(it + 1, v);
  }

  // Adds the chord w[i]-w[j] inside the face and returns the two new walks.
  std::pair<std::vector<Vertex>, std::vector<Vertex>> split(const std::vector<Vertex>& w,
                                                            std::size_t i, std::size_t j) {
    const std::size_t l = w.size();
    const Vertex vi = w[i], vj = w[j];
    insert_after(vi, w[(i + l - 1) % l], vj);
    insert_after(vj, w[j - 1], vi);
    edges_.insert(edge_key(vi, vj));
    added_.push_back(make_edge(vi, vj));
    std::vector<Vertex> w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    w1.insert(w1.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
    std::vector<Vertex> w2(w.begin() + static_cast<std::ptrdiff_t>(i),
                           w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    return {std::move(w1), std::move(w2)};
  }

  std::vector<std::vector<Vertex>> rot_;
  std::unordered_set<std::uint64_t> edges_;
  std::vector<Edge> added_;
};

}  // namespace

NearTriangulation near_triangulate(const PlaneGraph& g) {
  if (g.vertex_count() >= 3 && !is_two_connected(g))
    fail(ErrorCode::NotTwoConnected, "near_triangulate expects a 2-connected graph");
  Triangulator tri(g);
  for (const FaceWalk& w : g.faces()) {
    if (w.id == g.external_face()) continue;
    std::vector<Vertex> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    ensure(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
           "bounded face of a 2-connected graph is not a cycle");
    tri.triangulate(w.vertices);
  }
  NearTriangulation out;
  const FaceWalk& ext = g.face(g.external_face());
  PlaneGraph t = PlaneGraph::build(std::move(tri.rotations()));
  FaceId new_ext = t.external_face();
  if (!ext.darts.empty()) {
    const Vertex a = g.tail(ext.darts.front()), b = g.head(ext.darts.front());
    new_ext = t.face_of(t.dart_between(a, b));
  }
  out.graph = t.with_external_face(new_ext);
  out.added = std::move(tri.added());
  std::sort(out.added.begin(), out.added.end());
  return out;
}

void extend_precoloring(const PlaneGraph& nt, std::vector<Vertex> cycle,
                        std::vector<ColorSet>& lists, std::vector<ColorSet>& out, std::size_t m) {
  struct Task {
    bool finish;  // colour cycle.back() from the reserved set
    std::vector<Vertex> cycle;
    ColorSet reserved;
  };
  std::vector<std::uint32_t> pos(nt.vertex_count(), kNone);
  std::vector<Task> stack;
  stack.push_back({false, std::move(cycle), {}});

  // Neighbours of c[x] strictly inside the cycle, in rotation order.
  auto interior = [&](const std::vector<Vertex>& c, std::size_t x) {
    const std::size_t p = c.size();
    const Vertex b = c[x], a = c[(x + p - 1) % p], nxt = c[(x + 1) % p];
    const auto rot = nt.rotation(b);
    const std::size_t d = rot.size();
    std::vector<Vertex> in;
    for (std::size_t k = (nt.index_of(b, nxt) + 1) % d; rot[k] != a; k = (k + 1) % d) in.push_back(rot[k]);
    return in;
  };

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const std::vector<Vertex>& c = task.cycle;
    const std::size_t p = c.size();
    if (task.finish) {
      out[c.back()] = take_from(task.reserved, m, out[c[p - 2]], c.back(), "thomassen");
      continue;
    }
    ensure(p >= 3, "thomassen cycle shorter than a triangle");

    // Chord search: v_i v_j with 1 <= i, i + 2 <= j <= p (index p is c[0]).
    for (std::size_t x = 0; x < p; ++x) pos[c[x]] = static_cast<std::uint32_t>(x);
    std::size_t ci = 0, cj = 0;
    for (std::size_t x = 0; x < p && cj == 0; ++x) {
      for (Vertex y : interior(c, x)) {
        if (pos[y] == kNone) continue;
        std::size_t a = x, b = pos[y];
        if (a == 0) a = p;
        if (b == 0) b = p;
        if (a > b) std::swap(a, b);
        ci = a;
        cj = b;
        break;
      }
    }
    std::vector<Vertex> tail_in;
    if (cj == 0) tail_in = interior(c, p - 1);
    for (Vertex v : c) pos[v] = kNone;

    if (cj != 0) {
      std::vector<Vertex> c1(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(ci) + 1);
      c1.insert(c1.end(), c.begin() + static_cast<std::ptrdiff_t>(cj), c.end());
      std::vector<Vertex> c2{c[cj % p]};
      c2.insert(c2.end(), c.begin() + static_cast<std::ptrdiff_t>(ci),
                c.begin() + static_cast<std::ptrdiff_t>(cj));
      stack.push_back({false, std::move(c2), {}});
      stack.push_back({false, std::move(c1), {}});
      continue;
    }

    const Vertex vp = c.back();
    if (tail_in.empty()) {
      ensure(p == 3, "chordless cycle with an empty fan");
      out[vp] = take_from(lists[vp], m, set_union(out[c[0]], out[c[1]]), vp, "thomassen");
      continue;
    }
    ColorSet reserved = take_from(lists[vp], 2 * m, out[c[0]], vp, "thomassen");
    for (Vertex u : tail_in) lists[u] = set_difference(lists[u], reserved);
    std::vector<Vertex> next(c.begin(), c.end() - 1);
    next.insert(next.end(), tail_in.rbegin(), tail_in.rend());
    stack.push_back({true, c, std::move(reserved)});
    stack.push_back({false, std::move(next), {}});
  }
}

bool is_proper_assignment(const PlaneGraph& g, const ListAssignment& lists) {
  for (const Edge& e : g.edges())
    if (intersects(lists[e.first], lists[e.second])) return false;
  return true;
}

ListAssignment filter_proper(const PlaneGraph& g, const ListAssignment& lists, std::size_t m) {
  const std::size_t n = g.vertex_count();
  if (lists.vertex_count() != n)
    fail(ErrorCode::InvalidArgument, "list assignment does not match the graph");
  std::vector<ColorSet> out(n);
  std::vector<char> done(n, 0);
  if (g.edge_count() == 0) {
    out[0] = take(lists, 0, m, {}, "thomassen");
    return ListAssignment(std::move(out));
  }

  const BlockCut bc = blocks_and_cuts(g);
  // Root: the lexicographically smallest edge of the external walk, oriented along it.
  const FaceWalk& ext = g.face(g.external_face());
  DartId root_dart = ext.darts.front();
  for (DartId d : ext.darts)
    if (make_edge(g.tail(d), g.head(d)) < make_edge(g.tail(root_dart), g.head(root_dart))) root_dart = d;
  const Vertex r1 = g.tail(root_dart);
  out[r1] = take(lists, r1, m, {}, "thomassen");
  done[r1] = 1;

  std::vector<char> visited(bc.block_count(), 0);
  std::deque<std::pair<std::uint32_t, Vertex>> queue;
  queue.emplace_back(bc.dart_block[root_dart], r1);
  visited[bc.dart_block[root_dart]] = 1;
  bool root = true;

  while (!queue.empty()) {
    const auto [b, attach] = queue.front();
    queue.pop_front();
    const auto& verts = bc.block_vertices[b];
    if (verts.size() == 2) {
      const Vertex other = verts[0] == attach ? verts[1] : verts[0];
      out[other] = take(lists, other, m, out[attach], "thomassen");
      done[other] = 1;
    } else {
      SubEmbedding sub = block_embedding(g, bc, b);
      const Vertex la = static_cast<Vertex>(
          std::lower_bound(verts.begin(), verts.end(), attach) - verts.begin());
      PlaneGraph block = sub.graph;
      FaceId face = block.external_face();
      if (root) {
        for (DartId d = 0; d < block.dart_count(); ++d)
          if (sub.dart_to_parent[d] == root_dart) face = block.face_of(d);
      } else {
        const auto& w = block.face(face).vertices;
        if (std::find(w.begin(), w.end(), la) == w.end()) {
          for (const FaceWalk& fw : block.faces())
            if (std::find(fw.vertices.begin(), fw.vertices.end(), la) != fw.vertices.end()) {
              face = fw.id;
              break;
            }
        }
      }
      block = block.with_external_face(face);
      NearTriangulation nt = near_triangulate(block);
      std::vector<Vertex> cycle = block.face(face).vertices;
      std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), la), cycle.end());

      std::vector<ColorSet> local_lists(verts.size()), local_out(verts.size());
      for (Vertex i = 0; i < verts.size(); ++i) local_lists[i] = lists[verts[i]];
      local_out[cycle[0]] = out[attach];
      local_out[cycle[1]] = take_from(local_lists[cycle[1]], m, out[attach], verts[cycle[1]], "thomassen");
      extend_precoloring(nt.graph, std::move(cycle), local_lists, local_out, m);
      for (Vertex i = 0; i < verts.size(); ++i) {
        if (verts[i] == attach) continue;
        out[verts[i]] = std::move(local_out[i]);
        done[verts[i]] = 1;
      }
    }
    root = false;
    for (Vertex v : verts)
      for (auto nb : bc.vertex_blocks[v])
        if (!visited[nb]) {
          visited[nb] = 1;
          queue.emplace_back(nb, v);
        }
  }
  for (Vertex v = 0; v < n; ++v) ensure(done[v], "vertex missed by the block traversal");
  ListAssignment result(std::move(out));
  ensure(is_proper_assignment(g, result), "thomassen output is not proper");
  return result;
}

}  // namespace nonrep
