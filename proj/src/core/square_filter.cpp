#include "core/square_filter.hpp"

#include <algorithm>
#include <map>

#include "core/errors.hpp"
#include "core/thomassen.hpp"

namespace nonrep {

namespace {

SquareClass pair_class(std::size_t i, std::size_t l) {
  if (l % 2 == 1) {
    if (i == l - 1) return kGreen;  // {v_{l-1}, v_1}
    if (i == l - 2) return kRed;    // {v_{l-2}, v_0}
  }
  return i % 2 == 1 ? kGreen : kBlue;
}

}  // namespace

SquareDecomposition decompose_square(const PlaneGraph& g) {
  SquareDecomposition dec;
  const std::vector<Edge> graph_edges = g.edges();
  std::map<Edge, std::size_t> first;  // pair -> chord index
  for (int cls : {kRed, kGreen, kBlue}) {
    for (const FaceWalk& w : g.faces()) {
      const std::size_t l = w.size();
      if (l < 3) continue;
      for (std::size_t i = 0; i < l; ++i) {
        if (pair_class(i, l) != cls) continue;
        const Vertex a = w.vertices[i], c = w.vertices[(i + 2) % l];
        if (a == c || g.adjacent(a, c)) continue;
        const Edge e = make_edge(a, c);
        if (first.contains(e)) continue;
        first.emplace(e, dec.chords.size());
        dec.chords.push_back({e, static_cast<SquareClass>(cls), w.id, static_cast<std::uint32_t>(i)});
      }
    }
  }
  dec.classes[kRed] = graph_edges;
  for (const SquareChord& ch : dec.chords) dec.classes[ch.cls].push_back(ch.edge);
  for (auto& c : dec.classes) std::sort(c.begin(), c.end());

  // Chords leaving occurrence i of face f: (towards i-2, towards i+2).
  std::vector<std::vector<std::array<std::size_t, 2>>> at(g.face_count());
  for (const FaceWalk& w : g.faces()) at[w.id].assign(w.size(), {SIZE_MAX, SIZE_MAX});
  for (std::size_t k = 0; k < dec.chords.size(); ++k) {
    const SquareChord& ch = dec.chords[k];
    const std::size_t l = g.face(ch.face).size();
    at[ch.face][ch.pos][1] = k;
    at[ch.face][(ch.pos + 2) % l][0] = k;
  }

  const std::size_t n = g.vertex_count();
  for (int cls : {kRed, kGreen, kBlue}) dec.rotation[cls].assign(n, {});
  for (Vertex x = 0; x < n; ++x) {
    const auto rot = g.rotation(x);
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const Vertex y = rot[k];
      dec.rotation[kRed][x].push_back(y);
      // The angle after y belongs to the face of the dart y -> x.
      const DartId in = g.dart_between(y, x);
      const FaceId f = g.face_of(in);
      const std::size_t l = g.face(f).size();
      const std::size_t occ = (g.position_in_face(in) + 1) % l;
      for (std::size_t idx : at[f][occ]) {
        if (idx == SIZE_MAX) continue;
        const SquareChord& ch = dec.chords[idx];
        dec.rotation[ch.cls][x].push_back(ch.edge.first == x ? ch.edge.second : ch.edge.first);
      }
    }
  }
  return dec;
}

std::vector<ClassComponent> class_components(const std::vector<std::vector<Vertex>>& rotation) {
  const std::size_t n = rotation.size();
  std::vector<Vertex> comp(n, kNone);
  std::vector<ClassComponent> out;
  for (Vertex r = 0; r < n; ++r) {
    if (comp[r] != kNone) continue;
    const auto id = static_cast<Vertex>(out.size());
    std::vector<Vertex> verts{r};
    comp[r] = id;
    for (std::size_t h = 0; h < verts.size(); ++h)
      for (Vertex w : rotation[verts[h]])
        if (comp[w] == kNone) {
          comp[w] = id;
          verts.push_back(w);
        }
    std::sort(verts.begin(), verts.end());
    std::vector<std::vector<Vertex>> rot(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (Vertex w : rotation[verts[i]])
        rot[i].push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), w) - verts.begin()));
    try {
      out.push_back({PlaneGraph::build(std::move(rot)), std::move(verts)});
    } catch (const Error& e) {
      fail(ErrorCode::NonPlanarClass, std::string("square class component rejected: ") + e.what());
    }
  }
  return out;
}

void check_square_decomposition(const PlaneGraph& g, const SquareDecomposition& dec) {
  std::vector<Edge> all;
  for (const auto& c : dec.classes) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  ensure(std::adjacent_find(all.begin(), all.end()) == all.end(), "square classes overlap");
  ensure(all == facial_square_edges(g), "square classes do not cover the facial square");
  const auto edges = g.edges();
  ensure(std::includes(dec.classes[kRed].begin(), dec.classes[kRed].end(), edges.begin(), edges.end()),
         "red class misses an edge of the graph");
  for (int cls : {kRed, kGreen, kBlue}) {
    for (const ClassComponent& c : class_components(dec.rotation[cls])) {
      const std::size_t v = c.graph.vertex_count(), e = c.graph.edge_count();
      ensure(v < 3 || e <= 3 * v - 6, "square class exceeds the planar edge bound");
    }
  }
  // Same-class chords of one face: occurrence intervals must nest or be disjoint.
  std::map<std::pair<FaceId, int>, std::vector<std::pair<std::size_t, std::size_t>>> spans;
  for (const SquareChord& ch : dec.chords) {
    const std::size_t l = g.face(ch.face).size();
    std::size_t a = ch.pos, b = (ch.pos + 2) % l;
    if (a > b) std::swap(a, b);
    spans[{ch.face, ch.cls}].emplace_back(a, b);
  }
  for (const auto& [key, iv] : spans)
    for (std::size_t i = 0; i < iv.size(); ++i)
      for (std::size_t j = i + 1; j < iv.size(); ++j) {
        const auto [a, b] = iv[i];
        const auto [c, d] = iv[j];
        const bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
        ensure(!cross, "same-class chords cross inside a face");
      }
}

ListAssignment filter_square(const PlaneGraph& g, const ListAssignment& lists, std::size_t m,
                             std::optional<std::size_t> keep) {
  const std::size_t n = g.vertex_count();
  if (lists.vertex_count() != n) fail(ErrorCode::InvalidArgument, "list assignment does not match the graph");
  const std::size_t k = keep.value_or(m);
  if (k < m) fail(ErrorCode::InvalidArgument, "square filter cannot keep fewer than m colors");
  const SquareDecomposition dec = decompose_square(g);
  ListAssignment cur = lists;
  // Each non-empty class divides by five; an empty class keeps the size.
  std::size_t sizes[3];
  std::size_t acc = k;
  for (int cls = kBlue; cls >= kRed; --cls) {
    sizes[cls] = acc;
    if (!dec.classes[cls].empty()) acc *= 5;
  }
  for (int cls : {kRed, kGreen, kBlue}) {
    ListAssignment next(n);
    std::vector<char> covered(n, 0);
    for (const ClassComponent& c : class_components(dec.rotation[cls])) {
      std::vector<ColorSet> sub(c.to_parent.size());
      for (std::size_t i = 0; i < sub.size(); ++i) sub[i] = cur[c.to_parent[i]];
      ListAssignment filtered = filter_proper(c.graph, ListAssignment(std::move(sub)), sizes[cls]);
      for (std::size_t i = 0; i < c.to_parent.size(); ++i) {
        next.set(c.to_parent[i], filtered[static_cast<Vertex>(i)]);
        covered[c.to_parent[i]] = 1;
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (!covered[v]) next.set(v, take(cur, v, sizes[cls], {}, "square"));
    cur = std::move(next);
  }
  for (const Edge& e : facial_square_edges(g))
    ensure(!intersects(cur[e.first], cur[e.second]), "square filter output is not square-proper");
  check_subset_chain(lists, cur, "square");
  return cur;
}

}  // namespace nonrep
