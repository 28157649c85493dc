#include "core/generators.hpp"

#include <algorithm>
#include <array>

#include "core/blocks.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

namespace nonrep {

namespace {

using Rotation = std::vector<std::vector<Vertex>>;

std::size_t pos(const std::vector<Vertex>& r, Vertex v) {
  return static_cast<std::size_t>(std::find(r.begin(), r.end(), v) - r.begin());
}

void insert_after(std::vector<Vertex>& r, Vertex after, Vertex v) {
  r.insert(r.begin() + static_cast<std::ptrdiff_t>(pos(r, after)) + 1, v);
}

void erase_value(std::vector<Vertex>& r, Vertex v) { r.erase(r.begin() + static_cast<std::ptrdiff_t>(pos(r, v))); }

Rotation small_graph(std::size_t n) {
  if (n == 1) return {{}};
  return {{1}, {0}};
}

Rotation cycle(std::size_t n) {
  if (n < 3) return small_graph(n);
  Rotation rot(n);
  for (Vertex v = 0; v < n; ++v) rot[v] = {static_cast<Vertex>((v + n - 1) % n), static_cast<Vertex>((v + 1) % n)};
  return rot;
}

// Random vertex insertion into triangular faces.
Rotation stacked(std::size_t n, Rng& rng) {
  if (n < 3) return small_graph(n);
  Rotation rot{{2, 1}, {0, 2}, {1, 0}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  for (Vertex x = 3; x < n; ++x) {
    // Keep the outer triangle (face 1) intact so the external face stays a triangle of the seed.
    const std::size_t fi = faces.size() == 2 ? 0 : uniform_below(rng, faces.size() - 1);
    const std::size_t idx = fi == 0 ? 0 : fi + 1;
    const auto [a, b, c] = faces[idx];
    insert_after(rot[a], c, x);
    insert_after(rot[b], a, x);
    insert_after(rot[c], b, x);
    rot.push_back({b, a, c});
    faces[idx] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  return rot;
}

bool adjacent(const Rotation& rot, Vertex a, Vertex b) {
  return std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end();
}

// Random diagonal flips in a triangulation.
void flip_edges(Rotation& rot, std::size_t flips, Rng& rng) {
  const std::size_t n = rot.size();
  if (n < 5) return;
  for (std::size_t k = 0; k < flips; ++k) {
    const Vertex a = static_cast<Vertex>(uniform_below(rng, n));
    const Vertex b = rot[a][uniform_below(rng, rot[a].size())];
    const auto& ra = rot[a];
    const auto& rb = rot[b];
    const Vertex x = rb[(pos(rb, a) + 1) % rb.size()];
    const Vertex y = ra[(pos(ra, b) + 1) % ra.size()];
    if (x == y || adjacent(rot, x, y) || rot[a].size() <= 3 || rot[b].size() <= 3) continue;
    erase_value(rot[a], b);
    erase_value(rot[b], a);
    // Merged face walk (a, y, b, x); chord y-x.
    insert_after(rot[y], a, x);
    insert_after(rot[x], b, y);
  }
}

Rotation tree(std::size_t n, Rng& rng) {
  Rotation rot(n);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex p = static_cast<Vertex>(uniform_below(rng, v));
    const std::size_t at = uniform_below(rng, rot[p].size() + 1);
    rot[p].insert(rot[p].begin() + static_cast<std::ptrdiff_t>(at), v);
    rot[v].push_back(p);
  }
  return rot;
}

Rotation bowtie_chain(std::size_t k) {
  // Triangles j = 0..k on the x-axis, consecutive ones sharing a base vertex.
  std::vector<std::pair<double, double>> pts;
  std::vector<Edge> edges;
  for (std::size_t j = 0; j <= k + 1; ++j) pts.emplace_back(2.0 * static_cast<double>(j), 0.0);
  for (std::size_t j = 0; j <= k; ++j) {
    const auto top = static_cast<Vertex>(pts.size());
    pts.emplace_back(2.0 * static_cast<double>(j) + 1.0, 1.0);
    const auto l = static_cast<Vertex>(j), r = static_cast<Vertex>(j + 1);
    edges.push_back(make_edge(l, r));
    edges.push_back(make_edge(l, top));
    edges.push_back(make_edge(r, top));
  }
  return rotation_from_coordinates(pts, edges);
}

Rotation delete_edges(Rotation rot, bool keep_two_connected, Rng& rng) {
  const std::size_t n = rot.size();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rot[v])
      if (v < w) edges.emplace_back(v, w);
  shuffle_range(edges.begin(), edges.end(), rng);
  const std::size_t target = uniform_below(rng, edges.size() / 2 + 1);
  std::size_t removed = 0;
  for (const auto& [a, b] : edges) {
    if (removed >= target) break;
    Rotation trial = rot;
    erase_value(trial[a], b);
    erase_value(trial[b], a);
    if (trial[a].empty() || trial[b].empty()) continue;
    try {
      PlaneGraph g = PlaneGraph::build(trial);
      if (keep_two_connected && !is_two_connected(g)) continue;
    } catch (const Error&) {
      continue;
    }
    rot = std::move(trial);
    ++removed;
  }
  return rot;
}

}  // namespace

std::optional<GenKind> parse_gen_kind(const std::string& name) {
  for (GenKind k : {GenKind::Cycle, GenKind::MaximalPlanar, GenKind::Stacked, GenKind::BowtieChain,
                    GenKind::RandomConnected, GenKind::RandomBiconnected, GenKind::Tree})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Cycle: return "cycle";
    case GenKind::MaximalPlanar: return "maximal-planar";
    case GenKind::Stacked: return "stacked";
    case GenKind::BowtieChain: return "bowtie-chain";
    case GenKind::RandomConnected: return "random-connected";
    case GenKind::RandomBiconnected: return "random-biconnected";
    case GenKind::Tree: return "tree";
  }
  return "unknown";
}

PlaneGraph generate(GenKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 1 && kind != GenKind::BowtieChain) fail(ErrorCode::InvalidSize, "generator needs n >= 1");
  if (n > 50'000'000) fail(ErrorCode::InvalidSize, "generator size too large");
  Rng rng(seed);
  Rotation rot;
  switch (kind) {
    case GenKind::Cycle: rot = cycle(n); break;
    case GenKind::Stacked: rot = stacked(n, rng); break;
    case GenKind::MaximalPlanar:
      rot = stacked(n, rng);
      flip_edges(rot, 2 * n, rng);
      break;
    case GenKind::BowtieChain: rot = bowtie_chain(n); break;
    case GenKind::Tree: rot = tree(n, rng); break;
    case GenKind::RandomConnected:
      rot = stacked(n, rng);
      flip_edges(rot, n, rng);
      rot = delete_edges(std::move(rot), false, rng);
      break;
    case GenKind::RandomBiconnected:
      rot = stacked(n, rng);
      flip_edges(rot, n, rng);
      rot = delete_edges(std::move(rot), true, rng);
      break;
  }
  return PlaneGraph::build(std::move(rot));
}

}  // namespace nonrep
