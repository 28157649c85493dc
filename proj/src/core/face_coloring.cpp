#include "core/face_coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "core/errors.hpp"

namespace nonrep {

FaceGraph make_face_graph(std::size_t n, std::vector<std::pair<FaceId, FaceId>> edges) {
  for (auto& [a, b] : edges) {
    if (a >= n || b >= n || a == b) fail(ErrorCode::InvalidArgument, "bad face graph edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  FaceGraph h;
  h.adj.resize(n);
  for (auto [a, b] : edges) {
    h.adj[a].push_back(b);
    h.adj[b].push_back(a);
  }
  for (auto& a : h.adj) std::sort(a.begin(), a.end());
  h.edges = std::move(edges);
  return h;
}

FaceGraph build_H(const PlaneGraph& g, const SpecialAssignment& sa) {
  std::vector<std::pair<FaceId, FaceId>> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& rf = sa.regular_faces[v];
    ensure(rf.size() <= 2, "vertex regular for more than two faces");
    if (rf.size() == 2) edges.emplace_back(rf[0], rf[1]);
  }
  FaceGraph h = make_face_graph(g.face_count(), std::move(edges));
  const std::size_t f = h.vertex_count();
  ensure(f < 3 || h.edges.size() <= 3 * f - 6, "face graph exceeds the planar edge bound");
  return h;
}

bool is_proper(const FaceGraph& h, const std::vector<std::uint32_t>& color) {
  if (color.size() != h.vertex_count()) return false;
  for (auto [a, b] : h.edges)
    if (color[a] == color[b]) return false;
  return true;
}

namespace {

class Dsatur {
 public:
  Dsatur(const FaceGraph& h, std::uint32_t k, std::uint64_t budget)
      : h_(h), k_(k), budget_(budget), color_(h.vertex_count(), kNone),
        count_(h.vertex_count() * k, 0), sat_(h.vertex_count(), 0) {
    for (FaceId v = 0; v < h.vertex_count(); ++v) queue_.insert(key(v));
  }

  bool run() {
    try {
      return step();
    } catch (const Exhausted&) {
      return false;
    }
  }
  const std::vector<std::uint32_t>& color() const { return color_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Exhausted {};
  using Key = std::tuple<std::int64_t, std::int64_t, FaceId>;  // (-sat, -deg, id)

  Key key(FaceId v) const {
    return {-static_cast<std::int64_t>(sat_[v]), -static_cast<std::int64_t>(h_.adj[v].size()), v};
  }

  void assign(FaceId v, std::uint32_t c) {
    color_[v] = c;
    for (FaceId u : h_.adj[v]) {
      if (color_[u] != kNone) continue;
      if (count_[u * k_ + c]++ == 0) {
        queue_.erase(key(u));
        ++sat_[u];
        queue_.insert(key(u));
      }
    }
  }

  void unassign(FaceId v, std::uint32_t c) {
    for (FaceId u : h_.adj[v]) {
      if (color_[u] != kNone) continue;
      if (--count_[u * k_ + c] == 0) {
        queue_.erase(key(u));
        --sat_[u];
        queue_.insert(key(u));
      }
    }
    color_[v] = kNone;
  }

  bool step() {
    if (queue_.empty()) return true;
    if (++nodes_ > budget_) throw Exhausted{};
    const FaceId v = std::get<2>(*queue_.begin());
    queue_.erase(queue_.begin());
    for (std::uint32_t c = 0; c < k_; ++c) {
      if (count_[v * k_ + c]) continue;
      assign(v, c);
      if (step()) return true;
      unassign(v, c);
    }
    queue_.insert(key(v));
    return false;
  }

  const FaceGraph& h_;
  std::uint32_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> sat_;
  std::set<Key> queue_;
};

std::uint32_t class_count(const std::vector<std::uint32_t>& color) {
  std::uint32_t k = 0;
  for (auto c : color) k = std::max(k, c + 1);
  return k;
}

}  // namespace

std::vector<std::uint32_t> five_color(const FaceGraph& h) {
  const std::size_t n = h.vertex_count();
  // Degeneracy order by repeated removal of a vertex of minimum degree.
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, FaceId>> q;
  for (FaceId v = 0; v < n; ++v) q.emplace(deg[v] = h.adj[v].size(), v);
  std::vector<char> removed(n, 0);
  std::vector<FaceId> order;
  while (!q.empty()) {
    auto [d, v] = *q.begin();
    q.erase(q.begin());
    ensure(d <= 5, "face graph has a subgraph of minimum degree above 5");
    removed[v] = 1;
    order.push_back(v);
    for (FaceId u : h.adj[v])
      if (!removed[u]) {
        q.erase({deg[u], u});
        q.emplace(--deg[u], u);
      }
  }
  std::vector<std::uint32_t> color(n, kNone);
  auto kempe = [&](FaceId start, std::uint32_t c1, std::uint32_t c2) {
    std::vector<FaceId> chain{start};
    std::set<FaceId> seen{start};
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (FaceId u : h.adj[chain[i]])
        if ((color[u] == c1 || color[u] == c2) && seen.insert(u).second) chain.push_back(u);
    return chain;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const FaceId v = *it;
    std::vector<FaceId> nb;
    std::uint32_t used = 0;
    for (FaceId u : h.adj[v])
      if (color[u] != kNone) {
        nb.push_back(u);
        used |= 1u << color[u];
      }
    std::uint32_t c = 0;
    while (c < 5 && (used >> c & 1)) ++c;
    if (c < 5) {
      color[v] = c;
      continue;
    }
    // Five neighbours in five colors: some Kempe swap frees a color.
    bool done = false;
    for (std::size_t i = 0; i < nb.size() && !done; ++i)
      for (std::size_t j = i + 1; j < nb.size() && !done; ++j) {
        const std::uint32_t ca = color[nb[i]], cb = color[nb[j]];
        auto chain = kempe(nb[i], ca, cb);
        if (std::find(chain.begin(), chain.end(), nb[j]) != chain.end()) continue;
        for (FaceId u : chain) color[u] = color[u] == ca ? cb : ca;
        color[v] = ca;
        done = true;
      }
    ensure(done, "no Kempe chain frees a color; face graph is not planar");
  }
  return color;
}

FaceColoring proper_color(const FaceGraph& h, std::uint32_t max_colors, std::uint64_t node_budget) {
  FaceColoring out;
  if (max_colors == 0) fail(ErrorCode::InvalidArgument, "at least one color is needed");
  if (h.vertex_count() == 0) {
    out.exact = true;
    return out;
  }
  Dsatur search(h, max_colors, node_budget);
  const bool ok = search.run();
  out.nodes = search.nodes();
  if (ok) {
    out.color = search.color();
    out.exact = true;
  } else {
    out.color = five_color(h);
  }
  out.colors = class_count(out.color);
  ensure(is_proper(h, out.color), "face coloring is not proper");
  return out;
}

bool classes_independent(const PlaneGraph& g, const SpecialAssignment& sa,
                         const std::vector<std::uint32_t>& color) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& rf = sa.regular_faces[v];
    for (std::size_t i = 0; i < rf.size(); ++i)
      for (std::size_t j = i + 1; j < rf.size(); ++j)
        if (color[rf[i]] == color[rf[j]]) return false;
  }
  return true;
}

}  // namespace nonrep
