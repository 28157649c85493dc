#include "core/face_filter.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace nonrep {

bool FaceContext::in_a(Vertex v) const { return std::find(a.begin(), a.end(), v) != a.end(); }

FaceContext make_face_context(const PlaneGraph& g, const SpecialAssignment& sa, FaceId f) {
  if (f >= g.face_count()) fail(ErrorCode::InvalidArgument, "face id out of range");
  FaceContext ctx;
  ctx.face = f;
  ctx.s = sa.specials[f][0];
  ctx.t = sa.specials[f][1];
  const FaceWalk& w = g.face(f);
  const std::size_t l = w.size();
  // Start the walk at the first occurrence of s.
  std::size_t start = 0;
  while (start < l && w.vertices[start] != ctx.s) ++start;
  if (start == l) fail(ErrorCode::Internal, "special vertex missing from its face");
  ctx.walk = linear_walk(w, start);
  ctx.regular = sa.regular_vertices(g, f);

  std::set<Vertex> in_a;
  for (std::size_t i = 0; i < l; ++i) {
    const Vertex v = ctx.walk[i];
    if (ctx.special(v)) continue;
    if (ctx.special(ctx.walk[(i + 1) % l]) || ctx.special(ctx.walk[(i + l - 1) % l]))
      if (in_a.insert(v).second) ctx.a.push_back(v);
  }

  std::vector<std::size_t> occ;  // positions holding an A-vertex
  for (std::size_t i = 0; i < l; ++i)
    if (in_a.count(ctx.walk[i])) occ.push_back(i);
  for (Vertex v : ctx.regular) ctx.a5[v];
  if (occ.empty()) return ctx;
  for (std::size_t i = 0; i < l; ++i) {
    const Vertex v = ctx.walk[i];
    if (ctx.special(v)) continue;
    auto& out = ctx.a5[v];
    const std::size_t q = occ.size();
    const std::size_t fwd = static_cast<std::size_t>(std::upper_bound(occ.begin(), occ.end(), i) - occ.begin());
    const std::size_t bwd = static_cast<std::size_t>(std::lower_bound(occ.begin(), occ.end(), i) - occ.begin());
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<Vertex> seen;
      for (std::size_t step = 0; step < q && seen.size() < 5; ++step) {
        const std::size_t k = dir == 0 ? (fwd + step) % q : (bwd + q - 1 - step % q) % q;
        const Vertex x = ctx.walk[occ[k]];
        if (x != v && std::find(seen.begin(), seen.end(), x) == seen.end()) seen.push_back(x);
      }
      out.insert(out.end(), seen.begin(), seen.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return ctx;
}

std::vector<std::vector<Vertex>> facial_paths(const FaceWalk& w) {
  const std::size_t l = w.size();
  std::vector<std::vector<Vertex>> out;
  if (l == 0) return out;
  // len[i]: longest run of distinct vertices starting at occurrence i, at most l.
  std::vector<std::size_t> len(l);
  for (std::size_t i = 0; i < l; ++i) {
    std::set<Vertex> seen;
    std::size_t k = 0;
    while (k < l && seen.insert(w.at(i + k)).second) ++k;
    len[i] = k;
  }
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t prev = (i + l - 1) % l;
    // Maximal unless the run from the previous occurrence already covers it.
    if (len[i] < l && len[prev] >= len[i] + 1) continue;
    std::vector<Vertex> p;
    for (std::size_t k = 0; k < len[i]; ++k) p.push_back(w.at(i + k));
    out.push_back(std::move(p));
  }
  return out;
}

ListAssignment prepare_face(const FaceContext& ctx, const ListAssignment& lists,
                            const std::vector<std::size_t>& target, std::uint64_t seed) {
  if (target.size() != lists.vertex_count()) fail(ErrorCode::InvalidArgument, "one target per vertex expected");
  for (Vertex v : ctx.walk)
    if (v >= lists.vertex_count()) fail(ErrorCode::InvalidArgument, "face vertex without a list");
  ListAssignment cur = lists;
  const std::string stage = "face " + std::to_string(ctx.face);

  auto related = [&](Vertex v, Vertex w) {
    const auto& av = ctx.a5.at(v);
    const auto& aw = ctx.a5.at(w);
    return std::binary_search(av.begin(), av.end(), w) || std::binary_search(aw.begin(), aw.end(), v);
  };
  // Regular vertices outside A that each A-vertex will strip.
  std::map<Vertex, std::vector<Vertex>> victims;
  for (Vertex v : ctx.regular)
    if (!ctx.in_a(v))
      for (Vertex w : ctx.a5.at(v)) victims[w].push_back(v);

  // A-vertices in boundary order, each disjoint from every A5-related
  // A-vertex chosen before it. Among the admissible colors prefer the ones
  // that cost the fewest colors to vertices with little slack.
  std::set<Vertex> chosen;
  for (Vertex v : ctx.a) {
    ColorSet forbidden;
    for (Vertex w : chosen)
      if (related(v, w)) forbidden = set_union(forbidden, cur[w]);
    const ColorSet avail = set_difference(cur[v], forbidden);
    if (avail.size() < target[v])
      fail(ErrorCode::InsufficientColors, stage + " A-vertex: vertex " + std::to_string(v) + " needs " +
                                              std::to_string(target[v]) + " colors, has " +
                                              std::to_string(avail.size()));
    std::vector<std::pair<double, Color>> cost;
    for (Color c : avail) cost.emplace_back(0.0, c);
    auto charge = [&](const ColorSet& list, std::size_t need) {
      const double w = 1.0 / static_cast<double>((list.size() > need ? list.size() - need : 0) + 1);
      for (auto& [x, c] : cost)
        if (std::binary_search(list.begin(), list.end(), c)) x += w;
    };
    for (Vertex u : victims[v]) charge(cur[u], target[u]);
    for (Vertex b : ctx.a)
      if (!chosen.count(b) && b != v && related(v, b)) charge(cur[b], target[b]);
    Rng rng(derive_seed(seed, 0xa0000000ULL + v));
    shuffle_range(cost.begin(), cost.end(), rng);
    std::stable_sort(cost.begin(), cost.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ColorSet pick;
    for (std::size_t i = 0; i < target[v]; ++i) pick.push_back(cost[i].second);
    cur.set(v, make_color_set(std::move(pick)));
    chosen.insert(v);
    // Strip right away so later choices see the remaining slack.
    for (Vertex u : victims[v]) cur.set(u, set_difference(cur[u], cur[v]));
  }

  return cur;
}

ListAssignment filter_face(const FaceContext& ctx, const ListAssignment& lists,
                           const std::vector<std::size_t>& target, const SizeSchedule& schedule,
                           std::uint64_t seed, FaceAudit* audit) {
  ListAssignment cur = prepare_face(ctx, lists, target, seed);
  std::set<Vertex> chosen(ctx.a.begin(), ctx.a.end());

  // Boundary components after removing A and the specials. The walk starts
  // at s, so no component wraps around.
  std::vector<std::vector<Vertex>> runs;
  std::vector<Vertex> run;
  for (Vertex v : ctx.walk) {
    if (ctx.special(v) || chosen.count(v)) {
      if (!run.empty()) runs.push_back(std::move(run));
      run.clear();
    } else {
      run.push_back(v);
    }
  }
  if (!run.empty()) runs.push_back(std::move(run));
  std::map<Vertex, std::size_t> owner;
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (Vertex v : runs[r]) {
      auto [it, fresh] = owner.emplace(v, r);
      ensure(fresh || it->second == r, "face filter: boundary runs share a vertex");
    }

  if (audit) {
    audit->face = ctx.face;
    audit->s = ctx.s;
    audit->t = ctx.t;
    audit->a = ctx.a;
    audit->a5 = ctx.a5;
    audit->runs = runs;
    audit->walks.clear();
  }
  for (std::size_t r = 0; r < runs.size(); ++r) {
    WalkAudit wa;
    cur = filter_walk(std::span<const Vertex>(runs[r]), cur, target, schedule, derive_seed(seed, r),
                      audit ? &wa : nullptr);
    if (audit) audit->walks.push_back(std::move(wa));
  }
  ensure(cur[ctx.s] == lists[ctx.s] && cur[ctx.t] == lists[ctx.t], "face filter touched a special list");
  return cur;
}

ListAssignment filter_face(const FaceContext& ctx, const ListAssignment& lists, std::size_t m,
                           const SizeSchedule& schedule, std::uint64_t seed, FaceAudit* audit) {
  const std::vector<std::size_t> t(lists.vertex_count(), m);
  return filter_face(ctx, lists, t, schedule, seed, audit);
}

}  // namespace nonrep
