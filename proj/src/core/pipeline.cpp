#include "core/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/square_filter.hpp"
#include "core/verifier.hpp"

namespace nonrep {

namespace {

StageAudit measure(std::string name, const ListAssignment& l, std::size_t faces = 0) {
  return {std::move(name), l.min_size(), l.max_size(), faces};
}

template <class F>
auto staged(const std::string& stage, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Internal) throw;
    fail(e.code(), stage + ": " + e.what());
  }
}

// The face context and lists restricted to the face's own vertices.
struct LocalFace {
  FaceContext ctx;
  std::vector<Vertex> to_global;
  ListAssignment lists;
  std::vector<std::size_t> target;
};

LocalFace localize(const FaceContext& ctx, const ListAssignment& lists, const std::vector<std::size_t>& target) {
  LocalFace lf;
  std::map<Vertex, Vertex> id;
  for (Vertex v : ctx.walk)
    if (id.emplace(v, static_cast<Vertex>(lf.to_global.size())).second) lf.to_global.push_back(v);
  auto map = [&](Vertex v) { return id.at(v); };
  lf.ctx.face = ctx.face;
  lf.ctx.s = map(ctx.s);
  lf.ctx.t = map(ctx.t);
  for (Vertex v : ctx.walk) lf.ctx.walk.push_back(map(v));
  for (Vertex v : ctx.regular) lf.ctx.regular.push_back(map(v));
  for (Vertex v : ctx.a) lf.ctx.a.push_back(map(v));
  for (const auto& [v, a5] : ctx.a5) {
    auto& out = lf.ctx.a5[map(v)];
    for (Vertex w : a5) out.push_back(map(w));
    std::sort(out.begin(), out.end());
  }
  std::vector<ColorSet> l;
  for (Vertex v : lf.to_global) {
    l.push_back(lists[v]);
    lf.target.push_back(target[v]);
  }
  lf.lists = ListAssignment(std::move(l));
  return lf;
}

FaceAudit globalize(FaceAudit a, const std::vector<Vertex>& to_global) {
  auto g = [&](Vertex v) { return to_global[v]; };
  a.s = g(a.s);
  a.t = g(a.t);
  for (auto& v : a.a) v = g(v);
  std::map<Vertex, std::vector<Vertex>> a5;
  for (auto& [v, ws] : a.a5) {
    auto& out = a5[g(v)];
    for (Vertex w : ws) out.push_back(g(w));
    std::sort(out.begin(), out.end());
  }
  a.a5 = std::move(a5);
  for (auto& run : a.runs)
    for (auto& v : run) v = g(v);
  return a;
}

// All face rounds from the square-filtered lists; throws on a budget failure.
ListAssignment face_rounds(const PlaneGraph& g, ListAssignment cur, const PipelineOptions& opts,
                           const std::vector<std::size_t>& level, std::uint64_t seed, PipelineResult& res) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = opts.m;
  const SizeSchedule& sched = opts.schedule;
  const auto rounds = static_cast<std::uint32_t>(level.size() - 1);
  std::vector<std::vector<FaceId>> by_class(rounds);
  for (FaceId f = 0; f < g.face_count(); ++f) by_class[res.face_colors.color[f]].push_back(f);

  for (std::uint32_t r = 0; r < rounds; ++r) {
    const auto& faces = by_class[r];
    std::vector<char> owned(n, 0);
    for (FaceId f : faces)
      for (Vertex v : res.specials.regular_vertices(g, f)) {
        ensure(!owned[v], "two faces of one class share a regular vertex");
        owned[v] = 1;
      }

    std::vector<std::size_t> target(n, m);
    for (Vertex v = 0; v < n; ++v) {
      if (!owned[v]) continue;
      if (sched.is_guaranteed()) {
        target[v] = level[r + 1];
        continue;
      }
      for (FaceId f : res.specials.regular_faces[v])
        if (res.face_colors.color[f] > r) target[v] = sched.carry(m);
    }

    const ListAssignment before = cur;
    std::vector<FaceAudit> audits(faces.size());
    std::vector<std::exception_ptr> errors(faces.size());
    std::atomic<std::size_t> next{0};
    std::mutex write;
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < faces.size();) {
        const FaceId f = faces[i];
        try {
          LocalFace lf = localize(make_face_context(g, res.specials, f), before, target);
          FaceAudit fa;
          ListAssignment out = filter_face(lf.ctx, lf.lists, lf.target, sched, derive_seed(seed, f),
                                           opts.keep_face_audits ? &fa : nullptr);
          std::lock_guard lock(write);
          for (Vertex lv : lf.ctx.regular) cur.set(lf.to_global[lv], out[lv]);
          if (opts.keep_face_audits) audits[i] = globalize(std::move(fa), lf.to_global);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    const unsigned threads = std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, faces.size() / 8));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (errors[i]) {
        staged("face round " + std::to_string(r) + ", face " + std::to_string(faces[i]),
               [&]() -> int { std::rethrow_exception(errors[i]); });
      }
    check_subset_chain(before, cur, "face round");
    if (opts.keep_face_audits)
      for (auto& a : audits) res.faces.push_back(std::move(a));
    res.stages.push_back(measure("faces " + std::to_string(r), cur, faces.size()));
  }

  return cur;
}

}  // namespace

std::pair<Vertex, Vertex> default_poles(const PlaneGraph& g) {
  const FaceWalk& w = g.face(g.external_face());
  std::optional<std::pair<Vertex, Vertex>> best;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex a = w.at(i), b = w.at(i + 1);
    if (a == b) continue;
    const std::pair<Vertex, Vertex> p{std::min(a, b), std::max(a, b)};
    if (!best || p < *best) best = p;
  }
  if (!best) fail(ErrorCode::InvalidArgument, "graph has no edge");
  return *best;
}

std::vector<Color> realize_coloring(const PlaneGraph& g, const ListAssignment& lists) {
  if (lists.vertex_count() != g.vertex_count()) fail(ErrorCode::InvalidArgument, "list assignment does not match the graph");
  std::vector<Color> c(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (lists[v].empty()) fail(ErrorCode::InsufficientColors, "vertex " + std::to_string(v) + " has an empty list");
    c[v] = lists[v].front();
  }
  return c;
}

PipelineResult run(const PlaneGraph& g, const ListAssignment& lists, const PipelineOptions& opts) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = opts.m;
  const SizeSchedule& sched = opts.schedule;
  if (m == 0) fail(ErrorCode::InvalidArgument, "m must be positive");
  if (lists.vertex_count() != n) fail(ErrorCode::InvalidArgument, "list assignment does not match the graph");
  if (lists.min_size() < m)
    fail(ErrorCode::InsufficientColors, "input: some list has fewer than m colors");

  PipelineResult res;
  if (sched.is_guaranteed())
    for (int i = 1; i <= 7; ++i) (void)sched.f(i, m);

  res.stages.push_back(measure("input", lists));
  if (n == 1) {
    res.lists = lists.truncated(m);
    res.stages.push_back(measure("final", res.lists));
    return res;
  }

  const auto [s, t] = opts.poles.value_or(default_poles(g));
  res.s = s;
  res.t = t;
  res.specials = staged("special", [&] { return assign(g, s, t); });

  res.face_colors = proper_color(build_H(g, res.specials), opts.max_face_colors, opts.color_node_budget);
  const std::uint32_t rounds = res.face_colors.colors;

  // Sizes after the square stage and after each face round.
  std::vector<std::size_t> level(rounds + 1, m);
  if (sched.is_guaranteed()) {
    for (std::uint32_t r = rounds; r-- > 0;) level[r] = sched.f(7, level[r + 1]);
    res.square_keep = level[0];
    if (lists.min_size() < sched.f(2, level[0]))
      fail(ErrorCode::InsufficientColors, "input: lists need f2 of the square size");
  } else {
    res.square_keep = std::max(m, opts.square_keep.value_or(lists.min_size() / 125));
  }

  ListAssignment cur = staged("square", [&] { return filter_square(g, lists, m, res.square_keep); });
  res.stages.push_back(measure("square", cur));

  const std::size_t base = res.stages.size();
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? opts.seed : derive_seed(opts.seed, 0x5eed0000 + attempt);
    try {
      res.faces.clear();
      res.stages.resize(base);
      cur = face_rounds(g, cur, opts, level, seed, res);
      res.attempts = attempt + 1;
      break;
    } catch (const Error& e) {
      const bool budget = e.code() == ErrorCode::InsufficientColors || e.code() == ErrorCode::ResampleBudgetExceeded;
      if (!budget || attempt + 1 >= sched.attempts()) throw;
    }
  }

  res.lists = cur.truncated(m);
  check_subset_chain(lists, res.lists, "pipeline");
  res.stages.push_back(measure("final", res.lists));
  return res;
}

}  // namespace nonrep
