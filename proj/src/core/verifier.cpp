#include "core/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "core/errors.hpp"

namespace nonrep {

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NONREP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

namespace {

// eq(a, b, color) reports whether occurrences a and b can share a color.
using PairTest = std::function<bool(Vertex, Vertex, Color&)>;

void scan_face(const FaceWalk& w, const PairTest& eq, std::size_t max_witnesses,
               std::vector<RepetitionWitness>& out) {
  const std::size_t l = w.size();
  if (l < 2) return;
  const std::size_t len = 2 * l;
  auto at = [&](std::size_t i) { return w.vertices[i % l]; };
  // maxext[i]: number of distinct vertices starting at i, capped at l.
  std::vector<std::size_t> maxext(l);
  {
    std::unordered_map<Vertex, std::size_t> count;
    std::size_t r = 0;
    for (std::size_t i = 0; i < l; ++i) {
      while (r < len && r - i < l && count[at(r)] == 0) ++count[at(r++)];
      maxext[i] = r - i;
      --count[at(i)];
    }
  }
  std::vector<std::size_t> run(len + 1);
  std::vector<char> meet(len);
  for (std::size_t h = 1; 2 * h <= l; ++h) {
    run[len] = 0;
    Color dummy;
    for (std::size_t i = len; i-- > 0;) {
      meet[i] = i + h < len && eq(at(i), at(i + h), dummy);
      run[i] = meet[i] ? run[i + 1] + 1 : 0;
    }
    for (std::size_t i = 0; i < l; ++i) {
      if (2 * h > maxext[i] || run[i] < h) continue;
      RepetitionWitness wit{w.id, i, h, {}, {}};
      for (std::size_t k = 0; k < 2 * h; ++k) wit.vertices.push_back(at(i + k));
      for (std::size_t k = 0; k < h; ++k) {
        Color c = 0;
        eq(at(i + k), at(i + k + h), c);
        wit.colors.push_back(c);
      }
      out.push_back(std::move(wit));
      if (out.size() >= max_witnesses) return;
    }
  }
}

Verdict scan_all(const PlaneGraph& g, const PairTest& eq, std::size_t max_witnesses) {
  const std::size_t faces = g.face_count();
  std::vector<std::vector<RepetitionWitness>> per_face(faces);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t f; (f = next.fetch_add(1)) < faces;) scan_face(g.face(static_cast<FaceId>(f)), eq, max_witnesses, per_face[f]);
  };
  const unsigned threads = std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, faces / 4));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Verdict v;
  for (auto& ws : per_face)
    for (auto& w : ws)
      if (v.witnesses.size() < max_witnesses) v.witnesses.push_back(std::move(w));
  v.certified = true;
  for (const auto& ws : per_face) v.certified = v.certified && ws.empty();
  return v;
}

}  // namespace

Verdict check_coloring(const PlaneGraph& g, const std::vector<Color>& coloring, std::size_t max_witnesses) {
  if (coloring.size() != g.vertex_count()) fail(ErrorCode::InvalidArgument, "coloring does not match the graph");
  return scan_all(
      g,
      [&](Vertex a, Vertex b, Color& c) {
        c = coloring[a];
        return coloring[a] == coloring[b];
      },
      max_witnesses);
}

Verdict check_list_assignment(const PlaneGraph& g, const ListAssignment& lists, std::size_t max_witnesses) {
  if (lists.vertex_count() != g.vertex_count())
    fail(ErrorCode::InvalidArgument, "list assignment does not match the graph");
  return scan_all(
      g, [&](Vertex a, Vertex b, Color& c) { return first_common(lists[a], lists[b], c); }, max_witnesses);
}

SquareVerdict check_square_proper(const PlaneGraph& g, const ListAssignment& lists, std::size_t max_witnesses) {
  if (lists.vertex_count() != g.vertex_count())
    fail(ErrorCode::InvalidArgument, "list assignment does not match the graph");
  SquareVerdict v;
  for (const Edge& e : facial_square_edges(g)) {
    Color c;
    if (first_common(lists[e.first], lists[e.second], c)) {
      v.certified = false;
      if (v.witnesses.size() < max_witnesses) v.witnesses.push_back({e, c});
    }
  }
  return v;
}

}  // namespace nonrep
