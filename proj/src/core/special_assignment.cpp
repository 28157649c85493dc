#include "core/special_assignment.hpp"

#include <algorithm>
#include <string>
#include <variant>

#include "core/bipolar.hpp"
#include "core/errors.hpp"

namespace nonrep {

namespace {

// Solve a connected union of blocks with poles (s, t); `ext` is the face of g
// playing the role of the component's external face.
struct SolveTask {
  std::vector<std::uint32_t> blocks;
  Vertex s;
  Vertex t;
  FaceId ext;
};
struct FixTask {
  FaceId face;
  Vertex s;
  Vertex t;
};
using Task = std::variant<SolveTask, FixTask>;

class Solver {
 public:
  Solver(const PlaneGraph& g, const BlockCut& bc) : g_(g), bc_(bc) {
    in_c_.assign(bc.block_count(), 0);
    comp_.assign(bc.block_count(), kNone);
    face_blocks_.resize(g.face_count());
    for (DartId d = 0; d < g.dart_count(); ++d) face_blocks_[g.face_of(d)].push_back(bc.dart_block[d]);
    for (auto& fb : face_blocks_) {
      std::sort(fb.begin(), fb.end());
      fb.erase(std::unique(fb.begin(), fb.end()), fb.end());
    }
    specials_.assign(g.face_count(), {kNone, kNone});
  }

  std::vector<std::array<Vertex, 2>> run(Vertex s, Vertex t) {
    std::vector<std::uint32_t> all(bc_.block_count());
    for (std::uint32_t b = 0; b < all.size(); ++b) all[b] = b;
    std::vector<Task> stack;
    stack.emplace_back(SolveTask{std::move(all), s, t, g_.external_face()});
    // Tasks pushed earlier run later, so a parent's decision for a shared face
    // overwrites whatever its children wrote there.
    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      if (auto* fix = std::get_if<FixTask>(&task)) {
        specials_[fix->face] = {fix->s, fix->t};
      } else {
        solve(std::get<SolveTask>(task), stack);
      }
    }
    for (FaceId f = 0; f < specials_.size(); ++f)
      ensure(specials_[f][0] != kNone, "face left without special vertices");
    return specials_;
  }

 private:
  void solve(const SolveTask& task, std::vector<Task>& stack) {
    if (task.blocks.size() == 1) {
      solve_block(task.blocks.front(), task.s, task.t, task.ext);
      return;
    }
    for (auto b : task.blocks) in_c_[b] = 1;

    // Smallest vertex lying in two blocks of this component.
    Vertex v = kNone;
    for (auto b : task.blocks)
      for (Vertex u : bc_.block_vertices[b])
        if (u < v && count_blocks_in_c(u) > 1) v = u;
    ensure(v != kNone, "component of several blocks has no cut vertex");

    // Components of C - v, one per block of C containing v.
    std::vector<std::vector<std::uint32_t>> comps;
    for (auto b : bc_.vertex_blocks[v]) {
      if (!in_c_[b] || comp_[b] != kNone) continue;
      const auto id = static_cast<std::uint32_t>(comps.size());
      comps.push_back(collect_component(b, v, id));
    }
    auto contains = [&](const std::vector<std::uint32_t>& comp, Vertex x) {
      if (x == v) return false;
      for (auto b : comp)
        if (std::binary_search(bc_.block_vertices[b].begin(), bc_.block_vertices[b].end(), x)) return true;
      return false;
    };

    // Only a side whose darts at v are consecutive (among darts of C) meets
    // the rest of C in a single face; nested sides wait for a later step.
    std::vector<std::uint32_t> label;
    for (std::uint32_t i = 0; i < g_.degree(v); ++i) {
      const auto b = bc_.dart_block[g_.dart(v, i)];
      if (in_c_[b]) label.push_back(comp_[b]);
    }
    std::vector<std::size_t> runs(comps.size(), 0);
    for (std::size_t i = 0; i < label.size(); ++i)
      if (label[i] != label[(i + label.size() - 1) % label.size()]) ++runs[label[i]];
    std::size_t peel = comps.size();
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (runs[i] <= 1 && !contains(comps[i], task.s) && !contains(comps[i], task.t)) {
        peel = i;
        break;
      }

    if (peel < comps.size()) {
      const auto& k = comps[peel];
      const FaceId f = mixed_face(v, peel);
      // Smallest vertex other than v on the component's side of the mixed face.
      Vertex w = kNone;
      for (const DartId d : g_.face(f).darts)
        if (comp_[bc_.dart_block[d]] == peel && g_.tail(d) != v) w = std::min(w, g_.tail(d));
      ensure(w != kNone, "peeled component has no vertex on the mixed face");
      std::vector<std::uint32_t> rest;
      for (auto b : task.blocks)
        if (comp_[b] != peel) rest.push_back(b);
      std::vector<std::uint32_t> peeled = k;
      std::sort(peeled.begin(), peeled.end());
      reset(task.blocks);
      stack.emplace_back(SolveTask{std::move(rest), task.s, task.t, task.ext});
      stack.emplace_back(SolveTask{std::move(peeled), v, w, f});
      return;
    }

    ensure(comps.size() == 2, "cut vertex separating the poles has more than two sides");
    std::size_t side_s = contains(comps[0], task.s) ? 0 : 1;
    ensure(contains(comps[side_s], task.s) && contains(comps[1 - side_s], task.t),
           "poles are not separated by the cut vertex");
    const FaceId f = mixed_face(v, 0);
    ensure(f == task.ext, "face shared by both sides of the poles' separator is not external");
    std::vector<std::uint32_t> a = comps[side_s], b = comps[1 - side_s];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    reset(task.blocks);
    stack.emplace_back(FixTask{f, task.s, task.t});
    stack.emplace_back(SolveTask{std::move(b), v, task.t, f});
    stack.emplace_back(SolveTask{std::move(a), task.s, v, f});
  }

  void solve_block(std::uint32_t b, Vertex s, Vertex t, FaceId ext) {
    const auto& verts = bc_.block_vertices[b];
    if (verts.size() == 2) {
      ensure((verts[0] == s && verts[1] == t) || (verts[0] == t && verts[1] == s),
             "single-edge block poles differ from its endpoints");
      const DartId d = g_.dart_between(verts[0], verts[1]);
      specials_[g_.face_of(d)] = {s, t};
      return;
    }
    SubEmbedding sub = block_embedding(g_, bc_, b, ext);
    auto local = [&](Vertex x) {
      auto it = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), x);
      ensure(it != sub.to_parent.end() && *it == x, "pole not in block");
      return static_cast<Vertex>(it - sub.to_parent.begin());
    };
    const BipolarOrientation o = orient(sub.graph, local(s), local(t));
    for (FaceId lf = 0; lf < sub.graph.face_count(); ++lf) {
      const auto [lo, hi] = o.face_poles[lf];
      specials_[sub.face_to_parent[lf]] = {sub.to_parent[lo], sub.to_parent[hi]};
    }
  }

  std::size_t count_blocks_in_c(Vertex u) const {
    std::size_t c = 0;
    for (auto b : bc_.vertex_blocks[u]) c += in_c_[b];
    return c;
  }

  std::vector<std::uint32_t> collect_component(std::uint32_t start, Vertex v, std::uint32_t id) {
    std::vector<std::uint32_t> out{start};
    comp_[start] = id;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Vertex u : bc_.block_vertices[out[i]]) {
        if (u == v) continue;
        for (auto b2 : bc_.vertex_blocks[u]) {
          if (in_c_[b2] && comp_[b2] == kNone) {
            comp_[b2] = id;
            out.push_back(b2);
          }
        }
      }
    }
    return out;
  }

  // The face through v containing darts of component `side` and of the rest of C.
  FaceId mixed_face(Vertex v, std::uint32_t side) const {
    for (std::uint32_t i = 0; i < g_.degree(v); ++i) {
      const DartId d = g_.dart(v, i);
      if (!in_c_[bc_.dart_block[d]] || comp_[bc_.dart_block[d]] != side) continue;
      // The angle after d at v belongs to the face of its twin.
      for (const FaceId f : {g_.face_of(g_.twin(d)), g_.face_of(d)})
        for (auto b : face_blocks_[f])
          if (in_c_[b] && comp_[b] != side) return f;
    }
    fail(ErrorCode::Internal, "no face is shared by the two sides of cut vertex " + std::to_string(v));
  }

  void reset(const std::vector<std::uint32_t>& blocks) {
    for (auto b : blocks) {
      in_c_[b] = 0;
      comp_[b] = kNone;
    }
  }

  const PlaneGraph& g_;
  const BlockCut& bc_;
  std::vector<char> in_c_;
  std::vector<std::uint32_t> comp_;
  std::vector<std::vector<std::uint32_t>> face_blocks_;
  std::vector<std::array<Vertex, 2>> specials_;
};

bool on_face(const FaceWalk& w, Vertex v) {
  return std::find(w.vertices.begin(), w.vertices.end(), v) != w.vertices.end();
}

}  // namespace

std::vector<Vertex> SpecialAssignment::regular_vertices(const PlaneGraph& g, FaceId f) const {
  std::vector<Vertex> out;
  for (Vertex v : g.face(f).vertices)
    if (!is_special(f, v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

SpecialAssignment assign(const PlaneGraph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  if (s >= n || t >= n || s == t)
    fail(ErrorCode::InvalidArgument, "special assignment needs two distinct poles");
  const FaceWalk& ext = g.face(g.external_face());
  if (!on_face(ext, s) || !on_face(ext, t))
    fail(ErrorCode::PolesNotOnExternalFace, "poles must lie on the external face");

  const BlockCut bc = blocks_and_cuts(g);
  SpecialAssignment sa;
  sa.s = s;
  sa.t = t;
  sa.specials = Solver(g, bc).run(s, t);
  sa.regular_faces.assign(n, {});
  sa.occurrence_special.resize(g.face_count());
  for (const FaceWalk& w : g.faces()) {
    auto& occ = sa.occurrence_special[w.id];
    occ.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) occ[i] = sa.is_special(w.id, w.vertices[i]);
    for (Vertex v : sa.regular_vertices(g, w.id)) sa.regular_faces[v].push_back(w.id);
  }
  check_special_assignment(g, sa);
  return sa;
}

void check_special_assignment(const PlaneGraph& g, const SpecialAssignment& sa) {
  for (const FaceWalk& w : g.faces()) {
    const auto [a, b] = sa.specials[w.id];
    if (a == b || !on_face(w, a) || !on_face(w, b))
      fail(ErrorCode::Internal, "face " + std::to_string(w.id) + " lacks two special vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (sa.regular_faces[v].size() > 2)
      fail(ErrorCode::Internal, "vertex " + std::to_string(v) + " is regular for more than two faces");
  if (!sa.regular_faces[sa.s].empty() || !sa.regular_faces[sa.t].empty())
    fail(ErrorCode::Internal, "a pole is regular for some face");
}

}  // namespace nonrep
