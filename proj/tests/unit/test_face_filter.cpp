#include <gtest/gtest.h>

#include <set>

#include "core/face_filter.hpp"
#include "core/generators.hpp"
#include "core/special_assignment.hpp"
#include "core/square_filter.hpp"
#include "support/oracles.hpp"

using namespace nonrep;

namespace {

// Every simple subwalk of face f in both directions.
std::vector<std::vector<Vertex>> face_subpaths(const PlaneGraph& g, FaceId f) {
  const FaceWalk& w = g.face(f);
  const std::size_t l = w.size();
  std::vector<std::vector<Vertex>> out;
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<Vertex> p;
      for (std::size_t k = 0; k < l; ++k) {
        const Vertex v = dir == 0 ? w.at(i + k) : w.at(i + l * l - k);
        if (std::find(p.begin(), p.end(), v) != p.end()) break;
        p.push_back(v);
        out.push_back(p);
      }
    }
  return out;
}

bool face_nonrepetitive(const PlaneGraph& g, FaceId f, const ListAssignment& M) {
  for (const auto& p : face_subpaths(g, f))
    if (oracle::list_sequence_repetitive(p, M)) return false;
  return true;
}

struct Prepared {
  PlaneGraph g;
  SpecialAssignment sa;
  ListAssignment lists;
};

Prepared prepare(GenKind kind, std::size_t n, std::uint64_t seed, std::size_t keep) {
  PlaneGraph g = generate(kind, n, seed);
  const FaceWalk& ext = g.face(g.external_face());
  const Vertex s = ext.vertices[0];
  const Vertex t = ext.at(1);
  SpecialAssignment sa = assign(g, s, t);
  auto L = oracle::random_lists(g.vertex_count(), 200 * keep, 2000 * keep, seed);
  return {g, sa, filter_square(g, L, 1, keep)};
}

SizeSchedule roomy() {
  auto s = SizeSchedule::empirical();
  s.set_budget("straddle", 6);
  s.set_budget("fresh", 6);
  return s;
}

}  // namespace

TEST(FacialPaths, CycleFace) {
  auto g = generate(GenKind::Cycle, 7, 0);
  for (const FaceWalk& w : g.faces()) {
    auto paths = facial_paths(w);
    EXPECT_EQ(paths.size(), 7u);
    for (const auto& p : paths) EXPECT_EQ(p.size(), 7u);
  }
}

TEST(FacialPaths, SingleEdge) {
  auto g = generate(GenKind::Cycle, 2, 0);
  ASSERT_EQ(g.face_count(), 1u);
  for (const auto& p : facial_paths(g.face(0))) EXPECT_LE(p.size(), 2u);
}

TEST(FacialPaths, RepeatedVertexMatchesBlocks) {
  auto g = generate(GenKind::BowtieChain, 1, 0);
  const FaceWalk& w = g.face(g.external_face());
  auto paths = facial_paths(w);
  // Every simple subwalk is contained in some returned path.
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<Vertex> p;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Vertex v = w.at(i + k);
      if (std::find(p.begin(), p.end(), v) != p.end()) break;
      p.push_back(v);
    }
    bool covered = false;
    for (const auto& q : paths)
      for (std::size_t o = 0; o + p.size() <= q.size() && !covered; ++o)
        covered = std::equal(p.begin(), p.end(), q.begin() + static_cast<std::ptrdiff_t>(o));
    EXPECT_TRUE(covered);
  }
  for (const auto& q : paths) EXPECT_EQ(std::set<Vertex>(q.begin(), q.end()).size(), q.size());
}

TEST(FaceContext, TriangleHasSingleAVertex) {
  auto g = generate(GenKind::Cycle, 3, 0);
  auto sa = assign(g, 0, 1);
  for (FaceId f = 0; f < g.face_count(); ++f) {
    auto ctx = make_face_context(g, sa, f);
    EXPECT_EQ(ctx.a.size(), 1u);
    EXPECT_FALSE(ctx.special(ctx.a[0]));
    auto L = ListAssignment::uniform(3, 625);
    L = filter_square(g, L, 1, 5);
    FaceAudit audit;
    auto M = filter_face(ctx, L, 2, roomy(), 1, &audit);
    EXPECT_TRUE(audit.runs.empty());
    EXPECT_EQ(M[ctx.a[0]].size(), 2u);
    EXPECT_EQ(M[ctx.s], L[ctx.s]);
    EXPECT_EQ(M[ctx.t], L[ctx.t]);
    EXPECT_TRUE(face_nonrepetitive(g, f, M));
  }
}

TEST(FaceContext, Invariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto P = prepare(GenKind::RandomConnected, 40, seed, 20);
    for (FaceId f = 0; f < P.g.face_count(); ++f) {
      auto ctx = make_face_context(P.g, P.sa, f);
      EXPECT_NE(ctx.s, ctx.t);
      for (Vertex a : ctx.a) EXPECT_FALSE(ctx.special(a));
      for (const auto& [v, a5] : ctx.a5) {
        const std::size_t occ = static_cast<std::size_t>(
            std::count(ctx.walk.begin(), ctx.walk.end(), v));
        EXPECT_LE(a5.size(), 10 * occ);
        for (Vertex a : a5) EXPECT_TRUE(ctx.in_a(a));
      }
    }
  }
}

TEST(FaceContext, AdjacentSpecialsGiveOneRun) {
  auto g = generate(GenKind::Cycle, 9, 0);
  auto sa = assign(g, 0, 1);
  for (FaceId f = 0; f < g.face_count(); ++f) {
    auto ctx = make_face_context(g, sa, f);
    if (!g.adjacent(ctx.s, ctx.t)) continue;
    EXPECT_LE(ctx.a.size(), 2u);
    auto L = filter_square(g, oracle::random_lists(9, 5000, 50000, 3), 1, 40);
    FaceAudit audit;
    auto M = filter_face(ctx, L, 1, roomy(), 5, &audit);
    EXPECT_EQ(audit.runs.size(), 1u);
    EXPECT_TRUE(face_nonrepetitive(g, f, M));
  }
}

TEST(FaceFilter, HexagonOppositeSpecials) {
  auto g = generate(GenKind::Cycle, 6, 0);
  // Force specials 0 and 3 on both faces.
  SpecialAssignment sa = assign(g, 0, 1);
  for (auto& sp : sa.specials) sp = {0, 3};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto L = filter_square(g, oracle::random_lists(6, 3750, 40000, seed), 1, 30);
    for (FaceId f = 0; f < g.face_count(); ++f) {
      auto ctx = make_face_context(g, sa, f);
      EXPECT_EQ(ctx.a.size(), 4u);
      auto M = filter_face(ctx, L, 1, roomy(), seed);
      EXPECT_TRUE(M.subset_of(L));
      EXPECT_EQ(M[0], L[0]);
      EXPECT_EQ(M[3], L[3]);
      EXPECT_TRUE(face_nonrepetitive(g, f, M));
    }
  }
}

// After the A step no repetition-feasible facial path of the face meets A or a special.
TEST(FaceFilter, PreparedListsProtectAAndSpecials) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto P = prepare(GenKind::RandomBiconnected, 30, seed, 30);
    for (FaceId f = 0; f < P.g.face_count(); ++f) {
      auto ctx = make_face_context(P.g, P.sa, f);
      const std::vector<std::size_t> target(P.g.vertex_count(), 1);
      auto Lp = prepare_face(ctx, P.lists, target);
      for (const auto& p : face_subpaths(P.g, f)) {
        bool touches = false;
        for (Vertex v : p) touches |= ctx.special(v) || ctx.in_a(v);
        if (touches) EXPECT_FALSE(oracle::list_sequence_repetitive(p, Lp));
      }
    }
  }
}

TEST(FaceFilter, RandomGraphsEveryFace) {
  for (GenKind kind : {GenKind::MaximalPlanar, GenKind::RandomConnected, GenKind::BowtieChain, GenKind::Tree}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto P = prepare(kind, kind == GenKind::BowtieChain ? 5 : 30, seed, 40);
      for (FaceId f = 0; f < P.g.face_count(); ++f) {
        auto ctx = make_face_context(P.g, P.sa, f);
        FaceAudit audit;
        auto M = filter_face(ctx, P.lists, 1, roomy(), seed, &audit);
        EXPECT_TRUE(M.subset_of(P.lists));
        EXPECT_EQ(M[ctx.s], P.lists[ctx.s]);
        EXPECT_EQ(M[ctx.t], P.lists[ctx.t]);
        for (Vertex v : ctx.walk) EXPECT_GE(M[v].size(), 1u);
        EXPECT_TRUE(face_nonrepetitive(P.g, f, M)) << "kind " << to_string(kind) << " seed " << seed;
        std::set<Vertex> seen;
        for (const auto& run : audit.runs) {
          std::set<Vertex> mine(run.begin(), run.end());
          for (Vertex v : mine) EXPECT_TRUE(seen.insert(v).second);
        }
      }
    }
  }
}

TEST(FaceFilter, SpecialsUntouchedEvenWhenShort) {
  auto P = prepare(GenKind::MaximalPlanar, 20, 4, 30);
  ListAssignment L = P.lists;
  L.set(P.sa.s, {});
  auto ctx = make_face_context(P.g, P.sa, P.g.external_face());
  auto M = filter_face(ctx, L, 1, roomy(), 0);
  EXPECT_TRUE(M[P.sa.s].empty());
}
