#include <gtest/gtest.h>

#include <numeric>

#include "core/errors.hpp"
#include "core/path_filter.hpp"
#include "support/path_oracle.hpp"

using namespace nonrep;

namespace {

std::vector<Vertex> iota_path(std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST(PathFilter, SingleVertexTakesFirstColors) {
  ListAssignment L({{3, 5, 8, 9}});
  EXPECT_EQ(nonrep_filter_path(iota_path(1), L, 2, 1)[0], (ColorSet{3, 5}));
}

TEST(PathFilter, TwoDisjointLists) {
  ListAssignment L({{1, 2, 3}, {4, 5, 6}});
  auto M = nonrep_filter_path(iota_path(2), L, 2, 9);
  EXPECT_EQ(M[0].size(), 2u);
  EXPECT_TRUE(M.subset_of(L));
}

TEST(PathFilter, LongPathWith33Colors) {
  auto p = iota_path(500);
  auto L = oracle::proper_path_lists(500, 33, 200, 5);
  PathStats st;
  auto M = nonrep_filter_path(p, L, 1, 42, 1'000'000, &st);
  EXPECT_TRUE(M.subset_of(L));
  EXPECT_EQ(M.max_size(), 1u);
  EXPECT_FALSE(find_feasible_repetition(p, M).has_value());
  EXPECT_LT(st.resamples, 500u);
}

TEST(PathFilter, DeterministicGivenSeed) {
  auto p = iota_path(200);
  auto L = oracle::proper_path_lists(200, 10, 40, 1);
  EXPECT_EQ(nonrep_filter_path(p, L, 1, 7), nonrep_filter_path(p, L, 1, 7));
}

TEST(PathFilter, ExhaustiveOracleSmallPaths) {
  for (std::size_t n = 1; n <= 14; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto p = iota_path(n);
      auto L = oracle::proper_path_lists(n, 8, 16, seed * 31 + n);
      auto M = nonrep_filter_path(p, L, 1, seed);
      EXPECT_FALSE(oracle::path_coloring_repeats(p, M)) << n;
      // m = 2 leaves several colorings to enumerate.
      auto M2 = nonrep_filter_path(p, L, 2, seed);
      EXPECT_EQ(find_feasible_repetition(p, M2).has_value(), oracle::path_coloring_repeats(p, M2));
      EXPECT_FALSE(oracle::path_coloring_repeats(p, M2)) << n;
    }
}

TEST(PathFilter, BudgetExceeded) {
  // Every vertex shares its only color: impossible beyond one vertex.
  ListAssignment L({{1}, {1}, {1}});
  try {
    nonrep_filter_path(iota_path(3), L, 1, 0, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResampleBudgetExceeded);
  }
}

TEST(PathFilter, PathOnArbitraryVertexIds) {
  auto L = oracle::proper_path_lists(10, 12, 40, 3);
  std::vector<Vertex> p{9, 8, 7, 6, 5};
  auto M = nonrep_filter_path(p, L, 1, 1);
  for (Vertex v : {0u, 1u, 2u, 3u, 4u}) EXPECT_EQ(M[v], L[v]);
  EXPECT_FALSE(find_feasible_repetition(p, M).has_value());
}

TEST(AnchoredFilter, SizesAndAnchor) {
  auto p = iota_path(6);
  auto L = oracle::proper_path_lists(6, 1300, 4000, 2);
  // Sizes 34 up to the anchor and larger after it.
  std::vector<ColorSet> lists(6);
  for (Vertex v = 0; v < 6; ++v) lists[v] = ColorSet(L[v].begin(), L[v].begin() + (v <= 2 ? 34 : 1300));
  ListAssignment in(lists);
  auto M = anchored_filter(p, 2, in, 1, 34, 11);
  EXPECT_EQ(M[0].size(), 1u);
  EXPECT_EQ(M[1].size(), 1u);
  EXPECT_EQ(M[2], in[2]);
  for (Vertex v = 3; v < 6; ++v) EXPECT_EQ(M[v].size(), 34u);
  EXPECT_TRUE(M.subset_of(in));
  EXPECT_FALSE(find_feasible_repetition(p, M).has_value());
  for (Vertex v : {0u, 2u, 3u, 4u, 5u}) EXPECT_FALSE(intersects(M[v], M[1]));
}

TEST(AnchoredFilter, AnchorAtEnds) {
  auto p = iota_path(5);
  auto L = oracle::proper_path_lists(5, 20, 60, 4);
  auto first = anchored_filter(p, 0, L, 1, 3, 1);
  EXPECT_EQ(first[0], L[0]);
  for (Vertex v = 1; v < 5; ++v) {
    EXPECT_EQ(first[v].size(), 3u);
    EXPECT_FALSE(intersects(first[v], L[0]));
  }
  EXPECT_FALSE(find_feasible_repetition(p, first).has_value());
  auto last = anchored_filter(p, 4, L, 1, 3, 1);
  EXPECT_EQ(last[4], L[4]);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(last[v].size(), 1u);
  EXPECT_FALSE(find_feasible_repetition(p, last).has_value());
}

TEST(AnchoredFilter, AdversarialAcrossBoundary) {
  // Every list contains colors 0..3 so that the boundary colors collide unless removed.
  const std::size_t n = 9;
  auto p = iota_path(n);
  std::vector<ColorSet> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    ColorSet l;
    for (Color c = 0; c < 4; ++c)
      if ((c + v) % 2) l.push_back(c);
    for (Color c = 0; c < 30; ++c) l.push_back(100 * (v + 1) + c);
    lists[v] = make_color_set(l);
  }
  ListAssignment L(lists);
  for (std::size_t s = 0; s < n; ++s) {
    auto M = anchored_filter(p, s, L, 1, 2, s);
    EXPECT_FALSE(find_feasible_repetition(p, M).has_value()) << s;
  }
}

TEST(FeasibleRepetition, Examples) {
  ListAssignment L({{1}, {2}, {1}, {2}});
  auto w = find_feasible_repetition(iota_path(4), L);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, std::make_pair(std::size_t{0}, std::size_t{2}));
  ListAssignment D({{1}, {2}, {3}, {4}});
  EXPECT_FALSE(find_feasible_repetition(iota_path(4), D).has_value());
}
