#include <gtest/gtest.h>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/serialize.hpp"
#include "support/oracles.hpp"

using namespace nonrep;

TEST(Serialize, GraphRoundTripKeepsFaceIds) {
  static const GenKind kinds[] = {GenKind::Cycle, GenKind::MaximalPlanar, GenKind::Stacked, GenKind::BowtieChain,
                                  GenKind::RandomConnected, GenKind::RandomBiconnected, GenKind::Tree};
  for (std::uint64_t seed = 0; seed < 35; ++seed) {
    const auto g = generate(kinds[seed % 7], 4 + seed, seed);
    const auto text = dump(graph_to_json(g));
    const auto h = graph_from_json(parse_json(text));
    ASSERT_EQ(h.vertex_count(), g.vertex_count());
    ASSERT_EQ(h.face_count(), g.face_count());
    EXPECT_EQ(h.external_face(), g.external_face());
    for (FaceId f = 0; f < g.face_count(); ++f) {
      EXPECT_EQ(h.face(f).vertices, g.face(f).vertices) << "face " << f;
      EXPECT_EQ(h.face(f).darts, g.face(f).darts);
    }
    EXPECT_EQ(dump(graph_to_json(h)), text);
  }
}

TEST(Serialize, ExternalFaceOverrideSurvives) {
  const auto g = generate(GenKind::MaximalPlanar, 12, 4).with_external_face(3);
  const auto h = graph_from_json(parse_json(dump(graph_to_json(g))));
  EXPECT_EQ(h.external_face(), 3u);
}

TEST(Serialize, ListsRoundTrip) {
  const auto l = oracle::random_lists(20, 7, 30, 5);
  const auto back = lists_from_json(parse_json(dump(lists_to_json(l))), 20);
  EXPECT_EQ(back, l);
}

TEST(Serialize, ListsAcceptArrayForm) {
  const auto l = lists_from_json(parse_json(R"([[1,2],[3]])"), 2);
  EXPECT_EQ(l[0].size(), 2u);
  EXPECT_EQ(l[1].size(), 1u);
}

TEST(Serialize, BareColorsAreSingletonLists) {
  const auto l = lists_from_json(parse_json("[4,[1,2],7]"), 3);
  EXPECT_EQ(l[0], ColorSet{4});
  EXPECT_EQ(l[2], ColorSet{7});
  const auto k = lists_from_json(parse_json(R"({"lists": {"0": 3, "1": [5]}})"), 2);
  EXPECT_EQ(k[0], ColorSet{3});
}

TEST(Serialize, ColoringRoundTripBothForms) {
  const std::vector<Color> c{4, 1, 9, 1};
  EXPECT_EQ(coloring_from_json(coloring_to_json(c), 4), c);
  EXPECT_EQ(coloring_from_json(parse_json("[4,1,9,1]"), 4), c);
  EXPECT_EQ(coloring_from_json(parse_json(R"({"coloring": [4,1,9,1]})"), 4), c);
}

TEST(Serialize, MalformedInputIsRejected) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code([] { parse_json("{"); }), ErrorCode::Parse);
  EXPECT_NE(code([] { graph_from_json(parse_json(R"({"n": 3, "rotation": [[1], [0]]})")); }), ErrorCode::Internal);
  EXPECT_NE(code([] { graph_from_json(parse_json(R"({"n": 2, "rotation": [[1], [1]]})")); }), ErrorCode::Internal);
  EXPECT_NE(code([] { coloring_from_json(parse_json("[1,2]"), 3); }), ErrorCode::Internal);
}

TEST(Serialize, DumpIsDeterministic) {
  const auto g = generate(GenKind::RandomConnected, 30, 9);
  EXPECT_EQ(dump(faces_to_json(g)), dump(faces_to_json(g)));
  EXPECT_EQ(dump(graph_to_json(g)).back(), '\n');
}
