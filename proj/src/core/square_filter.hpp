#pragma once

#include <array>
#include <optional>
#include <vector>

#include "core/list_core.hpp"
#include "core/plane_graph.hpp"

namespace nonrep {

enum SquareClass : std::uint8_t { kRed = 0, kGreen = 1, kBlue = 2 };

/// A distance-two pair drawn as a chord inside `face`, between occurrences
/// `pos` and `pos + 2` of its walk.
struct SquareChord {
  Edge edge;
  SquareClass cls;
  FaceId face;
  std::uint32_t pos;
};

struct SquareDecomposition {
  std::array<std::vector<Edge>, 3> classes;   // sorted; red includes E(g)
  std::vector<SquareChord> chords;            // one per non-edge pair, first assignment
  /// Rotation system of each class over all vertices of g (isolated ones empty).
  std::array<std::vector<std::vector<Vertex>>, 3> rotation;
};

SquareDecomposition decompose_square(const PlaneGraph& g);

/// One connected component of a class graph with its induced embedding.
struct ClassComponent {
  PlaneGraph graph;
  std::vector<Vertex> to_parent;
};

/// Splits a class rotation into components. Throws NonPlanarClass when a
/// component fails the Euler check.
std::vector<ClassComponent> class_components(const std::vector<std::vector<Vertex>>& rotation);

/// Throws Internal unless the decomposition covers the facial square, red
/// contains E(g), classes are disjoint, each class passes the Euler bound and
/// same-class chords of a face never interleave.
void check_square_decomposition(const PlaneGraph& g, const SquareDecomposition& dec);

/// Three proper-filtering rounds (red, green, blue) keeping 25k, 5k and k
/// colors, where an empty class does not divide by five; k defaults to m. The result is facially-square-proper.
ListAssignment filter_square(const PlaneGraph& g, const ListAssignment& lists, std::size_t m,
                             std::optional<std::size_t> keep = std::nullopt);

}  // namespace nonrep
