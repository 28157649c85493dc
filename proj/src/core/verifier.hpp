#pragma once

#include <optional>
#include <vector>

#include "core/list_core.hpp"
#include "core/plane_graph.hpp"

namespace nonrep {

/// A facial path of 2*half vertices starting at occurrence `start` of `face`
/// (read forward, wrapping around), with one shared color per aligned pair.
struct RepetitionWitness {
  FaceId face = 0;
  std::size_t start = 0;
  std::size_t half = 0;
  std::vector<Vertex> vertices;
  std::vector<Color> colors;  // size half
};

struct Verdict {
  bool certified = true;
  std::vector<RepetitionWitness> witnesses;  // capped
};

/// Certifies that no facial path is colored as a repetition.
Verdict check_coloring(const PlaneGraph& g, const std::vector<Color>& coloring, std::size_t max_witnesses = 16);

/// Certifies that no facial path has an even block whose aligned lists all
/// intersect, i.e. every coloring from the lists is facially non-repetitive.
Verdict check_list_assignment(const PlaneGraph& g, const ListAssignment& lists, std::size_t max_witnesses = 16);

struct SquareWitness {
  Edge edge;
  Color color;
};

struct SquareVerdict {
  bool certified = true;
  std::vector<SquareWitness> witnesses;
};

/// Certifies M(u) and M(v) disjoint on every edge of the facial square.
SquareVerdict check_square_proper(const PlaneGraph& g, const ListAssignment& lists, std::size_t max_witnesses = 16);

/// Threads used by the checks: NONREP_THREADS when set, else the hardware count.
unsigned worker_threads();

}  // namespace nonrep
