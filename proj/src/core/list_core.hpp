#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/plane_graph.hpp"

namespace nonrep {

using Color = std::uint64_t;
/// Sorted, duplicate-free.
using ColorSet = std::vector<Color>;

ColorSet make_color_set(std::vector<Color> colors);
bool intersects(std::span<const Color> a, std::span<const Color> b);
/// Smallest common color, if any.
bool first_common(std::span<const Color> a, std::span<const Color> b, Color& out);
ColorSet set_union(std::span<const Color> a, std::span<const Color> b);
ColorSet set_difference(std::span<const Color> a, std::span<const Color> b);
bool is_subset(std::span<const Color> sub, std::span<const Color> super);

/// Vertex -> permissible colors. Distinct vertices may be written from
/// different threads as long as the vertex sets are disjoint.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::size_t n) : lists_(n) {}
  explicit ListAssignment(std::vector<ColorSet> lists);

  /// Every vertex gets {0, ..., size-1}.
  static ListAssignment uniform(std::size_t n, std::size_t size);

  std::size_t vertex_count() const { return lists_.size(); }
  const ColorSet& operator[](Vertex v) const { return lists_[v]; }
  const ColorSet& at(Vertex v) const { return lists_.at(v); }
  void set(Vertex v, ColorSet colors);

  std::size_t min_size() const;
  std::size_t max_size() const;
  /// True when every list is a subset of the corresponding list of `super`.
  bool subset_of(const ListAssignment& super) const;
  /// Keep the `k` smallest colors of every list.
  ListAssignment truncated(std::size_t k) const;

  bool operator==(const ListAssignment&) const = default;

 private:
  std::vector<ColorSet> lists_;
};

/// The lexicographically smallest `count` colors of L(v) outside `forbidden`.
/// Throws InsufficientColors naming the vertex, the stage and both counts.
ColorSet take(const ListAssignment& lists, Vertex v, std::size_t count,
              std::span<const Color> forbidden = {}, const std::string& stage = "take");
ColorSet take_from(std::span<const Color> list, std::size_t count, std::span<const Color> forbidden,
                   Vertex v, const std::string& stage);

/// Throws Internal unless every list of `out` is a subset of `in`.
void check_subset_chain(const ListAssignment& in, const ListAssignment& out, const std::string& stage);

}  // namespace nonrep
