#pragma once

#include <optional>
#include <span>

#include "core/list_core.hpp"

namespace nonrep {

struct PathStats {
  std::uint64_t draws = 0;
  std::uint64_t resamples = 0;  // violated blocks found
};

/// Las Vegas filtering of a simple path: random m-subsets drawn left to right;
/// whenever an even block ending at the newest vertex has all aligned pairs
/// intersecting, its second half is erased and redrawn. Gives up with
/// ResampleBudgetExceeded after resample_factor * n redraws.
/// Vertices outside the path keep their lists.
ListAssignment nonrep_filter_path(std::span<const Vertex> path, const ListAssignment& lists, std::size_t m,
                                  std::uint64_t seed, std::uint64_t resample_factor = 1'000'000,
                                  PathStats* stats = nullptr);

/// Same procedure with a size per path position.
ListAssignment nonrep_filter_path_sized(std::span<const Vertex> path, const ListAssignment& lists,
                                        std::span<const std::size_t> sizes, std::uint64_t seed,
                                        std::uint64_t resample_factor = 1'000'000, PathStats* stats = nullptr);

/// Anchored variant around path[s] (0-based): M(path[s]) = L(path[s]), the
/// vertices before s keep m colors avoiding M(path[s-1]), the vertices after s
/// keep `right_size` colors avoiding M(path[s]) and M(path[s-1]).
ListAssignment anchored_filter(std::span<const Vertex> path, std::size_t s, const ListAssignment& lists,
                               std::size_t m, std::size_t right_size, std::uint64_t seed,
                               std::uint64_t resample_factor = 1'000'000, PathStats* stats = nullptr);

/// First (start, half) of an even block of `seq` whose aligned lists all intersect.
std::optional<std::pair<std::size_t, std::size_t>> find_feasible_repetition(std::span<const Vertex> seq,
                                                                            const ListAssignment& lists);

}  // namespace nonrep
