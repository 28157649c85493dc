#pragma once

#include <span>
#include <vector>

#include "core/list_core.hpp"
#include "core/path_filter.hpp"
#include "core/plane_graph.hpp"
#include "core/schedule.hpp"

namespace nonrep {

/// Maximal simple blocks W[l_i, r_i] (inclusive, 0-based) of a linear walk,
/// with l and r strictly increasing. Odd-numbered blocks (1-based) are red,
/// even ones green.
struct WalkBlocks {
  std::vector<Vertex> walk;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  bool red(std::size_t i) const { return i % 2 == 0; }
};

/// Throws NotFacial when the occurrence pattern is not laminar.
WalkBlocks maximal_blocks(std::span<const Vertex> walk);

/// The walk of a face read linearly from occurrence `cut`.
std::vector<Vertex> linear_walk(const FaceWalk& w, std::size_t cut = 0);

enum class BlockRole : std::uint8_t { Only, First, Middle, Last };

struct WalkAuditBlock {
  std::size_t l = 0, r = 0;
  bool red = true;
  std::size_t target = 0;          // t of the pass
  std::size_t anchor = 0;          // walk index of s
  std::vector<BlockRole> roles;    // per block position
};

struct WalkAudit {
  std::vector<WalkAuditBlock> blocks;
  PathStats path;
};

/// Filters every vertex v of the walk down to target[v] colors so that no
/// simple W-block admits a repetition. Red blocks are processed first with a
/// larger pass target, then green blocks with the final one.
///
/// Guaranteed mode follows the anchored construction exactly (uniform target,
/// red pass target f5). Empirical mode keeps the block order, roles and
/// anchors but filters each block with a single resampling run whose sizes are
/// the pass target before the anchor and tier4 of it from the anchor on.
ListAssignment filter_walk(std::span<const Vertex> walk, const ListAssignment& lists,
                           const std::vector<std::size_t>& target, const SizeSchedule& schedule,
                           std::uint64_t seed, WalkAudit* audit = nullptr);

ListAssignment filter_walk(std::span<const Vertex> walk, const ListAssignment& lists, std::size_t target,
                           const SizeSchedule& schedule, std::uint64_t seed, WalkAudit* audit = nullptr);

ListAssignment filter_walk(const FaceWalk& w, const ListAssignment& lists, std::size_t target,
                           const SizeSchedule& schedule, std::uint64_t seed, std::size_t cut = 0,
                           WalkAudit* audit = nullptr);

}  // namespace nonrep
