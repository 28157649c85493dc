#include "core/walk_filter.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace nonrep {

namespace {

// Static range-min and range-max over an array.
class SparseTable {
 public:
  SparseTable(const std::vector<std::size_t>& a, bool max) : max_(max) {
    const std::size_t n = a.size();
    table_.push_back(a);
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
      const auto& prev = table_.back();
      std::vector<std::size_t> cur(n - (std::size_t{1} << k) + 1);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = pick(prev[i], prev[i + (std::size_t{1} << (k - 1))]);
      table_.push_back(std::move(cur));
    }
  }
  // Inclusive range [l, r], l <= r.
  std::size_t query(std::size_t l, std::size_t r) const {
    const auto k = static_cast<std::size_t>(std::bit_width(r - l + 1) - 1);
    return pick(table_[k][l], table_[k][r + 1 - (std::size_t{1} << k)]);
  }

 private:
  std::size_t pick(std::size_t a, std::size_t b) const { return max_ ? std::max(a, b) : std::min(a, b); }
  bool max_;
  std::vector<std::vector<std::size_t>> table_;
};

void check_laminar(std::span<const Vertex> walk) {
  const std::size_t n = walk.size();
  if (n < 3) return;
  std::unordered_map<Vertex, std::pair<std::size_t, std::size_t>> span;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = span.try_emplace(walk[i], i, i);
    if (!fresh) it->second.second = i;
  }
  std::vector<std::size_t> first(n), last(n);
  for (std::size_t i = 0; i < n; ++i) std::tie(first[i], last[i]) = span[walk[i]];
  const SparseTable mn(first, false), mx(last, true);
  std::unordered_map<Vertex, std::size_t> prev;
  for (std::size_t j = 0; j < n; ++j) {
    auto it = prev.find(walk[j]);
    if (it != prev.end()) {
      const std::size_t i = it->second;
      if (j > i + 1 && (mn.query(i + 1, j - 1) <= i || mx.query(i + 1, j - 1) >= j))
        fail(ErrorCode::NotFacial, "walk occurrences are not laminar (vertex " + std::to_string(walk[j]) + ")");
      it->second = j;
    } else {
      prev.emplace(walk[j], j);
    }
  }
}

}  // namespace

WalkBlocks maximal_blocks(std::span<const Vertex> walk) {
  check_laminar(walk);
  WalkBlocks wb;
  wb.walk.assign(walk.begin(), walk.end());
  const std::size_t n = walk.size();
  std::unordered_map<Vertex, std::size_t> count;
  std::size_t r = 0;  // exclusive end of the current window
  std::size_t best = 0;
  for (std::size_t l = 0; l < n; ++l) {
    while (r < n && count[walk[r]] == 0) ++count[walk[r++]];
    if (l == 0 || r > best) wb.blocks.emplace_back(l, r - 1);
    best = r;
    --count[walk[l]];
  }
  return wb;
}

std::vector<Vertex> linear_walk(const FaceWalk& w, std::size_t cut) {
  std::vector<Vertex> out(w.vertices.begin(), w.vertices.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(cut % out.size()), out.end());
  return out;
}

ListAssignment filter_walk(std::span<const Vertex> walk, const ListAssignment& lists,
                           const std::vector<std::size_t>& target, const SizeSchedule& schedule,
                           std::uint64_t seed, WalkAudit* audit) {
  if (target.size() != lists.vertex_count()) fail(ErrorCode::InvalidArgument, "one target per vertex expected");
  const WalkBlocks wb = maximal_blocks(walk);
  const std::size_t k = wb.blocks.size();
  ListAssignment cur = lists;
  if (k == 0) return cur;
  const bool guaranteed = schedule.is_guaranteed();
  if (guaranteed)
    for (Vertex v : walk)
      if (target[v] != target[walk[0]])
        fail(ErrorCode::InvalidArgument, "guaranteed walk filtering needs a uniform target");

  std::unordered_map<Vertex, std::pair<std::size_t, std::size_t>> range;  // first/last block per vertex
  std::unordered_map<Vertex, std::vector<std::size_t>> member;             // blocks per vertex
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t p = wb.blocks[b].first; p <= wb.blocks[b].second; ++p) {
      auto [it, fresh] = range.try_emplace(walk[p], b, b);
      if (!fresh) it->second.second = b;
      member[walk[p]].push_back(b);
    }
  // Red blocks run first, then green ones, each group left to right.
  auto processed_later = [&](Vertex v, std::size_t b) {
    for (std::size_t o : member.at(v))
      if (o % 2 == b % 2 ? o > b : o % 2 == 1) return true;
    return false;
  };

  // One block and empirical budgets: the green pass never happens, so the red
  // pass can aim at the final target directly.
  const bool single = k == 1 && !guaranteed;
  for (int pass = 0; pass < 2; ++pass) {
    auto pass_target = [&](Vertex v) -> std::size_t {
      return pass == 1 || single ? target[v] : schedule.red_target(target[v]);
    };
    for (std::size_t b = pass; b < k; b += 2) {
      const auto [l, r] = wb.blocks[b];
      const std::span<const Vertex> path = walk.subspan(l, r - l + 1);
      std::vector<BlockRole> roles(path.size());
      std::size_t anchor = 0, middles = 0;
      for (std::size_t p = 0; p < path.size(); ++p) {
        const auto [fb, lb] = range.at(path[p]);
        const bool before = fb < b, after = lb > b;
        roles[p] = before ? (after ? BlockRole::Middle : BlockRole::Last)
                          : (after ? BlockRole::First : BlockRole::Only);
        if (before) anchor = p;
        middles += roles[p] == BlockRole::Middle;
      }
      ensure(middles <= 1, "walk block has two straddling vertices");
      std::ptrdiff_t last_last = -1, last_ml = -1;
      auto first_mf = static_cast<std::ptrdiff_t>(path.size()), first_first = first_mf;
      for (std::size_t p = 0; p < path.size(); ++p) {
        const auto i = static_cast<std::ptrdiff_t>(p);
        const BlockRole role = roles[p];
        if (role == BlockRole::Last) last_last = i;
        if (role == BlockRole::Middle || role == BlockRole::Last) last_ml = i;
        if ((role == BlockRole::Middle || role == BlockRole::First) && first_mf > i) first_mf = i;
        if (role == BlockRole::First && first_first > i) first_first = i;
      }
      ensure(last_last < first_mf, "walk block has a finished vertex after a continuing one");
      ensure(last_ml < first_first, "walk block has a fresh vertex before a straddling one");

      const std::uint64_t bseed = derive_seed(seed, 2 * b + static_cast<std::uint64_t>(pass));
      PathStats* stats = audit ? &audit->path : nullptr;
      const std::size_t t = pass_target(path[0]);
      if (guaranteed) {
        const std::size_t t4 = schedule.tier4(t), t5 = schedule.tier5(t);
        for (std::size_t p = 0; p < path.size(); ++p) {
          const bool fresh = roles[p] == BlockRole::Only || roles[p] == BlockRole::First;
          const std::size_t need = fresh ? t5 : t4;
          if (cur[path[p]].size() < need)
            fail(ErrorCode::InsufficientColors, "walk: vertex " + std::to_string(path[p]) + " needs " +
                                                    std::to_string(need) + " colors, has " +
                                                    std::to_string(cur[path[p]].size()));
        }
        // The anchor enters the path lemma with exactly tier4 colors.
        cur.set(path[anchor], take(cur, path[anchor], t4, {}, "walk"));
        cur = anchored_filter(path, anchor, cur, t, t4, bseed, schedule.resample_factor(), stats);
      } else {
        std::vector<std::size_t> sizes(path.size());
        for (std::size_t p = 0; p < path.size(); ++p) {
          const std::size_t tv = pass_target(path[p]);
          sizes[p] = processed_later(path[p], b) ? schedule.tier4(tv) : tv;
        }
        cur = nonrep_filter_path_sized(path, cur, sizes, bseed, schedule.resample_factor(), stats);
      }
      if (audit) audit->blocks.push_back({l, r, pass == 0, t, l + anchor, std::move(roles)});
    }
    if (single) break;
  }
  for (Vertex v : walk) {
    ensure(cur[v].size() >= target[v], "walk filter left a vertex below target");
    cur.set(v, ColorSet(cur[v].begin(), cur[v].begin() + static_cast<std::ptrdiff_t>(target[v])));
  }
  return cur;
}

ListAssignment filter_walk(std::span<const Vertex> walk, const ListAssignment& lists, std::size_t target,
                           const SizeSchedule& schedule, std::uint64_t seed, WalkAudit* audit) {
  const std::vector<std::size_t> t(lists.vertex_count(), target);
  return filter_walk(walk, lists, t, schedule, seed, audit);
}

ListAssignment filter_walk(const FaceWalk& w, const ListAssignment& lists, std::size_t target,
                           const SizeSchedule& schedule, std::uint64_t seed, std::size_t cut, WalkAudit* audit) {
  const std::vector<Vertex> lin = linear_walk(w, cut);
  return filter_walk(std::span<const Vertex>(lin), lists, target, schedule, seed, audit);
}

}  // namespace nonrep
