#include "core/path_filter.hpp"

#include <algorithm>
#include <optional>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace nonrep {

namespace {

void require_simple(std::span<const Vertex> path, const ListAssignment& lists) {
  std::vector<Vertex> sorted(path.begin(), path.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::InvalidArgument, "path repeats a vertex");
  if (!sorted.empty() && sorted.back() >= lists.vertex_count())
    fail(ErrorCode::InvalidArgument, "path vertex has no list");
}

// Floyd's algorithm: m distinct positions of `list`, uniformly.
ColorSet sample(const ColorSet& list, std::size_t m, Rng& rng) {
  const std::size_t n = list.size();
  std::vector<std::size_t> picked;
  picked.reserve(m);
  for (std::size_t j = n - m; j < n; ++j) {
    const std::size_t t = uniform_below(rng, j + 1);
    picked.push_back(std::find(picked.begin(), picked.end(), t) == picked.end() ? t : j);
  }
  ColorSet out;
  out.reserve(m);
  for (std::size_t i : picked) out.push_back(list[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool meet(const ColorSet& a, const ColorSet& b) {
  if (a.size() == 1 && b.size() == 1) return a[0] == b[0];
  return intersects(a, b);
}

}  // namespace

ListAssignment nonrep_filter_path_sized(std::span<const Vertex> path, const ListAssignment& lists,
                                        std::span<const std::size_t> sizes, std::uint64_t seed,
                                        std::uint64_t resample_factor, PathStats* stats) {
  require_simple(path, lists);
  const std::size_t n = path.size();
  if (sizes.size() != n) fail(ErrorCode::InvalidArgument, "one size per path vertex expected");
  ListAssignment out = lists;
  for (std::size_t i = 0; i < n; ++i)
    if (lists[path[i]].size() < sizes[i])
      fail(ErrorCode::InsufficientColors, "path: vertex " + std::to_string(path[i]) + " needs " +
                                              std::to_string(sizes[i]) + " colors, has " +
                                              std::to_string(lists[path[i]].size()));
  if (n == 1) {
    out.set(path[0], take(lists, path[0], sizes[0], {}, "path"));
    return out;
  }
  Rng rng(seed);
  std::vector<ColorSet> cur(n);
  const std::uint64_t cap = resample_factor * n;
  std::uint64_t draws = 0, resamples = 0;
  std::size_t i = 0;
  while (i < n) {
    if (resamples > cap)
      fail(ErrorCode::ResampleBudgetExceeded,
           "path: gave up after " + std::to_string(resamples) + " resamples on " + std::to_string(n) + " vertices");
    cur[i] = sample(lists[path[i]], sizes[i], rng);
    ++draws;
    std::size_t bad = 0;
    for (std::size_t h = 1; 2 * h <= i + 1 && !bad; ++h) {
      bool all = true;
      for (std::size_t j = i + 1 - h; j <= i; ++j)
        if (!meet(cur[j - h], cur[j])) {
          all = false;
          break;
        }
      if (all) bad = h;
    }
    if (bad) {
      ++resamples;
      i = i + 1 - bad;
    } else {
      ++i;
    }
  }
  for (std::size_t k = 0; k < n; ++k) out.set(path[k], std::move(cur[k]));
  if (stats) {
    stats->draws += draws;
    stats->resamples += resamples;
  }
  return out;
}

ListAssignment nonrep_filter_path(std::span<const Vertex> path, const ListAssignment& lists, std::size_t m,
                                  std::uint64_t seed, std::uint64_t resample_factor, PathStats* stats) {
  const std::vector<std::size_t> sizes(path.size(), m);
  return nonrep_filter_path_sized(path, lists, sizes, seed, resample_factor, stats);
}

ListAssignment anchored_filter(std::span<const Vertex> path, std::size_t s, const ListAssignment& lists,
                               std::size_t m, std::size_t right_size, std::uint64_t seed,
                               std::uint64_t resample_factor, PathStats* stats) {
  require_simple(path, lists);
  const std::size_t n = path.size();
  if (s >= n) fail(ErrorCode::InvalidArgument, "anchor index out of range");
  ListAssignment work = lists;
  ColorSet removed = lists[path[s]];
  if (s >= 1) {
    const Vertex prev = path[s - 1];
    const ColorSet mp = take(lists, prev, m, {}, "anchored");
    work.set(prev, mp);
    for (std::size_t i = 0; i + 1 < s; ++i) work.set(path[i], set_difference(lists[path[i]], mp));
    if (s >= 2) work = nonrep_filter_path(path.subspan(0, s - 1), work, m, derive_seed(seed, 1), resample_factor, stats);
    removed = set_union(removed, mp);
  }
  if (s + 1 < n) {
    for (std::size_t i = s + 1; i < n; ++i) work.set(path[i], set_difference(lists[path[i]], removed));
    work = nonrep_filter_path(path.subspan(s + 1), work, right_size, derive_seed(seed, 2), resample_factor, stats);
  }
  return work;
}

std::optional<std::pair<std::size_t, std::size_t>> find_feasible_repetition(std::span<const Vertex> seq,
                                                                            const ListAssignment& lists) {
  const std::size_t n = seq.size();
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    // run = number of consecutive aligned pairs (j - h, j) that intersect, ending at j.
    std::size_t run = 0;
    for (std::size_t j = h; j < n; ++j) {
      run = intersects(lists[seq[j - h]], lists[seq[j]]) ? run + 1 : 0;
      if (run >= h) return std::make_pair(j + 1 - 2 * h, h);
    }
  }
  return std::nullopt;
}

}  // namespace nonrep
