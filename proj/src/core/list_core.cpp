#include "core/list_core.hpp"

#include <algorithm>
#include <iterator>

#include "core/errors.hpp"

namespace nonrep {

ColorSet make_color_set(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

bool intersects(std::span<const Color> a, std::span<const Color> b) {
  Color c;
  return first_common(a, b, c);
}

bool first_common(std::span<const Color> a, std::span<const Color> b, Color& out) {
  if (a.empty() || b.empty() || a.back() < b.front() || b.back() < a.front()) return false;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      out = *i;
      return true;
    }
  }
  return false;
}

ColorSet set_union(std::span<const Color> a, std::span<const Color> b) {
  ColorSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ColorSet set_difference(std::span<const Color> a, std::span<const Color> b) {
  ColorSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const Color> sub, std::span<const Color> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ListAssignment::ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {
  for (auto& l : lists_) l = make_color_set(std::move(l));
}

ListAssignment ListAssignment::uniform(std::size_t n, std::size_t size) {
  ColorSet base(size);
  for (std::size_t i = 0; i < size; ++i) base[i] = i;
  return ListAssignment(std::vector<ColorSet>(n, base));
}

void ListAssignment::set(Vertex v, ColorSet colors) { lists_.at(v) = std::move(colors); }

std::size_t ListAssignment::min_size() const {
  std::size_t m = lists_.empty() ? 0 : lists_.front().size();
  for (const auto& l : lists_) m = std::min(m, l.size());
  return m;
}

std::size_t ListAssignment::max_size() const {
  std::size_t m = 0;
  for (const auto& l : lists_) m = std::max(m, l.size());
  return m;
}

bool ListAssignment::subset_of(const ListAssignment& super) const {
  if (super.vertex_count() != vertex_count()) return false;
  for (std::size_t v = 0; v < lists_.size(); ++v)
    if (!is_subset(lists_[v], super.lists_[v])) return false;
  return true;
}

ListAssignment ListAssignment::truncated(std::size_t k) const {
  ListAssignment out = *this;
  for (auto& l : out.lists_)
    if (l.size() > k) l.resize(k);
  return out;
}

ColorSet take_from(std::span<const Color> list, std::size_t count, std::span<const Color> forbidden,
                   Vertex v, const std::string& stage) {
  ColorSet out;
  out.reserve(count);
  auto f = forbidden.begin();
  for (Color c : list) {
    if (out.size() == count) break;
    while (f != forbidden.end() && *f < c) ++f;
    if (f != forbidden.end() && *f == c) continue;
    out.push_back(c);
  }
  if (out.size() < count) {
    const std::size_t available = set_difference(list, forbidden).size();
    fail(ErrorCode::InsufficientColors,
         stage + ": vertex " + std::to_string(v) + " needs " + std::to_string(count) +
             " colors, has " + std::to_string(available));
  }
  return out;
}

ColorSet take(const ListAssignment& lists, Vertex v, std::size_t count, std::span<const Color> forbidden,
              const std::string& stage) {
  return take_from(lists[v], count, forbidden, v, stage);
}

void check_subset_chain(const ListAssignment& in, const ListAssignment& out, const std::string& stage) {
  if (!out.subset_of(in)) fail(ErrorCode::Internal, stage + " produced a list outside its input");
}

}  // namespace nonrep
