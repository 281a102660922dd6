#pragma once

#include <span>
#include <vector>

#include "krasner/core.hpp"

namespace krasner {

/// All tuples over [0, carrier)^len, in lexicographic order.
/// `f` returning false stops the scan early.
template <typename F>
void for_all_tuples(int carrier, int len, F&& f) {
  if (len == 0) {
    f(std::span<const ElementId>{});
    return;
  }
  if (carrier <= 0) return;
  std::vector<ElementId> tuple(static_cast<size_t>(len), 0);
  while (true) {
    if constexpr (std::is_void_v<decltype(f(std::span<const ElementId>(tuple)))>) {
      f(std::span<const ElementId>(tuple));
    } else {
      if (!f(std::span<const ElementId>(tuple))) return;
    }
    int pos = len - 1;
    while (pos >= 0 && ++tuple[static_cast<size_t>(pos)] == carrier)
      tuple[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) return;
  }
}

/// All sorted tuples (multisets) of the given length over [0, carrier),
/// ascending. `f` returning false stops the scan early.
template <typename F>
void for_all_multisets(int carrier, int len, F&& f) {
  if (len == 0) {
    f(std::span<const ElementId>{});
    return;
  }
  if (carrier <= 0) return;
  std::vector<ElementId> tuple(static_cast<size_t>(len), 0);
  while (true) {
    if constexpr (std::is_void_v<decltype(f(std::span<const ElementId>(tuple)))>) {
      f(std::span<const ElementId>(tuple));
    } else {
      if (!f(std::span<const ElementId>(tuple))) return;
    }
    int pos = len - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == carrier - 1) --pos;
    if (pos < 0) return;
    ElementId v = ++tuple[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < len; ++i) tuple[static_cast<size_t>(i)] = v;
  }
}

/// All size-u position subsets of [0, w), lexicographic.
template <typename F>
void for_all_position_subsets(int w, int u, F&& f) {
  std::vector<int> pos(static_cast<size_t>(u));
  for (int i = 0; i < u; ++i) pos[static_cast<size_t>(i)] = i;
  while (true) {
    f(std::span<const int>(pos));
    int i = u - 1;
    while (i >= 0 && pos[static_cast<size_t>(i)] == w - u + i) --i;
    if (i < 0) return;
    ++pos[static_cast<size_t>(i)];
    for (int j = i + 1; j < u; ++j) pos[static_cast<size_t>(j)] = pos[static_cast<size_t>(j - 1)] + 1;
  }
}

/// Odometer over per-position choice lists. `f` receives the current
/// choice tuple; returning false stops early.
template <typename F>
void for_all_choices(const std::vector<std::vector<int>>& lists, F&& f) {
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<size_t> odo(lists.size(), 0);
  std::vector<ElementId> tuple(lists.size());
  while (true) {
    for (size_t i = 0; i < lists.size(); ++i) tuple[i] = lists[i][odo[i]];
    if constexpr (std::is_void_v<decltype(f(std::span<const ElementId>(tuple)))>) {
      f(std::span<const ElementId>(tuple));
    } else {
      if (!f(std::span<const ElementId>(tuple))) return;
    }
    size_t pos = lists.size();
    bool done = true;
    while (pos-- > 0) {
      if (++odo[pos] < lists[pos].size()) {
        done = false;
        break;
      }
      odo[pos] = 0;
    }
    if (done) return;
  }
}

}  // namespace krasner
