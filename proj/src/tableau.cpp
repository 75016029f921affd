#include "facschur/tableau.hpp"

#include <algorithm>

namespace facschur {

namespace {

// Row-major cells with the positions of their left and upper neighbours
// inside the skew diagram (-1 when the neighbour is outside).
struct CellLayout {
  std::vector<Cell> cells;
  std::vector<int> left;
  std::vector<int> up;

  explicit CellLayout(const SkewShape& shape) : cells(shape.cells()) {
    left.assign(cells.size(), -1);
    up.assign(cells.size(), -1);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const Cell c = cells[k];
      for (std::size_t prev = 0; prev < k; ++prev) {
        if (cells[prev] == Cell{c.row, c.col - 1}) left[k] = static_cast<int>(prev);
        if (cells[prev] == Cell{c.row - 1, c.col}) up[k] = static_cast<int>(prev);
      }
    }
  }
};

void ssyt_rec(const CellLayout& layout, int max_entry, std::size_t k, std::vector<int>& entries,
              const SsytVisitor& visit) {
  if (k == layout.cells.size()) {
    visit(layout.cells, entries);
    return;
  }
  int lo = 1;
  if (layout.left[k] >= 0) lo = std::max(lo, entries[layout.left[k]]);
  if (layout.up[k] >= 0) lo = std::max(lo, entries[layout.up[k]] + 1);
  for (int value = lo; value <= max_entry; ++value) {
    entries[k] = value;
    ssyt_rec(layout, max_entry, k + 1, entries, visit);
  }
}

// Ordering constraint between a cell and its left (same row) neighbour.
bool row_ok(SuperEntry left, SuperEntry cur, Flavor flavor) {
  if (!left.primed && cur.primed) return false;
  if (left.primed && cur.primed) return cur.index < left.index;
  if (left.primed && !cur.primed) return true;
  return flavor == Flavor::Standard ? cur.index >= left.index : cur.index <= left.index;
}

// Ordering constraint between a cell and its upper (same column) neighbour.
bool col_ok(SuperEntry up, SuperEntry cur, Flavor flavor) {
  if (!up.primed && cur.primed) return false;
  if (up.primed && cur.primed) return cur.index <= up.index;
  if (up.primed && !cur.primed) return true;
  return flavor == Flavor::Standard ? cur.index > up.index : cur.index < up.index;
}

struct SuperSearch {
  const CellLayout& layout;
  Flavor flavor;
  std::vector<SuperEntry> candidates;
  const SuperVisitor& visit;
  SuperTableau current;

  void run(std::size_t k) {
    if (k == layout.cells.size()) {
      visit(current);
      return;
    }
    for (const SuperEntry& cand : candidates) {
      if (layout.left[k] >= 0 && !row_ok(current.entries[layout.left[k]], cand, flavor)) continue;
      if (layout.up[k] >= 0 && !col_ok(current.entries[layout.up[k]], cand, flavor)) continue;
      current.entries[k] = cand;
      run(k + 1);
    }
  }
};

} // namespace

void for_each_ssyt(const SkewShape& shape, int max_entry, const SsytVisitor& visit) {
  CellLayout layout(shape);
  std::vector<int> entries(layout.cells.size(), 0);
  ssyt_rec(layout, max_entry, 0, entries, visit);
}

std::size_t count_ssyt(const SkewShape& shape, int max_entry) {
  std::size_t count = 0;
  for_each_ssyt(shape, max_entry, [&](std::span<const Cell>, std::span<const int>) { ++count; });
  return count;
}

void for_each_super(const SkewShape& shape, int m, int n, Flavor flavor, const SuperVisitor& visit) {
  CellLayout layout(shape);
  SuperSearch search{layout, flavor, {}, visit, {}};
  for (int j = n; j >= 1; --j) search.candidates.push_back({true, j});
  for (int i = 1; i <= m; ++i) search.candidates.push_back({false, i});
  search.current.cells = layout.cells;
  search.current.entries.assign(layout.cells.size(), SuperEntry{});
  search.run(0);
}

std::vector<SuperTableau> enumerate_super(const SkewShape& shape, int m, int n, Flavor flavor) {
  std::vector<SuperTableau> out;
  for_each_super(shape, m, n, flavor, [&](const SuperTableau& t) { out.push_back(t); });
  return out;
}

} // namespace facschur
