#pragma once

#include "facschur/partition.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace facschur {

// Semistandard fillings: rows weakly increase, columns strictly increase,
// entries in 1..max_entry. The visitor receives the cells in row-major order
// and the matching entries. An empty shape is visited once.
using SsytVisitor = std::function<void(std::span<const Cell> cells, std::span<const int> entries)>;
void for_each_ssyt(const SkewShape& shape, int max_entry, const SsytVisitor& visit);
std::size_t count_ssyt(const SkewShape& shape, int max_entry);

enum class Flavor {
  // Primed entries strictly decrease along rows and weakly decrease down
  // columns; unprimed weakly increase along rows and strictly down columns.
  Standard,
  // As Standard, except unprimed entries weakly decrease along rows and
  // strictly decrease down columns.
  Shifted,
};

struct SuperEntry {
  bool primed = false;
  int index = 1;
  bool operator==(const SuperEntry&) const = default;
};

// Filling by primed indices 1'..n' and unprimed 1..m where, in every row and
// column, primed entries precede unprimed ones.
struct SuperTableau {
  std::vector<Cell> cells;
  std::vector<SuperEntry> entries;
};

using SuperVisitor = std::function<void(const SuperTableau&)>;
// Backtracking in row-major order; each valid filling is visited exactly once.
void for_each_super(const SkewShape& shape, int m, int n, Flavor flavor, const SuperVisitor& visit);
std::vector<SuperTableau> enumerate_super(const SkewShape& shape, int m, int n, Flavor flavor);

} // namespace facschur
