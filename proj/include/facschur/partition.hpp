#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace facschur {

// Weakly decreasing sequence of positive integers, stored without trailing
// zeros. Parts are addressed 1-based through part(); part(i) is 0 past the
// length, which matches the usual padding convention.
class Partition {
public:
  Partition() = default;
  // Accepts trailing zeros (dropped); rejects negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // The rectangle (cols^rows).
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  bool has_cell(int row, int col) const { return col >= 1 && col <= part(row); }

  // View with exactly `len` entries, zero padded. Throws if length() > len.
  std::vector<int> padded(int len) const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// True iff mu_i <= lambda_i for all i.
bool contains(const Partition& lambda, const Partition& mu);

// True iff lambda_{m+1} <= n.
bool in_hook(const Partition& lambda, int m, int n);

// Shapes attached to a hook partition: mu from the rows longer than n,
// nu from the columns longer than m, rho the part inside the (n^m) rectangle.
struct DerivedShapes {
  Partition mu;
  Partition nu;
  Partition rho;
};

// Throws NotInHook unless in_hook(lambda, m, n).
DerivedShapes derived_shapes(const Partition& lambda, int m, int n);

// Evaluation-point shapes of a hook partition zeta: xi = (zeta_1..zeta_m),
// eta_i = zeta'_i - m where positive. Both returned zero padded to m and n.
struct XiEta {
  std::vector<int> xi;
  std::vector<int> eta;
};

XiEta xi_eta(const Partition& zeta, int m, int n);

// Product of the hook lengths of all cells.
mpz_class hook_product(const Partition& lambda);

// All partitions of `weight`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight);
// All partitions of weight <= max_weight, ordered by weight then as above.
std::vector<Partition> partitions_up_to(int max_weight);
// Partitions of weight <= max_weight inside the (m,n)-hook, same order.
std::vector<Partition> hook_partitions(int max_weight, int m, int n);
// All nu with inner ⊆ nu ⊆ outer.
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer);

// "[3,1]" / "[]".
std::string to_string(const Partition& lambda);
// Accepts "3,1", "[3,1]", "[]" and "" (empty). Throws ParseError.
Partition parse_partition(std::string_view text);

struct Cell {
  int row = 1;
  int col = 1;
  int content() const { return col - row; }
  bool operator==(const Cell&) const = default;
};

// Skew diagram outer/inner with inner ⊆ outer.
class SkewShape {
public:
  SkewShape() = default;
  // Throws PreconditionViolated unless inner ⊆ outer.
  SkewShape(Partition outer, Partition inner);
  // Non-skew shape lambda/∅.
  SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool has_cell(int row, int col) const { return outer_.has_cell(row, col) && !inner_.has_cell(row, col); }
  int size() const { return outer_.weight() - inner_.weight(); }
  // Cells in row-major order.
  std::vector<Cell> cells() const;
  SkewShape conjugate() const;

private:
  Partition outer_;
  Partition inner_;
};

std::string to_string(const SkewShape& shape);

} // namespace facschur
