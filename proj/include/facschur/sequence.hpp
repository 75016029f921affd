#pragma once

#include "facschur/poly.hpp"
#include "facschur/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facschur {

// A doubly infinite parameter sequence a = (a_i), i in Z.
//
// The base sequence is one of
//   Zero                      a_i = 0
//   Arithmetic(offset)        a_i = i + offset
//   Explicit(lo, values)      a_lo .. a_hi given as rationals
//   Symbolic(lo, hi)          a_i is the variable a_i, lo <= i <= hi
// Shift, star and negation are applied lazily and resolved on access:
//   (tau^k a)_i = a_{i+k},   (a*)_i = -a_{n-i+1},   (-a)_i = -a_i.
// Accesses that resolve outside the window of an Explicit or Symbolic base
// throw WindowExceeded with the resolved index.
class ParamSequence {
public:
  enum class Mode { Zero, Arithmetic, Explicit, Symbolic };

  static ParamSequence zero();
  static ParamSequence arithmetic(const Rational& offset);
  static ParamSequence explicit_values(long lo, std::vector<Rational> values);
  static ParamSequence symbolic(long lo, long hi);

  ParamSequence shifted(long k) const;
  ParamSequence star(int n) const;
  ParamSequence negated() const;

  // a_i as a polynomial (a rational constant or the variable a_j).
  Poly get(long i) const;
  // a_i as a rational; throws PreconditionViolated for symbolic sequences.
  Rational value(long i) const;

  Mode mode() const { return base_->mode; }
  bool is_numeric() const { return base_->mode != Mode::Symbolic; }
  // Window of the base sequence; nullopt for Zero and Arithmetic.
  std::optional<std::pair<long, long>> window() const;

  // True iff a_i != a_j for all distinct i, j in [lo, hi].
  bool multiplicity_free_on(long lo, long hi) const;

  // Config grammar: zero | arith:<offset> | list:<lo>:<v_lo>,...,<v_hi> | sym:<lo>:<hi>.
  static ParamSequence parse(std::string_view spec);
  std::string describe() const;

private:
  enum class OpKind { Shift, Star, Negate };
  struct Op {
    OpKind kind;
    long amount; // shift distance or star length
  };
  struct Base {
    Mode mode = Mode::Zero;
    Rational offset;
    long lo = 0;
    long hi = -1;
    std::vector<Rational> values;
  };

  ParamSequence with(Op op) const;
  // Unwinds the operator chain: base index and overall sign.
  std::pair<long, int> resolve(long i) const;

  std::shared_ptr<const Base> base_;
  std::vector<Op> ops_; // innermost first
};

// Conservative a-index window touched by any route (tableau, convolution,
// Jacobi-Trudi, dual Jacobi-Trudi, Sergeev-Pragacz, evaluation points) for
// partitions of weight <= max_weight with m x-variables and n y-variables.
std::pair<long, long> conservative_window(int max_weight, int m, int n);

} // namespace facschur
