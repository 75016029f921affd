#pragma once

#include "facschur/partition.hpp"
#include "facschur/poly.hpp"
#include "facschur/sequence.hpp"

namespace facschur {

// Shifted supersymmetric polynomials live in u_1..u_m and v_1..v_n. They are
// obtained from s(x/y|a) with a_i = -m+i, x_i = u_{m-i+1}-m+i, y_j = v_j+m-j.
struct ShiftedContext {
  int m = 0;
  int n = 0;

  // a_i = -m+i, listed explicitly over the window needed for shapes of
  // weight <= max_weight.
  ParamSequence sequence(int max_weight) const;
};

// s*_{lambda/mu}(u/v) through the substitution above.
Poly shifted_by_substitution(const SkewShape& shape, const ShiftedContext& ctx);

// Direct tableau sum: unprimed cells give (u_T - c), primed cells (v_T + c);
// unprimed entries weakly decrease along rows and strictly down columns.
Poly shifted_tableau(const SkewShape& shape, const ShiftedContext& ctx);

// sum_{mu ⊆ nu ⊆ lambda} s*_{lambda/nu}(u) s*_{nu'/mu'}(v), each factor a
// one-alphabet tableau sum.
Poly shifted_conv(const SkewShape& shape, const ShiftedContext& ctx);

// One-alphabet shifted Schur polynomial in w_1..w_k (family U or V):
// sum over fillings whose rows weakly decrease and columns strictly decrease
// of prod (w_T - c).
Poly shifted_schur_single(const SkewShape& shape, Family family, int count);

// Substitution route checked against the direct tableau route. Throws
// InternalMismatch if they differ.
Poly shifted_super_schur(const SkewShape& shape, const ShiftedContext& ctx);

// Elementary and complete shifted supersymmetric polynomials by their
// explicit double sums.
Poly e_star(int k, const ShiftedContext& ctx);
Poly h_star(int k, const ShiftedContext& ctx);

// s*_lambda evaluated at u = xi, v = eta where (xi, eta) come from zeta.
// Throws NotInHook unless both partitions are in the (m,n)-hook.
Rational vanishing_star(const Partition& lambda, const Partition& zeta, const ShiftedContext& ctx);

} // namespace facschur
