#pragma once

#include "facschur/factorial.hpp"
#include "facschur/partition.hpp"
#include "facschur/poly.hpp"
#include "facschur/sequence.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace facschur {

// Ambient data of a factorial supersymmetric Schur polynomial: the alphabets
// bound to x_1..x_m and y_1..y_n, and the parameter sequence a. The starred
// sequence a* is always taken with respect to n = ys.size().
struct SuperContext {
  Alphabet xs;
  Alphabet ys;
  ParamSequence a;

  int m() const { return static_cast<int>(xs.size()); }
  int n() const { return static_cast<int>(ys.size()); }
  ParamSequence a_star() const { return a.star(n()); }

  // x_1..x_m and y_1..y_n as variables.
  static SuperContext symbolic(int m, int n, ParamSequence a);
  SuperContext with_sequence(ParamSequence seq) const { return {xs, ys, std::move(seq)}; }
  // True when xs and ys are distinct plain variables of families X and Y.
  bool has_variable_alphabets() const;
};

// sum_{mu ⊆ nu ⊆ lambda} s_{lambda/nu}(x|a) s_{nu'/mu'}(y|a*).
Poly super_schur_conv(const SkewShape& shape, const SuperContext& ctx);

// Sum over super tableaux: unprimed cells give (x_T - a_{T+c}), primed cells
// give (y_T + a_{T+c}).
Poly super_schur_tableau(const SkewShape& shape, const SuperContext& ctx);

// Elementary and complete polynomials through the convolutions
//   e_k = sum_{p+q=k} e_p(x|tau^{-q} a) h_q(y|a*),
//   h_k = sum_{p+q=k} h_p(x|tau^q a) e_q(y|a*).
// Zero for k < 0, one for k = 0.
Poly e_super(int k, const SuperContext& ctx);
Poly h_super(int k, const SuperContext& ctx);

// The same polynomials by their explicit double index sums.
Poly e_super_explicit(int k, const SuperContext& ctx);
Poly h_super_explicit(int k, const SuperContext& ctx);

// det[h_{lambda_i-mu_j-i+j}(x/y | tau^{mu_j-j+1} a)] over l(lambda) rows.
Poly jacobi_trudi(const SkewShape& shape, const SuperContext& ctx);

// det[e_{lambda_i-mu_j-i+j}(x/y | tau^{-mu_j+j-1} a)]; this equals the
// function of the conjugate shape lambda'/mu'.
Poly dual_jacobi_trudi(const SkewShape& shape, const SuperContext& ctx);

// Alternating sum over S_m x S_n of
//   prod_i (x_i|tau^{rho_i} a)^{mu_i+m-i} prod_j (y_j|a*)^{nu_j+n-j} prod_{(i,j) in rho} (x_i+y_j)
// divided exactly by Vandermonde(x) Vandermonde(y). Returns zero outside the
// hook. Throws NotDivisible if the alternating sum is not divisible.
Poly sergeev_pragacz(const Partition& lambda, const SuperContext& ctx);

// s_mu(x|tau^n a) s_nu(y|a*) prod(x_i+y_j). Throws PreconditionViolated
// unless lambda is in the hook and contains (n^m).
Poly factorization(const Partition& lambda, const SuperContext& ctx);

struct DualCauchyResult {
  Poly lhs;
  Poly rhs;
  bool holds() const { return lhs == rhs; }
};
// prod(x_i+y_j) against sum_{lambda ⊆ (n^m)} s_{tilde lambda}(x|a) s_{lambda'}(y|-a).
DualCauchyResult dual_cauchy(int m, int n, const ParamSequence& a);
bool dual_cauchy_check(int m, int n, const ParamSequence& a);

// Substitutes y_n -> -a_n (identity when n = 0).
Poly specialize_y(const Poly& p, const SuperContext& ctx);

// s_lambda(a_xi / a*_eta | a) where (xi, eta) come from zeta.
Poly vanishing_eval(const Partition& lambda, const Partition& zeta, const SuperContext& ctx);

// Substitutes x_m -> z, y_n -> -z and reports whether z survives.
bool cancellation_check(const Poly& p, int m, int n);

// Ordinary supersymmetric skew Schur polynomial
//   sum_nu s_{lambda/nu}(x) s_{nu'/mu'}(y)
// from plain monomial tableau sums.
Poly classical_super_schur(const SkewShape& shape, int m, int n);

// Returns the description of the first failed supersymmetry test (symmetry
// under an adjacent transposition of x or y, or z-dependence after
// x_m = -y_n = z); empty when p is supersymmetric.
std::string supersymmetry_witness(const Poly& p, int m, int n);

struct BasisExpansion {
  std::map<Partition, Rational> coefficients; // nonzero entries only
  bool reconstruction_exact = false;
};

// Expands a supersymmetric p of degree <= k in the basis s_lambda(x/y|a),
// lambda in the (m,n)-hook with |lambda| <= k, by evaluating at the points
// (a_xi, a*_eta) in weight order and back-substituting through the
// triangular evaluation matrix. Needs a numeric, multiplicity-free sequence.
BasisExpansion expand_in_basis(const Poly& p, const SuperContext& ctx, int k);
Poly reconstruct(const BasisExpansion& expansion, const SuperContext& ctx);

struct GenSeriesOutcome {
  bool holds = true;
  int trials_run = 0;
  std::string detail; // first failing draw, empty on success
};

// Truncated Laurent comparison of the generating series of e_k(x/y|a)
// (kind Elementary) or h_k(x/y|a) (kind Complete) with its rational right
// hand side through s^order, for `trials` random rational x, y.
GenSeriesOutcome genseries_check_super(SeriesKind kind, int m, int n, const ParamSequence& a, int order,
                                       int trials, std::uint64_t seed);

} // namespace facschur
