#pragma once

#include "facschur/partition.hpp"
#include "facschur/poly.hpp"
#include "facschur/sequence.hpp"
#include "facschur/series.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace facschur {

// An alphabet is the ordered list of values bound to x_1..x_m (or y, u, v).
// Entries are usually the variables themselves; numeric entries evaluate.
using Alphabet = std::vector<Poly>;

Alphabet variables(Family family, int count);
inline Alphabet x_vars(int m) { return variables(Family::X, m); }
inline Alphabet y_vars(int n) { return variables(Family::Y, n); }

// (v - a_{shift+1}) ... (v - a_{shift+k}); 1 for k = 0.
Poly falling_product(const Poly& v, const ParamSequence& a, int k, long shift = 0);
inline Poly falling_product(VarId v, const ParamSequence& a, int k, long shift = 0) {
  return falling_product(Poly::var(v), a, k, shift);
}

// The l-tuple (a_{alpha_1+l}, a_{alpha_2+l-1}, ..., a_{alpha_l+1}).
Alphabet eval_point(const ParamSequence& a, const Partition& alpha, int l);

// Tableau sum over semistandard fillings with entries 1..|xs|:
//   sum_T prod_cells (x_{T(c)} - a_{T(c)+content(c)}).
Poly factorial_schur_tableau(const SkewShape& shape, std::span<const Poly> xs, const ParamSequence& a);
Poly factorial_schur_tableau(const SkewShape& shape, int m, const ParamSequence& a);

// det[(x_j|a)^{lambda_i+m-i}] / Vandermonde(x) in the variables x_1..x_m.
Poly factorial_schur_ratio(const Partition& lambda, int m, const ParamSequence& a);

// Factorial elementary and complete polynomials by their explicit index sums.
// Both vanish for k < 0 and equal 1 for k = 0.
Poly e_factorial(int k, std::span<const Poly> xs, const ParamSequence& a);
Poly h_factorial(int k, std::span<const Poly> xs, const ParamSequence& a);

// Ordinary skew Schur polynomial sum_T x^T, computed directly from fillings.
Poly classical_schur(const SkewShape& shape, std::span<const Poly> xs);

// prod_{(i,j) in lambda} (a_{lambda_i+m-i+1} - a_{m-lambda'_j+j}).
Poly vanishing_product(const Partition& lambda, int m, const ParamSequence& a);

// s_lambda(a_sigma | a) in m variables.
Poly vanishing_classical(const Partition& lambda, const Partition& sigma, int m, const ParamSequence& a);

enum class SeriesKind { Elementary, Complete };

// Random rational in [-20, 20] with denominator in [1, 9].
Rational random_rational(std::mt19937_64& rng);

// Checks the generating series of the factorial h_k(y|a) or e_k(y|a) in n
// variables against prod(t-a_i)/prod(t-y_i) (resp. its inverse) through
// s^order, for `trials` random rational y drawn from `seed`.
bool genseries_check_classical(SeriesKind kind, int n, const ParamSequence& a, int order, int trials,
                               std::uint64_t seed);

} // namespace facschur
