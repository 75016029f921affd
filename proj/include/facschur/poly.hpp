#pragma once

#include "facschur/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace facschur {

// Variable families. The declaration order is the variable order used by the
// graded lexicographic monomial order.
enum class Family : std::uint8_t { X, Y, U, V, A, T, Z };

char family_letter(Family f);

struct VarId {
  Family family = Family::X;
  int index = 0;

  auto operator<=>(const VarId&) const = default;

  static VarId x(int i) { return {Family::X, i}; }
  static VarId y(int j) { return {Family::Y, j}; }
  static VarId u(int i) { return {Family::U, i}; }
  static VarId v(int j) { return {Family::V, j}; }
  static VarId a(int i) { return {Family::A, i}; }
  static VarId t() { return {Family::T, 0}; }
  static VarId z() { return {Family::Z, 0}; }
};

// Text name of a variable: x1, y2, u1, v3, t, z, a0, a5, a(-2).
std::string var_name(VarId v);

// Power product with strictly positive exponents, stored sorted by VarId.
class Monomial {
public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial of(VarId v, int exponent = 1);
  // Factors may come in any order; zero exponents are dropped and repeated
  // variables merged.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  int degree() const { return degree_; }
  int exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  // True iff `divisor` divides this monomial; the quotient is written to `out`.
  bool divide(const Monomial& divisor, Monomial& out) const;

  bool operator==(const Monomial& other) const = default;

private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Graded lexicographic order, larger monomial first: higher total degree wins,
// ties broken by the exponent of the first differing variable.
struct GrlexDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in canonical form (no zero coefficients, grlex-descending), so
// structural equality is mathematical equality.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Poly() = default;
  Poly(const Rational& constant);
  Poly(long constant) : Poly(Rational(constant)) {}
  Poly(int constant) : Poly(Rational(constant)) {}

  static Poly var(VarId v);
  static Poly term(const Rational& coeff, Monomial mono);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& mono) const;

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  // Degree in one variable; -1 for the zero polynomial.
  int degree_in(VarId v) const;
  std::set<VarId> variables() const;
  bool contains_family(Family f) const;

  // Sum of the terms of total degree exactly `d`.
  Poly homogeneous_part(int d) const;
  // Top-total-degree part (zero stays zero).
  Poly highest_component() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }

  // Adds c * mono in place.
  void add_term(const Rational& c, const Monomial& mono);

private:
  TermMap terms_;
};

Poly pow(const Poly& base, int exponent);

// Product of a list of polynomials (1 for an empty list).
Poly product(std::span<const Poly> factors);

// Simultaneous substitution of variables by polynomials. Throws CyclicBinding
// if a bound polynomial mentions a bound variable.
Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings);

// Renames variables by a (possibly cyclic) map, e.g. a transposition.
Poly rename_variables(const Poly& p, const std::map<VarId, VarId>& renaming);

// Returns r with r * divisor == dividend. Throws DivisionByZero for a zero
// divisor and NotDivisible when a nonzero remainder is left.
Poly exact_divide(const Poly& dividend, const Poly& divisor);

// prod_{i<j} (v_i - v_j). Throws DuplicateVariable on repeats.
Poly vandermonde(std::span<const VarId> vars);
// Same product over arbitrary polynomial entries (no distinctness check).
Poly vandermonde(std::span<const Poly> entries);

// Text rendering: canonical term order, reduced fractions, `^` for powers,
// "0" for the zero polynomial.
std::string to_text(const Poly& p);

} // namespace facschur
