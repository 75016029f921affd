#include "facschur/error.hpp"
#include "facschur/supersym.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace facschur;
using namespace facschur::testing;

namespace {

const ParamSequence kSym = ParamSequence::symbolic(-12, 16);

SuperContext ctx_of(int m, int n, const ParamSequence& a = kSym) { return SuperContext::symbolic(m, n, a); }

Poly s(const Partition& lambda, const SuperContext& ctx) { return super_schur_tableau(SkewShape(lambda), ctx); }

Poly rectangle_product(int m, int n) {
  Poly out(1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) out *= X(i) + Y(j);
  return out;
}

std::vector<SkewShape> skew_shapes(int max_weight) {
  std::vector<SkewShape> out;
  for (const auto& outer : partitions_up_to(max_weight))
    for (const auto& inner : partitions_between(Partition{}, outer)) out.emplace_back(outer, inner);
  return out;
}

} // namespace

TEST(SuperSchur, Examples) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      EXPECT_EQ(super_schur_conv(SkewShape(Partition{}), ctx_of(m, n)), Poly(1));
      EXPECT_EQ(super_schur_tableau(SkewShape(Partition{}), ctx_of(m, n)), Poly(1));
    }
  EXPECT_EQ(super_schur_conv(SkewShape(Partition({1})), ctx_of(1, 1)), X(1) + Y(1));
  EXPECT_EQ(s(Partition({1, 1}), ctx_of(1, 1, ParamSequence::zero())), Y(1) * Y(1) + X(1) * Y(1));
  EXPECT_TRUE(super_schur_conv(SkewShape(Partition({3, 3, 3})), ctx_of(2, 2)).is_zero());
  EXPECT_TRUE(s(Partition({2, 2}), ctx_of(1, 1)).is_zero());
}

TEST(SuperSchur, EmptyAlphabetsReduceToFactorial) {
  for (const auto& lambda : partitions_up_to(4)) {
    EXPECT_EQ(s(lambda, ctx_of(2, 0)), factorial_schur_tableau(SkewShape(lambda), 2, kSym));
    // With no x variables only conjugate-shape fillings by y remain.
    EXPECT_EQ(s(lambda, ctx_of(0, 2)),
              factorial_schur_tableau(SkewShape(conjugate(lambda)), y_vars(2), kSym.star(2)));
  }
}

TEST(SuperSchur, RoutesAgreeOnSkewShapes) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const auto& shape : skew_shapes(4)) {
        const SuperContext ctx = ctx_of(m, n);
        Poly t = super_schur_tableau(shape, ctx);
        EXPECT_EQ(super_schur_conv(shape, ctx), t) << to_string(shape) << " m=" << m << " n=" << n;
        EXPECT_EQ(jacobi_trudi(shape, ctx), t) << to_string(shape) << " m=" << m << " n=" << n;
        EXPECT_EQ(dual_jacobi_trudi(shape.conjugate(), ctx), t) << to_string(shape) << " m=" << m << " n=" << n;
      }
}

TEST(ElementaryComplete, ExamplesAndExplicitSums) {
  const SuperContext c11 = ctx_of(1, 1);
  EXPECT_EQ(e_super(0, c11), Poly(1));
  EXPECT_EQ(h_super(0, c11), Poly(1));
  EXPECT_TRUE(e_super(-1, c11).is_zero());
  EXPECT_EQ(e_super(1, c11), (X(1) - A(1)) + (Y(1) + A(1)));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 5; ++k) {
        const SuperContext ctx = ctx_of(m, n);
        EXPECT_EQ(e_super(k, ctx), e_super_explicit(k, ctx)) << k;
        EXPECT_EQ(h_super(k, ctx), h_super_explicit(k, ctx)) << k;
        EXPECT_EQ(e_super(k, ctx), s(Partition(std::vector<int>(k, 1)), ctx));
        EXPECT_EQ(h_super(k, ctx), s(k ? Partition({k}) : Partition{}, ctx));
      }
}

TEST(ElementaryComplete, SwapSymmetry) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 6; ++k) {
        const SuperContext ctx = ctx_of(m, n);
        SuperContext swapped{ctx.ys, ctx.xs, kSym.shifted(k - 1).negated()};
        EXPECT_EQ(h_super(k, ctx), e_super(k, swapped)) << "k=" << k << " m=" << m << " n=" << n;
      }
}

TEST(JacobiTrudi, Examples) {
  const SuperContext ctx = ctx_of(2, 1);
  EXPECT_EQ(jacobi_trudi(SkewShape(Partition({3})), ctx), h_super(3, ctx));
  Poly expected = h_super(1, ctx) * h_super(1, ctx.with_sequence(kSym.shifted(-1))) -
                  h_super(2, ctx.with_sequence(kSym.shifted(-1)));
  EXPECT_EQ(jacobi_trudi(SkewShape(Partition({1, 1})), ctx), expected);
  EXPECT_EQ(expected, super_schur_conv(SkewShape(Partition({1, 1})), ctx));
}

TEST(DualJacobiTrudi, Examples) {
  const SuperContext ctx = ctx_of(2, 2);
  EXPECT_EQ(dual_jacobi_trudi(SkewShape(Partition({1})), ctx), e_super(1, ctx));
  // One row of length 2 gives the 1x1 matrix [e_2(x/y|a)].
  EXPECT_EQ(dual_jacobi_trudi(SkewShape(Partition({2})), ctx), e_super(2, ctx));
  EXPECT_EQ(dual_jacobi_trudi(SkewShape(Partition({2})), ctx), super_schur_conv(SkewShape(Partition({1, 1})), ctx));
}

TEST(SergeevPragacz, Examples) {
  EXPECT_EQ(sergeev_pragacz(Partition({1}), ctx_of(1, 1)), X(1) + Y(1));
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      EXPECT_EQ(sergeev_pragacz(Partition::rectangle(m, n), ctx_of(m, n)), rectangle_product(m, n));
  EXPECT_TRUE(sergeev_pragacz(Partition({2, 2}), ctx_of(1, 1)).is_zero());
}

TEST(SergeevPragacz, MatchesTableauRoute) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const auto& lambda : partitions_up_to(5))
        EXPECT_EQ(sergeev_pragacz(lambda, ctx_of(m, n)), s(lambda, ctx_of(m, n)))
            << to_string(lambda) << " m=" << m << " n=" << n;
}

TEST(SergeevPragacz, NumericAlphabetsAreSubstituted) {
  SuperContext ctx{{Q(3), X(2)}, {Q(-1, 2)}, kSym};
  EXPECT_EQ(sergeev_pragacz(Partition({2, 1}), ctx),
            substitute(s(Partition({2, 1}), ctx_of(2, 1)), {{VarId::x(1), Q(3)}, {VarId::y(1), Q(-1, 2)}}));
}

TEST(Factorization, Examples) {
  EXPECT_EQ(factorization(Partition({2, 1}), ctx_of(1, 1)), (X(1) - A(2)) * (Y(1) + A(1)) * (X(1) + Y(1)));
  EXPECT_EQ(factorization(Partition({2}), ctx_of(1, 1)), (X(1) - A(2)) * (X(1) + Y(1)));
  EXPECT_EQ(factorization(Partition({2, 2}), ctx_of(2, 2)), rectangle_product(2, 2));
  EXPECT_THROW(factorization(Partition({1}), ctx_of(2, 2)), PreconditionViolated);
  EXPECT_THROW(factorization(Partition({2, 2, 2}), ctx_of(1, 1)), PreconditionViolated);
}

TEST(Factorization, MatchesTableauRoute) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& lambda : hook_partitions(6, m, n))
        if (contains(lambda, Partition::rectangle(m, n)))
          EXPECT_EQ(factorization(lambda, ctx_of(m, n)), s(lambda, ctx_of(m, n))) << to_string(lambda);
}

TEST(DualCauchy, Holds) {
  DualCauchyResult r = dual_cauchy(1, 1, kSym);
  EXPECT_EQ(r.lhs, X(1) + Y(1));
  EXPECT_EQ(r.rhs, (X(1) - A(1)) + (Y(1) + A(1)));
  EXPECT_TRUE(dual_cauchy_check(2, 1, kSym));
  EXPECT_TRUE(dual_cauchy_check(2, 2, kSym));
  EXPECT_TRUE(dual_cauchy_check(0, 2, kSym));
}

TEST(Specialization, Examples) {
  const SuperContext c11 = ctx_of(1, 1);
  EXPECT_EQ(specialize_y(X(1) + Y(1), c11), X(1) - A(1));
  EXPECT_EQ(specialize_y(Poly(1), c11), Poly(1));
  EXPECT_EQ(specialize_y(s(Partition({1, 1}), ctx_of(1, 2)), ctx_of(1, 2)), s(Partition({1, 1}), ctx_of(1, 1)));
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& lambda : partitions_up_to(4))
        EXPECT_EQ(specialize_y(super_schur_conv(SkewShape(lambda), ctx_of(m, n)), ctx_of(m, n)),
                  super_schur_conv(SkewShape(lambda), ctx_of(m, n - 1)));
}

TEST(Vanishing, Examples) {
  EXPECT_TRUE(vanishing_eval(Partition({2}), Partition({1}), ctx_of(2, 1)).is_zero());
  EXPECT_EQ(vanishing_eval(Partition({1}), Partition({1}), ctx_of(1, 1)), A(2) - A(1));
  // Cells (1,1) and (2,1) contribute (a_2 - a_0) and (a_1 - a_0).
  EXPECT_EQ(vanishing_eval(Partition({1, 1}), Partition({1, 1}), ctx_of(1, 1)), (A(2) - A(0)) * (A(1) - A(0)));
  EXPECT_THROW(vanishing_eval(Partition({2, 2}), Partition{}, ctx_of(1, 1)), NotInHook);
}

TEST(Vanishing, TriangularWithProductDiagonal) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const auto& lambda : hook_partitions(4, m, n))
        for (const auto& zeta : hook_partitions(4, m, n)) {
          Poly value = vanishing_eval(lambda, zeta, ctx_of(m, n));
          if (!contains(zeta, lambda)) EXPECT_TRUE(value.is_zero()) << to_string(lambda) << " at " << to_string(zeta);
          if (lambda == zeta) {
            EXPECT_EQ(value, vanishing_product(lambda, m, kSym)) << to_string(lambda);
            EXPECT_FALSE(value.is_zero());
          }
        }
}

TEST(Vanishing, PartialEvaluations) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& lambda : hook_partitions(4, m, n)) {
        const DerivedShapes d = derived_shapes(lambda, m, n);
        for (const auto& eta : partitions_up_to(3)) {
          if (eta.length() > n || contains(eta, d.nu)) continue;
          SuperContext ctx{x_vars(m), eval_point(kSym.star(n), eta, n), kSym};
          EXPECT_TRUE(s(lambda, ctx).is_zero()) << to_string(lambda) << " eta=" << to_string(eta);
        }
        for (const auto& gamma : partitions_up_to(3)) {
          if (gamma.length() > m || contains(gamma, d.mu)) continue;
          SuperContext ctx{eval_point(kSym.shifted(n), gamma, m), y_vars(n), kSym};
          EXPECT_TRUE(s(lambda, ctx).is_zero()) << to_string(lambda) << " gamma=" << to_string(gamma);
        }
      }
}

TEST(Supersymmetry, CancellationExamples) {
  EXPECT_TRUE(cancellation_check(X(1) + Y(1), 1, 1));
  EXPECT_FALSE(cancellation_check(X(1), 1, 1));
  EXPECT_THROW(cancellation_check(X(1), 0, 1), PreconditionViolated);
}

TEST(Supersymmetry, WitnessNamesTheFailure) {
  EXPECT_EQ(supersymmetry_witness(X(1) + X(2) + Y(1), 2, 1), "");
  EXPECT_NE(supersymmetry_witness(X(1), 2, 1).find("x1 <-> x2"), std::string::npos);
  EXPECT_NE(supersymmetry_witness(Y(1) * Y(1) + Y(2), 1, 2).find("y1 <-> y2"), std::string::npos);
  EXPECT_NE(supersymmetry_witness(X(1) * X(1) + Y(1) * Y(1), 1, 1).find("z-degree 2"), std::string::npos);
}

TEST(Supersymmetry, EverySchurFunctionIsSupersymmetric) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& shape : skew_shapes(4)) {
        Poly p = super_schur_tableau(shape, ctx_of(m, n));
        EXPECT_EQ(supersymmetry_witness(p, m, n), "") << to_string(shape);
      }
}

TEST(Classical, ZeroSequenceAndHighestComponent) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const auto& shape : skew_shapes(4)) {
        Poly classical = classical_super_schur(shape, m, n);
        EXPECT_EQ(super_schur_conv(shape, ctx_of(m, n, ParamSequence::zero())), classical);
        Poly numeric = super_schur_tableau(shape, ctx_of(m, n, ParamSequence::arithmetic(R(1, 3))));
        EXPECT_EQ(numeric.homogeneous_part(shape.size()), classical) << to_string(shape);
      }
}

TEST(Expansion, BasisElementsAreUnitVectors) {
  const ParamSequence a = ParamSequence::arithmetic(0);
  for (const auto& mu : hook_partitions(3, 2, 1)) {
    BasisExpansion e = expand_in_basis(s(mu, ctx_of(2, 1, a)), ctx_of(2, 1, a), 3);
    EXPECT_TRUE(e.reconstruction_exact);
    EXPECT_EQ(e.coefficients, (std::map<Partition, Rational>{{mu, Rational(1)}})) << to_string(mu);
  }
}

TEST(Expansion, ClassicalFirstPowerSum) {
  const ParamSequence a = ParamSequence::arithmetic(0);
  const SuperContext ctx = ctx_of(2, 1, a);
  Poly p = X(1) + X(2) + Y(1);
  Poly constant = p - s(Partition({1}), ctx); // independent oracle for c_empty
  ASSERT_TRUE(constant.is_constant());
  BasisExpansion e = expand_in_basis(p, ctx, 1);
  EXPECT_EQ(e.coefficients.at(Partition({1})), 1);
  EXPECT_EQ(e.coefficients.at(Partition{}), constant.constant_term());
  EXPECT_TRUE(e.reconstruction_exact);
}

TEST(Expansion, ProductsRoundTrip) {
  const ParamSequence a = ParamSequence::arithmetic(-1);
  const SuperContext ctx = ctx_of(1, 1, a);
  Poly e1 = e_super(1, ctx);
  BasisExpansion e = expand_in_basis(e1 * e1, ctx, 2);
  EXPECT_TRUE(e.reconstruction_exact);
  EXPECT_EQ(reconstruct(e, ctx), e1 * e1);
}

TEST(Expansion, Errors) {
  const SuperContext numeric = ctx_of(1, 1, ParamSequence::arithmetic(0));
  EXPECT_THROW(expand_in_basis(X(1), numeric, 1), NotSupersymmetric);
  EXPECT_THROW(expand_in_basis(X(1) * X(1) + Y(1), numeric, 2), NotSupersymmetric);
  EXPECT_THROW(expand_in_basis(X(1) + Y(1), numeric, 0), DegreeBoundExceeded);
  EXPECT_THROW(expand_in_basis(X(1) + Y(1), ctx_of(1, 1, ParamSequence::zero()), 1), SequenceNotMultiplicityFree);
  EXPECT_THROW(expand_in_basis(X(1) + Y(1), ctx_of(1, 1), 1), PreconditionViolated);
  EXPECT_THROW(expand_in_basis(X(1) + Y(1) + A(1), numeric, 1), PreconditionViolated);
}

TEST(GenSeries, SuperIdentities) {
  std::mt19937_64 rng(5);
  std::vector<Rational> values;
  for (int i = 0; i < 40; ++i) values.push_back(random_rational(rng));
  const ParamSequence explicit_a = ParamSequence::explicit_values(-15, values);
  for (SeriesKind kind : {SeriesKind::Elementary, SeriesKind::Complete}) {
    EXPECT_TRUE(genseries_check_super(kind, 0, 2, ParamSequence::arithmetic(0), 12, 3, 1).holds);
    EXPECT_TRUE(genseries_check_super(kind, 1, 1, ParamSequence::arithmetic(0), 12, 3, 1).holds);
    GenSeriesOutcome r = genseries_check_super(kind, 2, 1, explicit_a, 12, 5, 9);
    EXPECT_TRUE(r.holds) << r.detail;
    EXPECT_EQ(r.trials_run, 5);
  }
}

TEST(Windows, ConservativeWindowSuffices) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const int w = 4;
      auto [lo, hi] = conservative_window(w, m, n);
      const SuperContext ctx = ctx_of(m, n, ParamSequence::symbolic(lo, hi));
      for (const auto& shape : skew_shapes(w)) {
        EXPECT_NO_THROW(super_schur_tableau(shape, ctx));
        EXPECT_NO_THROW(super_schur_conv(shape, ctx));
        EXPECT_NO_THROW(jacobi_trudi(shape, ctx));
        EXPECT_NO_THROW(dual_jacobi_trudi(shape, ctx));
      }
      for (const auto& lambda : partitions_up_to(w)) EXPECT_NO_THROW(sergeev_pragacz(lambda, ctx));
      for (const auto& lambda : hook_partitions(w, m, n))
        for (const auto& zeta : hook_partitions(w, m, n)) EXPECT_NO_THROW(vanishing_eval(lambda, zeta, ctx));
      for (int k = 0; k <= w; ++k) {
        EXPECT_NO_THROW(e_super_explicit(k, ctx));
        EXPECT_NO_THROW(h_super_explicit(k, ctx));
      }
    }
}

TEST(Windows, TooSmallWindowReportsIndex) {
  try {
    super_schur_tableau(SkewShape(Partition({3, 1})), ctx_of(2, 2, ParamSequence::symbolic(2, 3)));
    FAIL() << "expected WindowExceeded";
  } catch (const WindowExceeded& e) {
    EXPECT_TRUE(e.index() < 2 || e.index() > 3);
  }
}
