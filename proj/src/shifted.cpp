#include "facschur/shifted.hpp"

#include "facschur/error.hpp"
#include "facschur/supersym.hpp"
#include "facschur/tableau.hpp"

#include <functional>

namespace facschur {

ParamSequence ShiftedContext::sequence(int max_weight) const {
  auto [lo, hi] = conservative_window(max_weight, m, n);
  std::vector<Rational> values;
  for (long i = lo; i <= hi; ++i) values.emplace_back(i - m);
  return ParamSequence::explicit_values(lo, std::move(values));
}

Poly shifted_by_substitution(const SkewShape& shape, const ShiftedContext& ctx) {
  SuperContext super{{}, {}, ctx.sequence(shape.outer().weight())};
  for (int i = 1; i <= ctx.m; ++i) super.xs.push_back(Poly::var(VarId::u(ctx.m - i + 1)) + Poly(i - ctx.m));
  for (int j = 1; j <= ctx.n; ++j) super.ys.push_back(Poly::var(VarId::v(j)) + Poly(ctx.m - j));
  return super_schur_conv(shape, super);
}

Poly shifted_tableau(const SkewShape& shape, const ShiftedContext& ctx) {
  Poly sum;
  for_each_super(shape, ctx.m, ctx.n, Flavor::Shifted, [&](const SuperTableau& t) {
    Poly term(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k) {
      const int c = t.cells[k].content();
      const SuperEntry e = t.entries[k];
      if (e.primed)
        term *= Poly::var(VarId::v(e.index)) + Poly(c);
      else
        term *= Poly::var(VarId::u(e.index)) - Poly(c);
    }
    sum += term;
  });
  return sum;
}

Poly shifted_schur_single(const SkewShape& shape, Family family, int count) {
  Poly sum;
  for_each_super(shape, count, 0, Flavor::Shifted, [&](const SuperTableau& t) {
    Poly term(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k)
      term *= Poly::var({family, t.entries[k].index}) - Poly(t.cells[k].content());
    sum += term;
  });
  return sum;
}

Poly shifted_conv(const SkewShape& shape, const ShiftedContext& ctx) {
  Poly sum;
  for (const Partition& nu : partitions_between(shape.inner(), shape.outer())) {
    Poly u_part = shifted_schur_single(SkewShape(shape.outer(), nu), Family::U, ctx.m);
    if (u_part.is_zero()) continue;
    sum += u_part * shifted_schur_single(SkewShape(conjugate(nu), conjugate(shape.inner())), Family::V, ctx.n);
  }
  return sum;
}

Poly shifted_super_schur(const SkewShape& shape, const ShiftedContext& ctx) {
  Poly by_substitution = shifted_by_substitution(shape, ctx);
  Poly direct = shifted_tableau(shape, ctx);
  if (!(by_substitution == direct))
    throw InternalMismatch("shifted routes disagree on " + to_string(shape) + ": " + to_text(by_substitution) +
                           " vs " + to_text(direct));
  return direct;
}

namespace {

// Chains of length k over 1..top, decreasing, strictly or weakly.
void for_each_decreasing(int k, int top, bool strict, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chain(k);
  std::function<void(int, int)> rec = [&](int pos, int hi) {
    if (pos == k) {
      visit(chain);
      return;
    }
    for (int v = hi; v >= 1; --v) {
      chain[pos] = v;
      rec(pos + 1, strict ? v - 1 : v);
    }
  };
  rec(0, top);
}

// elementary = true gives e*, false gives h*.
Poly star_sum(int k, const ShiftedContext& ctx, bool elementary) {
  if (k < 0) return {};
  Poly sum;
  for (int q = 0; q <= k; ++q) {
    const int p = k - q;
    for_each_decreasing(q, ctx.n, !elementary, [&](const std::vector<int>& js) {
      Poly v_part(1);
      for (int l = 1; l <= q; ++l)
        v_part *= Poly::var(VarId::v(js[l - 1])) + Poly(elementary ? -(l - 1) : l - 1);
      for_each_decreasing(p, ctx.m, elementary, [&](const std::vector<int>& is) {
        Poly term = v_part;
        for (int l = 1; l <= p; ++l)
          term *= Poly::var(VarId::u(is[l - 1])) + Poly(elementary ? q + l - 1 : -(q + l - 1));
        sum += term;
      });
    });
  }
  return sum;
}

} // namespace

Poly e_star(int k, const ShiftedContext& ctx) { return star_sum(k, ctx, true); }
Poly h_star(int k, const ShiftedContext& ctx) { return star_sum(k, ctx, false); }

Rational vanishing_star(const Partition& lambda, const Partition& zeta, const ShiftedContext& ctx) {
  if (!in_hook(lambda, ctx.m, ctx.n)) throw NotInHook(to_string(lambda) + " is not in the hook");
  const XiEta pt = xi_eta(zeta, ctx.m, ctx.n);
  std::map<VarId, Poly> point;
  for (int i = 1; i <= ctx.m; ++i) point.emplace(VarId::u(i), Poly(pt.xi[i - 1]));
  for (int j = 1; j <= ctx.n; ++j) point.emplace(VarId::v(j), Poly(pt.eta[j - 1]));
  return substitute(shifted_tableau(SkewShape(lambda), ctx), point).constant_term();
}

} // namespace facschur
