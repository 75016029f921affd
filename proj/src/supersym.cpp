#include "facschur/supersym.hpp"

#include "facschur/error.hpp"
#include "facschur/matrix.hpp"
#include "facschur/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace facschur {

SuperContext SuperContext::symbolic(int m, int n, ParamSequence a) {
  return {x_vars(m), y_vars(n), std::move(a)};
}

bool SuperContext::has_variable_alphabets() const {
  for (int i = 0; i < m(); ++i)
    if (!(xs[i] == Poly::var(VarId::x(i + 1)))) return false;
  for (int j = 0; j < n(); ++j)
    if (!(ys[j] == Poly::var(VarId::y(j + 1)))) return false;
  return true;
}

namespace {

// Visits index chains of length k over 1..top. `strict` asks for strict
// monotonicity, `increasing` for the direction.
void for_each_chain(int k, int top, bool strict, bool increasing,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chain(k);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      visit(chain);
      return;
    }
    int lo = 1, hi = top;
    if (pos > 0) {
      int prev = chain[pos - 1];
      if (increasing)
        lo = strict ? prev + 1 : prev;
      else
        hi = strict ? prev - 1 : prev;
    }
    for (int v = lo; v <= hi; ++v) {
      chain[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<std::vector<int>> all_permutations(int size) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly rebind(const Poly& p, const SuperContext& ctx) {
  std::map<VarId, Poly> bindings;
  for (int i = 1; i <= ctx.m(); ++i) bindings.emplace(VarId::x(i), ctx.xs[i - 1]);
  for (int j = 1; j <= ctx.n(); ++j) bindings.emplace(VarId::y(j), ctx.ys[j - 1]);
  // Rebinding x_i to itself would be flagged as cyclic; drop identities.
  for (auto it = bindings.begin(); it != bindings.end();) {
    if (it->second == Poly::var(it->first))
      it = bindings.erase(it);
    else
      ++it;
  }
  return substitute(p, bindings);
}

} // namespace

Poly super_schur_conv(const SkewShape& shape, const SuperContext& ctx) {
  const ParamSequence a_star = ctx.a_star();
  Poly sum;
  for (const Partition& nu : partitions_between(shape.inner(), shape.outer())) {
    Poly x_part = factorial_schur_tableau(SkewShape(shape.outer(), nu), ctx.xs, ctx.a);
    if (x_part.is_zero()) continue;
    Poly y_part = factorial_schur_tableau(SkewShape(conjugate(nu), conjugate(shape.inner())), ctx.ys, a_star);
    sum += x_part * y_part;
  }
  return sum;
}

Poly super_schur_tableau(const SkewShape& shape, const SuperContext& ctx) {
  Poly sum;
  for_each_super(shape, ctx.m(), ctx.n(), Flavor::Standard, [&](const SuperTableau& t) {
    Poly term(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k) {
      const SuperEntry e = t.entries[k];
      const Poly shift = ctx.a.get(e.index + t.cells[k].content());
      if (e.primed)
        term *= ctx.ys[e.index - 1] + shift;
      else
        term *= ctx.xs[e.index - 1] - shift;
    }
    sum += term;
  });
  return sum;
}

Poly e_super(int k, const SuperContext& ctx) {
  if (k < 0) return {};
  const ParamSequence a_star = ctx.a_star();
  Poly sum;
  for (int q = 0; q <= k; ++q) {
    Poly x_part = e_factorial(k - q, ctx.xs, ctx.a.shifted(-q));
    if (x_part.is_zero()) continue;
    sum += x_part * h_factorial(q, ctx.ys, a_star);
  }
  return sum;
}

Poly h_super(int k, const SuperContext& ctx) {
  if (k < 0) return {};
  const ParamSequence a_star = ctx.a_star();
  Poly sum;
  for (int q = 0; q <= k; ++q) {
    Poly y_part = e_factorial(q, ctx.ys, a_star);
    if (y_part.is_zero()) continue;
    sum += h_factorial(k - q, ctx.xs, ctx.a.shifted(q)) * y_part;
  }
  return sum;
}

Poly e_super_explicit(int k, const SuperContext& ctx) {
  if (k < 0) return {};
  const ParamSequence& a = ctx.a;
  Poly sum;
  for (int q = 0; q <= k; ++q) {
    const int p = k - q;
    for_each_chain(q, ctx.n(), false, false, [&](const std::vector<int>& js) {
      Poly y_part(1);
      for (int l = 1; l <= q; ++l) y_part *= ctx.ys[js[l - 1] - 1] + a.get(js[l - 1] - l + 1);
      for_each_chain(p, ctx.m(), true, true, [&](const std::vector<int>& is) {
        Poly term = y_part;
        for (int l = 1; l <= p; ++l) term *= ctx.xs[is[l - 1] - 1] - a.get(is[l - 1] - q - l + 1);
        sum += term;
      });
    });
  }
  return sum;
}

Poly h_super_explicit(int k, const SuperContext& ctx) {
  if (k < 0) return {};
  const ParamSequence& a = ctx.a;
  Poly sum;
  for (int q = 0; q <= k; ++q) {
    const int p = k - q;
    for_each_chain(q, ctx.n(), true, false, [&](const std::vector<int>& js) {
      Poly y_part(1);
      for (int l = 1; l <= q; ++l) y_part *= ctx.ys[js[l - 1] - 1] + a.get(js[l - 1] + l - 1);
      for_each_chain(p, ctx.m(), false, true, [&](const std::vector<int>& is) {
        Poly term = y_part;
        for (int l = 1; l <= p; ++l) term *= ctx.xs[is[l - 1] - 1] - a.get(is[l - 1] + q + l - 1);
        sum += term;
      });
    });
  }
  return sum;
}

namespace {

// det[entry(lambda_i - mu_j - i + j, shift_j)] with memoised entries.
Poly one_row_determinant(const SkewShape& shape, const SuperContext& ctx,
                         const std::function<long(int mu_j, int j)>& shift_of,
                         const std::function<Poly(int, const SuperContext&)>& entry) {
  const int l = shape.outer().length();
  std::map<std::pair<int, long>, Poly> cache;
  PolyMatrix matrix(l, std::vector<Poly>(l));
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      const int mu_j = shape.inner().part(j);
      const int degree = shape.outer().part(i) - mu_j - i + j;
      const long shift = shift_of(mu_j, j);
      if (degree < 0) continue;
      auto key = std::pair{degree, shift};
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, entry(degree, ctx.with_sequence(ctx.a.shifted(shift)))).first;
      matrix[i - 1][j - 1] = it->second;
    }
  }
  return det_poly(matrix);
}

} // namespace

Poly jacobi_trudi(const SkewShape& shape, const SuperContext& ctx) {
  return one_row_determinant(
      shape, ctx, [](int mu_j, int j) { return static_cast<long>(mu_j - j + 1); }, h_super);
}

Poly dual_jacobi_trudi(const SkewShape& shape, const SuperContext& ctx) {
  return one_row_determinant(
      shape, ctx, [](int mu_j, int j) { return static_cast<long>(-mu_j + j - 1); }, e_super);
}

Poly sergeev_pragacz(const Partition& lambda, const SuperContext& ctx) {
  const int m = ctx.m(), n = ctx.n();
  if (!in_hook(lambda, m, n)) return {};
  if (!ctx.has_variable_alphabets())
    return rebind(sergeev_pragacz(lambda, SuperContext::symbolic(m, n, ctx.a)), ctx);

  const DerivedShapes shapes = derived_shapes(lambda, m, n);
  const auto mu = shapes.mu.padded(m);
  const auto nu = shapes.nu.padded(n);
  const auto rho = shapes.rho.padded(m);
  const ParamSequence a_star = ctx.a_star();

  // Factors depend only on the variable a position is mapped to, so cache
  // (position, variable) pairs.
  std::map<std::pair<int, int>, Poly> x_factor, y_factor;
  for (int i = 1; i <= m; ++i)
    for (int v = 1; v <= m; ++v)
      x_factor[{i, v}] = falling_product(VarId::x(v), ctx.a, mu[i - 1] + m - i, rho[i - 1]);
  for (int j = 1; j <= n; ++j)
    for (int w = 1; w <= n; ++w) y_factor[{j, w}] = falling_product(VarId::y(w), a_star, nu[j - 1] + n - j);

  Poly numerator;
  for (const auto& sx : all_permutations(m)) {
    Poly x_part(1);
    for (int i = 1; i <= m; ++i) x_part *= x_factor[{i, sx[i - 1] + 1}];
    for (const auto& sy : all_permutations(n)) {
      Poly term = x_part;
      for (int j = 1; j <= n; ++j) term *= y_factor[{j, sy[j - 1] + 1}];
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= rho[i - 1]; ++j)
          term *= Poly::var(VarId::x(sx[i - 1] + 1)) + Poly::var(VarId::y(sy[j - 1] + 1));
      if (permutation_sign(sx) * permutation_sign(sy) > 0)
        numerator += term;
      else
        numerator -= term;
    }
  }
  for (int i = 1; i <= m; ++i)
    for (int k = i + 1; k <= m; ++k) numerator = exact_divide(numerator, Poly::var(VarId::x(i)) - Poly::var(VarId::x(k)));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) numerator = exact_divide(numerator, Poly::var(VarId::y(j)) - Poly::var(VarId::y(k)));
  return numerator;
}

Poly factorization(const Partition& lambda, const SuperContext& ctx) {
  const int m = ctx.m(), n = ctx.n();
  if (!in_hook(lambda, m, n) || !contains(lambda, Partition::rectangle(m, n)))
    throw PreconditionViolated("factorization needs " + to_string(lambda) + " in the hook and containing (n^m)");
  const DerivedShapes shapes = derived_shapes(lambda, m, n);
  Poly out = factorial_schur_tableau(SkewShape(shapes.mu), ctx.xs, ctx.a.shifted(n)) *
             factorial_schur_tableau(SkewShape(shapes.nu), ctx.ys, ctx.a_star());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out *= ctx.xs[i] + ctx.ys[j];
  return out;
}

DualCauchyResult dual_cauchy(int m, int n, const ParamSequence& a) {
  const Alphabet xs = x_vars(m), ys = y_vars(n);
  DualCauchyResult out{Poly(1), Poly{}};
  for (const auto& x : xs)
    for (const auto& y : ys) out.lhs *= x + y;
  const ParamSequence minus_a = a.negated();
  for (const Partition& lambda : partitions_between(Partition{}, Partition::rectangle(m, n))) {
    std::vector<int> complement;
    auto parts = lambda.padded(m);
    for (int i = m; i >= 1; --i) complement.push_back(n - parts[i - 1]);
    out.rhs += factorial_schur_tableau(SkewShape(Partition(complement)), xs, a) *
               factorial_schur_tableau(SkewShape(conjugate(lambda)), ys, minus_a);
  }
  return out;
}

bool dual_cauchy_check(int m, int n, const ParamSequence& a) { return dual_cauchy(m, n, a).holds(); }

Poly specialize_y(const Poly& p, const SuperContext& ctx) {
  if (ctx.n() == 0) return p;
  return substitute(p, {{VarId::y(ctx.n()), -ctx.a.get(ctx.n())}});
}

Poly vanishing_eval(const Partition& lambda, const Partition& zeta, const SuperContext& ctx) {
  const int m = ctx.m(), n = ctx.n();
  if (!in_hook(lambda, m, n)) throw NotInHook(to_string(lambda) + " is not in the hook");
  const XiEta pt = xi_eta(zeta, m, n);
  SuperContext point{eval_point(ctx.a, Partition(pt.xi), m), eval_point(ctx.a_star(), Partition(pt.eta), n), ctx.a};
  return super_schur_tableau(SkewShape(lambda), point);
}

bool cancellation_check(const Poly& p, int m, int n) {
  if (m < 1 || n < 1) throw PreconditionViolated("cancellation check needs m, n >= 1");
  Poly z = Poly::var(VarId::z());
  Poly reduced = substitute(p, {{VarId::x(m), z}, {VarId::y(n), -z}});
  return reduced.degree_in(VarId::z()) <= 0;
}

Poly classical_super_schur(const SkewShape& shape, int m, int n) {
  const Alphabet xs = x_vars(m), ys = y_vars(n);
  Poly sum;
  for (const Partition& nu : partitions_between(shape.inner(), shape.outer())) {
    Poly x_part = classical_schur(SkewShape(shape.outer(), nu), xs);
    if (x_part.is_zero()) continue;
    sum += x_part * classical_schur(SkewShape(conjugate(nu), conjugate(shape.inner())), ys);
  }
  return sum;
}

std::string supersymmetry_witness(const Poly& p, int m, int n) {
  for (int i = 1; i < m; ++i) {
    if (!(rename_variables(p, {{VarId::x(i), VarId::x(i + 1)}, {VarId::x(i + 1), VarId::x(i)}}) == p))
      return "not symmetric under x" + std::to_string(i) + " <-> x" + std::to_string(i + 1);
  }
  for (int j = 1; j < n; ++j) {
    if (!(rename_variables(p, {{VarId::y(j), VarId::y(j + 1)}, {VarId::y(j + 1), VarId::y(j)}}) == p))
      return "not symmetric under y" + std::to_string(j) + " <-> y" + std::to_string(j + 1);
  }
  if (m >= 1 && n >= 1 && !cancellation_check(p, m, n)) {
    Poly z = Poly::var(VarId::z());
    Poly reduced = substitute(p, {{VarId::x(m), z}, {VarId::y(n), -z}});
    return "depends on z after x" + std::to_string(m) + " = -y" + std::to_string(n) +
           " = z (z-degree " + std::to_string(reduced.degree_in(VarId::z())) + ")";
  }
  return {};
}

BasisExpansion expand_in_basis(const Poly& p, const SuperContext& ctx, int k) {
  const int m = ctx.m(), n = ctx.n();
  if (!ctx.a.is_numeric())
    throw PreconditionViolated("basis expansion needs a numeric parameter sequence");
  if (p.total_degree() > k)
    throw DegreeBoundExceeded("degree " + std::to_string(p.total_degree()) + " exceeds bound " + std::to_string(k));
  for (VarId v : p.variables()) {
    bool ok = (v.family == Family::X && v.index >= 1 && v.index <= m) ||
              (v.family == Family::Y && v.index >= 1 && v.index <= n);
    if (!ok) throw PreconditionViolated("basis expansion input mentions foreign variable " + var_name(v));
  }
  if (std::string witness = supersymmetry_witness(p, m, n); !witness.empty()) throw NotSupersymmetric(witness);
  auto [lo, hi] = conservative_window(k, m, n);
  if (!ctx.a.multiplicity_free_on(lo, hi))
    throw SequenceNotMultiplicityFree("sequence " + ctx.a.describe() + " repeats a value on [" + std::to_string(lo) +
                                      ", " + std::to_string(hi) + "]");

  const SuperContext basis_ctx = SuperContext::symbolic(m, n, ctx.a);
  const std::vector<Partition> order = hook_partitions(k, m, n);
  std::vector<Rational> coeffs(order.size());
  for (std::size_t z = 0; z < order.size(); ++z) {
    const Partition& zeta = order[z];
    const XiEta pt = xi_eta(zeta, m, n);
    const Alphabet xs = eval_point(ctx.a, Partition(pt.xi), m);
    const Alphabet ys = eval_point(ctx.a_star(), Partition(pt.eta), n);
    std::map<VarId, Poly> bindings;
    for (int i = 1; i <= m; ++i) bindings.emplace(VarId::x(i), xs[i - 1]);
    for (int j = 1; j <= n; ++j) bindings.emplace(VarId::y(j), ys[j - 1]);
    Rational residual = substitute(p, bindings).constant_term();
    for (std::size_t l = 0; l < z; ++l) {
      Rational value = vanishing_eval(order[l], zeta, basis_ctx).constant_term();
      if (!contains(zeta, order[l])) {
        if (value != 0)
          throw InternalMismatch("evaluation matrix not triangular at (" + to_string(order[l]) + ", " +
                                 to_string(zeta) + ")");
        continue;
      }
      residual -= coeffs[l] * value;
    }
    Rational diagonal = vanishing_eval(zeta, zeta, basis_ctx).constant_term();
    if (diagonal == 0)
      throw SequenceNotMultiplicityFree("zero diagonal evaluation at " + to_string(zeta));
    coeffs[z] = residual / diagonal;
  }

  BasisExpansion out;
  for (std::size_t z = 0; z < order.size(); ++z)
    if (coeffs[z] != 0) out.coefficients.emplace(order[z], coeffs[z]);
  out.reconstruction_exact = reconstruct(out, basis_ctx) == p;
  return out;
}

Poly reconstruct(const BasisExpansion& expansion, const SuperContext& ctx) {
  Poly out;
  for (const auto& [lambda, c] : expansion.coefficients) {
    Poly term = super_schur_tableau(SkewShape(lambda), ctx);
    term *= c;
    out += term;
  }
  return out;
}

namespace {

TruncatedSeries linear_ratio(const Poly& numer, const Poly& denom, int order) {
  return (TruncatedSeries::linear(numer) * laurent_expand_inverse_linear(denom, order + 1)).truncated(order);
}

std::string describe_alphabet(const Alphabet& values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << to_text(values[i]);
  os << ')';
  return os.str();
}

} // namespace

GenSeriesOutcome genseries_check_super(SeriesKind kind, int m, int n, const ParamSequence& a, int order,
                                       int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GenSeriesOutcome outcome;
  for (int trial = 0; trial < trials; ++trial) {
    SuperContext ctx{{}, {}, a};
    for (int i = 0; i < m; ++i) ctx.xs.emplace_back(random_rational(rng));
    for (int j = 0; j < n; ++j) ctx.ys.emplace_back(random_rational(rng));

    TruncatedSeries lhs = TruncatedSeries::constant(Poly(1), order);
    TruncatedSeries rhs = TruncatedSeries::constant(Poly(1), order);
    for (int k = 1; k <= order; ++k) {
      Poly c;
      TruncatedSeries term(order);
      if (kind == SeriesKind::Elementary) {
        c = e_super(k, ctx);
        if (k % 2) c = -c;
        term = TruncatedSeries::constant(c, order);
        for (int l = m - k + 1; l <= m; ++l) term = term * laurent_expand_inverse_linear(a.get(l), order);
      } else {
        c = h_super(k, ctx);
        term = TruncatedSeries::constant(c, order);
        for (int l = m + 1; l <= m + k; ++l) term = term * laurent_expand_inverse_linear(a.get(l), order);
      }
      lhs += term;
    }
    if (kind == SeriesKind::Elementary) {
      for (int i = 1; i <= m; ++i) rhs = rhs * linear_ratio(ctx.xs[i - 1], a.get(i), order);
      for (int j = 1; j <= n; ++j) rhs = rhs * linear_ratio(a.get(j), -ctx.ys[j - 1], order);
    } else {
      for (int i = 1; i <= m; ++i) rhs = rhs * linear_ratio(a.get(i), ctx.xs[i - 1], order);
      for (int j = 1; j <= n; ++j) rhs = rhs * linear_ratio(-ctx.ys[j - 1], a.get(j), order);
    }
    ++outcome.trials_run;
    if (lhs.order() < order || rhs.order() < order || !lhs.agrees_with(rhs)) {
      outcome.holds = false;
      outcome.detail = "trial " + std::to_string(trial) + ": x = " + describe_alphabet(ctx.xs) +
                       ", y = " + describe_alphabet(ctx.ys);
      return outcome;
    }
  }
  return outcome;
}

} // namespace facschur
