#include "facschur/factorial.hpp"

#include "facschur/error.hpp"
#include "facschur/matrix.hpp"
#include "facschur/tableau.hpp"

#include <algorithm>
#include <functional>

namespace facschur {

Alphabet variables(Family family, int count) {
  Alphabet out;
  for (int i = 1; i <= count; ++i) out.push_back(Poly::var({family, i}));
  return out;
}

Poly falling_product(const Poly& v, const ParamSequence& a, int k, long shift) {
  Poly out(1);
  for (int j = 1; j <= k; ++j) out *= v - a.get(shift + j);
  return out;
}

Alphabet eval_point(const ParamSequence& a, const Partition& alpha, int l) {
  auto parts = alpha.padded(l);
  Alphabet out;
  for (int i = 1; i <= l; ++i) out.push_back(a.get(parts[i - 1] + l - i + 1));
  return out;
}

Poly factorial_schur_tableau(const SkewShape& shape, std::span<const Poly> xs, const ParamSequence& a) {
  const int m = static_cast<int>(xs.size());
  // Linear factor for entry e in a cell of content c, cached by (e, c).
  const auto cells = shape.cells();
  int min_content = 0, max_content = 0;
  for (const Cell& c : cells) {
    min_content = std::min(min_content, c.content());
    max_content = std::max(max_content, c.content());
  }
  const int span_c = max_content - min_content + 1;
  std::vector<Poly> factor(static_cast<std::size_t>(m + 1) * span_c);
  std::vector<bool> ready(factor.size(), false);
  auto linear = [&](int entry, int content) -> const Poly& {
    std::size_t key = static_cast<std::size_t>(entry) * span_c + (content - min_content);
    if (!ready[key]) {
      factor[key] = xs[entry - 1] - a.get(entry + content);
      ready[key] = true;
    }
    return factor[key];
  };

  Poly sum;
  for_each_ssyt(shape, m, [&](std::span<const Cell> cs, std::span<const int> entries) {
    Poly term(1);
    for (std::size_t k = 0; k < cs.size(); ++k) term *= linear(entries[k], cs[k].content());
    sum += term;
  });
  return sum;
}

Poly factorial_schur_tableau(const SkewShape& shape, int m, const ParamSequence& a) {
  return factorial_schur_tableau(shape, x_vars(m), a);
}

Poly factorial_schur_ratio(const Partition& lambda, int m, const ParamSequence& a) {
  if (lambda.length() > m) throw PreconditionViolated("ratio formula needs length(lambda) <= m");
  auto parts = lambda.padded(m);
  PolyMatrix numerator(m, std::vector<Poly>(m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      numerator[i - 1][j - 1] = falling_product(VarId::x(j), a, parts[i - 1] + m - i);
  Poly quotient = det_poly(numerator);
  // Divide by the linear factors of the Vandermonde one at a time.
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) quotient = exact_divide(quotient, Poly::var(VarId::x(i)) - Poly::var(VarId::x(j)));
  return quotient;
}

namespace {

// Visits index chains i_1..i_k in 1..m, strictly (strict = true) or weakly
// increasing.
void for_each_chain(int k, int m, bool strict, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chain(k);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == k) {
      visit(chain);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      chain[pos] = v;
      rec(pos + 1, strict ? v + 1 : v);
    }
  };
  rec(0, 1);
}

} // namespace

Poly e_factorial(int k, std::span<const Poly> xs, const ParamSequence& a) {
  if (k < 0) return {};
  const int m = static_cast<int>(xs.size());
  Poly sum;
  for_each_chain(k, m, true, [&](const std::vector<int>& idx) {
    Poly term(1);
    for (int l = 1; l <= k; ++l) term *= xs[idx[l - 1] - 1] - a.get(idx[l - 1] - l + 1);
    sum += term;
  });
  return sum;
}

Poly h_factorial(int k, std::span<const Poly> xs, const ParamSequence& a) {
  if (k < 0) return {};
  const int m = static_cast<int>(xs.size());
  Poly sum;
  for_each_chain(k, m, false, [&](const std::vector<int>& idx) {
    Poly term(1);
    for (int l = 1; l <= k; ++l) term *= xs[idx[l - 1] - 1] - a.get(idx[l - 1] + l - 1);
    sum += term;
  });
  return sum;
}

Poly classical_schur(const SkewShape& shape, std::span<const Poly> xs) {
  Poly sum;
  for_each_ssyt(shape, static_cast<int>(xs.size()), [&](std::span<const Cell>, std::span<const int> entries) {
    Poly term(1);
    for (int e : entries) term *= xs[e - 1];
    sum += term;
  });
  return sum;
}

Poly vanishing_product(const Partition& lambda, int m, const ParamSequence& a) {
  Partition lc = conjugate(lambda);
  Poly out(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      out *= a.get(lambda.part(i) + m - i + 1) - a.get(m - lc.part(j) + j);
  return out;
}

Poly vanishing_classical(const Partition& lambda, const Partition& sigma, int m, const ParamSequence& a) {
  if (sigma.length() > m || lambda.length() > m)
    throw PreconditionViolated("vanishing evaluation needs length <= m");
  return factorial_schur_tableau(SkewShape(lambda), eval_point(a, sigma, m), a);
}

Rational random_rational(std::mt19937_64& rng) {
  // Plain modular reduction keeps draws identical across standard libraries.
  long n = static_cast<long>(rng() % 41) - 20;
  long d = static_cast<long>(rng() % 9) + 1;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

namespace {

// (t - numer) / (t - denom) expanded through s^order.
TruncatedSeries linear_ratio(const Poly& numer, const Poly& denom, int order) {
  return (TruncatedSeries::linear(numer) * laurent_expand_inverse_linear(denom, order + 1)).truncated(order);
}

} // namespace

bool genseries_check_classical(SeriesKind kind, int n, const ParamSequence& a, int order, int trials,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Alphabet ys;
    for (int j = 0; j < n; ++j) ys.emplace_back(random_rational(rng));

    TruncatedSeries lhs = TruncatedSeries::constant(Poly(1), order);
    TruncatedSeries rhs = TruncatedSeries::constant(Poly(1), order);
    if (kind == SeriesKind::Complete) {
      for (int k = 1; k <= order; ++k) {
        TruncatedSeries term = TruncatedSeries::constant(h_factorial(k, ys, a), order);
        for (int l = 1; l <= k; ++l) term = term * laurent_expand_inverse_linear(a.get(n + l), order);
        lhs += term;
      }
      for (int i = 1; i <= n; ++i) rhs = rhs * linear_ratio(a.get(i), ys[i - 1], order);
    } else {
      for (int k = 1; k <= n; ++k) {
        Poly c = e_factorial(k, ys, a);
        if (k % 2) c = -c;
        TruncatedSeries term = TruncatedSeries::constant(c, order);
        for (int l = n - k + 1; l <= n; ++l) term = term * laurent_expand_inverse_linear(a.get(l), order);
        lhs += term;
      }
      for (int i = 1; i <= n; ++i) rhs = rhs * linear_ratio(ys[i - 1], a.get(i), order);
    }
    if (lhs.order() < order || rhs.order() < order || !lhs.agrees_with(rhs)) return false;
  }
  return true;
}

} // namespace facschur
