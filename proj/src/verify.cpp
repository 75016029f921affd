#include "facschur/verify.hpp"

#include "facschur/error.hpp"
#include "facschur/serialize.hpp"
#include "facschur/shifted.hpp"
#include "facschur/supersym.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace facschur {

namespace {

struct Outcome {
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct Case {
  std::string inputs;
  std::function<Outcome()> run;
};

Outcome compare(const Poly& lhs, const Poly& rhs) {
  Outcome out;
  out.pass = lhs == rhs;
  if (!out.pass) {
    out.lhs = to_text(lhs);
    out.rhs = to_text(rhs);
  }
  return out;
}

Outcome require(bool ok, std::string lhs, std::string rhs = {}) {
  Outcome out;
  out.pass = ok;
  if (!ok) {
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
  }
  return out;
}

// All skew shapes lambda/mu with |lambda| <= max_weight, lambda in weight order.
std::vector<SkewShape> skew_grid(int max_weight) {
  std::vector<SkewShape> out;
  for (const Partition& lambda : partitions_up_to(max_weight))
    for (const Partition& mu : partitions_between(Partition{}, lambda)) out.emplace_back(lambda, mu);
  return out;
}

// Terms whose degree in the x and y variables alone equals d.
Poly xy_component(const Poly& p, int d) {
  Poly out;
  for (const auto& [mono, c] : p.terms()) {
    int deg = 0;
    for (const auto& [v, e] : mono.factors())
      if (v.family == Family::X || v.family == Family::Y) deg += e;
    if (deg == d) out.add_term(c, mono);
  }
  return out;
}

std::vector<Case> build_cases(const VerifyOptions& o, const ParamSequence& a) {
  const int m = o.m, n = o.n, w = o.max_weight;
  const SuperContext ctx = SuperContext::symbolic(m, n, a);
  std::vector<Case> cases;
  const std::string& id = o.identity;

  if (id == "tableau-vs-conv") {
    for (const SkewShape& s : skew_grid(w))
      cases.push_back({to_string(s), [=] { return compare(super_schur_tableau(s, ctx), super_schur_conv(s, ctx)); }});
  } else if (id == "jacobi-trudi") {
    for (const SkewShape& s : skew_grid(w))
      cases.push_back({to_string(s), [=] { return compare(jacobi_trudi(s, ctx), super_schur_tableau(s, ctx)); }});
  } else if (id == "dual-jt") {
    for (const SkewShape& s : skew_grid(w))
      cases.push_back({to_string(s), [=] {
                         return compare(dual_jacobi_trudi(s, ctx), super_schur_tableau(s.conjugate(), ctx));
                       }});
  } else if (id == "sergeev-pragacz") {
    for (const Partition& lambda : partitions_up_to(w))
      cases.push_back({to_string(lambda), [=] {
                         return compare(sergeev_pragacz(lambda, ctx), super_schur_tableau(SkewShape(lambda), ctx));
                       }});
  } else if (id == "cancellation" || id == "symmetry") {
    const bool full = id == "symmetry";
    for (const SkewShape& s : skew_grid(w))
      cases.push_back({to_string(s), [=] {
                         Poly p = super_schur_tableau(s, ctx);
                         if (!full) return require(cancellation_check(p, m, n), to_text(p));
                         std::string witness = supersymmetry_witness(p, m, n);
                         return require(witness.empty(), witness);
                       }});
  } else if (id == "vanishing") {
    for (const Partition& lambda : hook_partitions(w, m, n))
      for (const Partition& zeta : hook_partitions(w, m, n)) {
        if (contains(zeta, lambda) && !(lambda == zeta)) continue;
        cases.push_back({to_string(lambda) + " at " + to_string(zeta), [=] {
                           Poly value = vanishing_eval(lambda, zeta, ctx);
                           return compare(value, lambda == zeta ? vanishing_product(lambda, m, a) : Poly{});
                         }});
      }
  } else if (id == "vanishing-star") {
    const ShiftedContext sctx{m, n};
    for (const Partition& lambda : hook_partitions(w, m, n))
      for (const Partition& zeta : hook_partitions(w, m, n)) {
        if (contains(zeta, lambda) && !(lambda == zeta)) continue;
        cases.push_back({to_string(lambda) + " at " + to_string(zeta), [=] {
                           Rational value = vanishing_star(lambda, zeta, sctx);
                           Rational expected = lambda == zeta ? Rational(hook_product(lambda)) : Rational(0);
                           Outcome out = require(value == expected, to_display_string(value), to_display_string(expected));
                           if (lambda == zeta) out.note = "H(" + to_string(lambda) + ") = " + to_display_string(value);
                           return out;
                         }});
      }
  } else if (id == "dual-cauchy") {
    cases.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n), [=] {
                       DualCauchyResult r = dual_cauchy(m, n, a);
                       return compare(r.lhs, r.rhs);
                     }});
  } else if (id == "factorization") {
    for (const Partition& lambda : hook_partitions(w, m, n)) {
      if (!contains(lambda, Partition::rectangle(m, n))) continue;
      cases.push_back({to_string(lambda), [=] {
                         return compare(factorization(lambda, ctx), super_schur_tableau(SkewShape(lambda), ctx));
                       }});
    }
  } else if (id == "genseries-e" || id == "genseries-h") {
    const SeriesKind kind = id == "genseries-e" ? SeriesKind::Elementary : SeriesKind::Complete;
    const int order = o.order, trials = o.trials;
    const std::uint64_t seed = o.seed;
    cases.push_back({"N=" + std::to_string(order) + " trials=" + std::to_string(trials), [=] {
                       GenSeriesOutcome r = genseries_check_super(kind, m, n, a, order, trials, seed);
                       Outcome out = require(r.holds, r.detail);
                       out.note = std::to_string(r.trials_run) + " draws agree through order " + std::to_string(order);
                       if (!r.holds) out.note.clear();
                       return out;
                     }});
  } else if (id == "specialization") {
    if (n < 1) throw PreconditionViolated("specialization needs n >= 1");
    const SuperContext smaller = SuperContext::symbolic(m, n - 1, a);
    for (const Partition& lambda : partitions_up_to(w))
      cases.push_back({to_string(lambda), [=] {
                         return compare(specialize_y(super_schur_conv(SkewShape(lambda), ctx), ctx),
                                        super_schur_tableau(SkewShape(lambda), smaller));
                       }});
  } else if (id == "highest-term") {
    const SuperContext zero_ctx = SuperContext::symbolic(m, n, ParamSequence::zero());
    for (const SkewShape& s : skew_grid(w))
      cases.push_back({to_string(s), [=] {
                         Poly classical = classical_super_schur(s, m, n);
                         Outcome top = compare(xy_component(super_schur_tableau(s, ctx), s.size()), classical);
                         if (!top.pass) return top;
                         return compare(super_schur_conv(s, zero_ctx), classical);
                       }});
  } else if (id == "recurrences") {
    if (m < 1) throw PreconditionViolated("recurrences need m >= 1");
    const SuperContext shorter{x_vars(m - 1), y_vars(n), a};
    const Poly xm = Poly::var(VarId::x(m));
    for (int k = 0; k <= w; ++k) {
      cases.push_back({"e_" + std::to_string(k), [=] {
                         Poly rhs = e_super(k, shorter) + e_super(k - 1, shorter) * (xm - a.get(m - k + 1));
                         return compare(e_super(k, ctx), rhs);
                       }});
      cases.push_back({"h_" + std::to_string(k), [=] {
                         Poly rhs;
                         for (int s = 0; s <= k; ++s) rhs += h_super(k - s, shorter) * falling_product(xm, a, s, m + k - s - 1);
                         return compare(h_super(k, ctx), rhs);
                       }});
      cases.push_back({"h_" + std::to_string(k) + " vs e_" + std::to_string(k) + " swapped", [=] {
                         SuperContext swapped{ctx.ys, ctx.xs, a.shifted(k - 1).negated()};
                         return compare(h_super(k, ctx), e_super(k, swapped));
                       }});
      cases.push_back({"explicit e_" + std::to_string(k) + ", h_" + std::to_string(k), [=] {
                         Outcome e = compare(e_super(k, ctx), e_super_explicit(k, ctx));
                         if (!e.pass) return e;
                         return compare(h_super(k, ctx), h_super_explicit(k, ctx));
                       }});
    }
  } else if (id == "basis-roundtrip") {
    if (!a.is_numeric()) throw PreconditionViolated("basis-roundtrip needs a numeric sequence");
    std::mt19937_64 rng(o.seed);
    const std::vector<Partition> basis = hook_partitions(w, m, n);
    for (int t = 0; t < o.trials; ++t) {
      // Pick two basis elements whose weights fit together under max_weight.
      Partition first = basis[rng() % basis.size()];
      std::vector<Partition> partners;
      for (const Partition& p : basis)
        if (p.weight() + first.weight() <= w) partners.push_back(p);
      Partition second = partners[rng() % partners.size()];
      cases.push_back({to_string(first) + " * " + to_string(second), [=] {
                         Poly product = super_schur_tableau(SkewShape(first), ctx) * super_schur_tableau(SkewShape(second), ctx);
                         BasisExpansion e = expand_in_basis(product, ctx, first.weight() + second.weight());
                         return require(e.reconstruction_exact, expansion_to_json(e).dump());
                       }});
    }
  } else {
    throw PreconditionViolated("unknown identity '" + id + "'");
  }
  return cases;
}

Outcome run_case(const Case& c) {
  try {
    return c.run();
  } catch (const Error& e) {
    return require(false, std::string("error: ") + e.what());
  }
}

} // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "tableau-vs-conv", "jacobi-trudi", "dual-jt",         "sergeev-pragacz", "cancellation",  "symmetry",
      "vanishing",       "vanishing-star", "dual-cauchy",   "factorization",   "genseries-e",   "genseries-h",
      "specialization",  "highest-term", "recurrences",     "basis-roundtrip"};
  return names;
}

ParamSequence default_sequence(const std::string& identity, int max_weight, int m, int n) {
  if (identity == "genseries-e" || identity == "genseries-h" || identity == "basis-roundtrip")
    return ParamSequence::arithmetic(0);
  auto [lo, hi] = conservative_window(max_weight, m, n);
  return ParamSequence::symbolic(lo, hi);
}

VerifyReport run_verify(const VerifyOptions& o) {
  if (o.m < 0 || o.n < 0 || o.max_weight < 0 || o.trials < 0 || o.order < 0)
    throw PreconditionViolated("sizes must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const ParamSequence a = o.seq ? *o.seq : default_sequence(o.identity, o.max_weight, o.m, o.n);
  const std::vector<Case> cases = build_cases(o, a);

  std::vector<Outcome> outcomes(cases.size());
  if (o.jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) outcomes[i] = run_case(cases[i]);
  } else {
    // Each worker takes every jobs-th case; results land in grid order.
    std::vector<std::future<void>> workers;
    for (int j = 0; j < o.jobs; ++j)
      workers.push_back(std::async(std::launch::async, [&, j] {
        for (std::size_t i = j; i < cases.size(); i += o.jobs) outcomes[i] = run_case(cases[i]);
      }));
    for (auto& f : workers) f.get();
  }

  VerifyReport report;
  report.identity = o.identity;
  std::ostringstream grid;
  grid << "m=" << o.m << " n=" << o.n << " max-weight=" << o.max_weight;
  if (o.identity != "vanishing-star") grid << " seq=" << a.describe();
  if (o.identity.rfind("genseries", 0) == 0 || o.identity == "basis-roundtrip") grid << " trials=" << o.trials;
  if (o.identity.rfind("genseries", 0) == 0) grid << " N=" << o.order;
  report.grid = grid.str();
  report.seed = o.seed;
  report.cases_run = static_cast<int>(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!outcomes[i].pass) report.failures.push_back({cases[i].inputs, outcomes[i].lhs, outcomes[i].rhs});
    if (!outcomes[i].note.empty()) report.notes.push_back(outcomes[i].note);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "identity: " << r.identity << "\n"
     << "grid: " << r.grid << "\n"
     << "seed: " << r.seed << "\n"
     << "cases: " << r.cases_run << "\n"
     << "failures: " << r.failures.size() << "\n";
  for (const std::string& note : r.notes) os << "  " << note << "\n";
  for (const CaseFailure& f : r.failures) {
    os << "FAIL " << f.inputs << "\n";
    if (!f.lhs.empty()) os << "  lhs: " << f.lhs << "\n";
    if (!f.rhs.empty()) os << "  rhs: " << f.rhs << "\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json report_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const CaseFailure& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"identity", r.identity}, {"grid", r.grid},     {"seed", r.seed},   {"cases", r.cases_run},
          {"failures", failures},   {"notes", r.notes},   {"passed", r.passed()}};
}

} // namespace facschur
