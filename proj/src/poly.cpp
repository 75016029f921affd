#include "facschur/poly.hpp"

#include "facschur/error.hpp"

#include <algorithm>
#include <sstream>

namespace facschur {

char family_letter(Family f) {
  switch (f) {
  case Family::X: return 'x';
  case Family::Y: return 'y';
  case Family::U: return 'u';
  case Family::V: return 'v';
  case Family::A: return 'a';
  case Family::T: return 't';
  case Family::Z: return 'z';
  }
  return '?';
}

std::string var_name(VarId v) {
  std::string name(1, family_letter(v.family));
  if (v.family == Family::T || v.family == Family::Z) return name;
  if (v.index < 0) return name + "(" + std::to_string(v.index) + ")";
  return name + std::to_string(v.index);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(VarId v, int exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& l, const Factor& r) { return l.first < r.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e < 0) throw PreconditionViolated("negative exponent in monomial");
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto l = factors_.begin();
  auto r = other.factors_.begin();
  while (l != factors_.end() && r != other.factors_.end()) {
    if (l->first < r->first) {
      out.factors_.push_back(*l++);
    } else if (r->first < l->first) {
      out.factors_.push_back(*r++);
    } else {
      out.factors_.emplace_back(l->first, l->second + r->second);
      ++l;
      ++r;
    }
  }
  out.factors_.insert(out.factors_.end(), l, factors_.end());
  out.factors_.insert(out.factors_.end(), r, other.factors_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divide(const Monomial& divisor, Monomial& out) const {
  if (divisor.degree_ > degree_) return false;
  out.factors_.clear();
  auto l = factors_.begin();
  auto r = divisor.factors_.begin();
  while (r != divisor.factors_.end()) {
    if (l == factors_.end() || r->first < l->first) return false;
    if (l->first < r->first) {
      out.factors_.push_back(*l++);
      continue;
    }
    if (l->second < r->second) return false;
    if (l->second > r->second) out.factors_.emplace_back(l->first, l->second - r->second);
    ++l;
    ++r;
  }
  out.factors_.insert(out.factors_.end(), l, factors_.end());
  out.degree_ = degree_ - divisor.degree_;
  return true;
}

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
  if (lhs.degree() != rhs.degree()) return lhs.degree() > rhs.degree();
  auto l = lhs.factors();
  auto r = rhs.factors();
  std::size_t i = 0;
  for (; i < l.size() && i < r.size(); ++i) {
    if (l[i].first != r[i].first) return l[i].first < r[i].first;
    if (l[i].second != r[i].second) return l[i].second > r[i].second;
  }
  // Equal degree and equal prefix forces equal length.
  return false;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::var(VarId v) { return term(Rational(1), Monomial::of(v)); }

Poly Poly::term(const Rational& coeff, Monomial mono) {
  Poly p;
  if (coeff != 0) p.terms_.emplace(std::move(mono), coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Poly::degree_in(VarId v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

bool Poly::contains_family(Family f) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.family == f) return true;
  return false;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Poly Poly::highest_component() const {
  return terms_.empty() ? Poly{} : homogeneous_part(total_degree());
}

void Poly::add_term(const Rational& c, const Monomial& mono) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  const Poly& outer = lhs.size() <= rhs.size() ? lhs : rhs;
  const Poly& inner = lhs.size() <= rhs.size() ? rhs : lhs;
  Rational prod;
  for (const auto& [lm, lc] : outer.terms_) {
    for (const auto& [rm, rc] : inner.terms_) {
      prod = lc * rc;
      out.add_term(prod, lm * rm);
    }
  }
  return out;
}

Poly pow(const Poly& base, int exponent) {
  if (exponent < 0) throw PreconditionViolated("negative polynomial power");
  Poly result(1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

Poly product(std::span<const Poly> factors) {
  Poly out(1);
  for (const auto& f : factors) out *= f;
  return out;
}

Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings) {
  if (bindings.empty()) return p;
  for (const auto& [v, image] : bindings)
    for (VarId used : image.variables())
      if (bindings.count(used))
        throw CyclicBinding("binding for " + var_name(v) + " mentions bound variable " + var_name(used));

  // Powers of each bound image, grown on demand.
  std::map<VarId, std::vector<Poly>> powers;
  auto power_of = [&](VarId v, int e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * bindings.at(v));
    return cache[e];
  };

  Poly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Poly factor = Poly::term(c, Monomial{});
    for (const auto& [v, e] : m.factors()) {
      if (bindings.count(v))
        factor *= power_of(v, e);
      else
        kept.emplace_back(v, e);
    }
    if (!kept.empty()) factor = factor * Poly::term(Rational(1), Monomial::from_factors(std::move(kept)));
    out += factor;
  }
  return out;
}

Poly rename_variables(const Poly& p, const std::map<VarId, VarId>& renaming) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors(m.factors().begin(), m.factors().end());
    for (auto& [v, e] : factors) {
      auto it = renaming.find(v);
      if (it != renaming.end()) v = it->second;
    }
    out.add_term(c, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

Poly exact_divide(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  if (dividend.is_zero()) return {};
  if (dividend.total_degree() < divisor.total_degree())
    throw NotDivisible("dividend degree below divisor degree");

  const Monomial lead_mono = divisor.terms().begin()->first;
  const Rational lead_coeff = divisor.terms().begin()->second;
  Poly remainder = dividend;
  Poly quotient;
  Monomial q_mono;
  while (!remainder.is_zero()) {
    const Monomial r_mono = remainder.terms().begin()->first;
    if (!r_mono.divide(lead_mono, q_mono))
      throw NotDivisible("nonzero remainder with leading term " + to_text(Poly::term(1, r_mono)));
    Rational q_coeff = remainder.terms().begin()->second / lead_coeff;
    quotient.add_term(q_coeff, q_mono);
    for (const auto& [m, c] : divisor.terms()) remainder.add_term(-q_coeff * c, q_mono * m);
  }
  return quotient;
}

Poly vandermonde(std::span<const VarId> vars) {
  std::set<VarId> seen;
  std::vector<Poly> entries;
  for (VarId v : vars) {
    if (!seen.insert(v).second) throw DuplicateVariable("repeated variable " + var_name(v));
    entries.push_back(Poly::var(v));
  }
  return vandermonde(std::span<const Poly>(entries));
}

Poly vandermonde(std::span<const Poly> entries) {
  Poly out(1);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) out *= entries[i] - entries[j];
  return out;
}

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || magnitude != 1) {
      os << to_display_string(magnitude);
      need_star = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_star) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

} // namespace facschur
