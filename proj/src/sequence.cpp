#include "facschur/sequence.hpp"

#include "facschur/error.hpp"

#include <set>
#include <sstream>

namespace facschur {

ParamSequence ParamSequence::zero() {
  ParamSequence s;
  s.base_ = std::make_shared<const Base>(Base{Mode::Zero, Rational(0), 0, -1, {}});
  return s;
}

ParamSequence ParamSequence::arithmetic(const Rational& offset) {
  ParamSequence s;
  s.base_ = std::make_shared<const Base>(Base{Mode::Arithmetic, offset, 0, -1, {}});
  return s;
}

ParamSequence ParamSequence::explicit_values(long lo, std::vector<Rational> values) {
  ParamSequence s;
  long hi = lo + static_cast<long>(values.size()) - 1;
  s.base_ = std::make_shared<const Base>(Base{Mode::Explicit, Rational(0), lo, hi, std::move(values)});
  return s;
}

ParamSequence ParamSequence::symbolic(long lo, long hi) {
  if (hi < lo) throw PreconditionViolated("symbolic window with hi < lo");
  ParamSequence s;
  s.base_ = std::make_shared<const Base>(Base{Mode::Symbolic, Rational(0), lo, hi, {}});
  return s;
}

ParamSequence ParamSequence::with(Op op) const {
  ParamSequence out = *this;
  if (!out.ops_.empty()) {
    Op& last = out.ops_.back();
    if (op.kind == OpKind::Shift && last.kind == OpKind::Shift) {
      last.amount += op.amount;
      if (last.amount == 0) out.ops_.pop_back();
      return out;
    }
    if (op.kind == OpKind::Star && last.kind == OpKind::Star && last.amount == op.amount) {
      out.ops_.pop_back();
      return out;
    }
    if (op.kind == OpKind::Negate && last.kind == OpKind::Negate) {
      out.ops_.pop_back();
      return out;
    }
  }
  if (op.kind == OpKind::Shift && op.amount == 0) return out;
  out.ops_.push_back(op);
  return out;
}

ParamSequence ParamSequence::shifted(long k) const { return with({OpKind::Shift, k}); }
ParamSequence ParamSequence::star(int n) const { return with({OpKind::Star, n}); }
ParamSequence ParamSequence::negated() const { return with({OpKind::Negate, 0}); }

std::pair<long, int> ParamSequence::resolve(long i) const {
  int sign = 1;
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    switch (it->kind) {
    case OpKind::Shift: i += it->amount; break;
    case OpKind::Star:
      i = it->amount - i + 1;
      sign = -sign;
      break;
    case OpKind::Negate: sign = -sign; break;
    }
  }
  return {i, sign};
}

Poly ParamSequence::get(long i) const {
  auto [index, sign] = resolve(i);
  const Base& b = *base_;
  switch (b.mode) {
  case Mode::Zero: return Poly{};
  case Mode::Arithmetic: return Poly(Rational(sign) * (Rational(index) + b.offset));
  case Mode::Explicit:
    if (index < b.lo || index > b.hi) throw WindowExceeded(index);
    return Poly(Rational(sign) * b.values[index - b.lo]);
  case Mode::Symbolic: {
    if (index < b.lo || index > b.hi) throw WindowExceeded(index);
    Poly v = Poly::var(VarId::a(static_cast<int>(index)));
    return sign > 0 ? v : -v;
  }
  }
  return Poly{};
}

Rational ParamSequence::value(long i) const {
  if (!is_numeric()) throw PreconditionViolated("numeric value requested from a symbolic sequence");
  return get(i).constant_term();
}

std::optional<std::pair<long, long>> ParamSequence::window() const {
  if (base_->mode == Mode::Explicit || base_->mode == Mode::Symbolic) return std::pair{base_->lo, base_->hi};
  return std::nullopt;
}

bool ParamSequence::multiplicity_free_on(long lo, long hi) const {
  if (!is_numeric()) return true;
  std::set<Rational> seen;
  for (long i = lo; i <= hi; ++i)
    if (!seen.insert(value(i)).second) return false;
  return true;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& s, std::string_view context) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed integer '" + s + "' in sequence spec '" + std::string(context) + "'");
  }
}

} // namespace

ParamSequence ParamSequence::parse(std::string_view spec) {
  auto fields = split(spec, ':');
  const std::string& kind = fields[0];
  if (kind == "zero" && fields.size() == 1) return zero();
  if (kind == "arith" && fields.size() == 2) return arithmetic(parse_rational(fields[1]));
  if (kind == "sym" && fields.size() == 3) {
    long lo = parse_long(fields[1], spec);
    long hi = parse_long(fields[2], spec);
    if (hi < lo) throw ParseError("sequence window with hi < lo: '" + std::string(spec) + "'");
    return symbolic(lo, hi);
  }
  if (kind == "list" && fields.size() == 3) {
    long lo = parse_long(fields[1], spec);
    std::vector<Rational> values;
    for (const auto& item : split(fields[2], ',')) values.push_back(parse_rational(item));
    return explicit_values(lo, std::move(values));
  }
  throw ParseError("unrecognised sequence spec '" + std::string(spec) + "'");
}

std::string ParamSequence::describe() const {
  std::ostringstream os;
  const Base& b = *base_;
  switch (b.mode) {
  case Mode::Zero: os << "zero"; break;
  case Mode::Arithmetic: os << "arith:" << to_display_string(b.offset); break;
  case Mode::Symbolic: os << "sym:" << b.lo << ":" << b.hi; break;
  case Mode::Explicit:
    os << "list:" << b.lo << ":";
    for (std::size_t i = 0; i < b.values.size(); ++i) os << (i ? "," : "") << to_display_string(b.values[i]);
    break;
  }
  std::string out = os.str();
  for (const Op& op : ops_) {
    switch (op.kind) {
    case OpKind::Shift: out = "tau^" + std::to_string(op.amount) + "(" + out + ")"; break;
    case OpKind::Star: out = "star" + std::to_string(op.amount) + "(" + out + ")"; break;
    case OpKind::Negate: out = "-(" + out + ")"; break;
    }
  }
  return out;
}

std::pair<long, long> conservative_window(int max_weight, int m, int n) {
  return {-static_cast<long>(max_weight) - n, static_cast<long>(m) + n + max_weight};
}

} // namespace facschur
