#include "facschur/partition.hpp"

#include "facschur/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace facschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionViolated("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionViolated("partition parts must weakly decrease");
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return {};
  return Partition(std::vector<int>(rows, cols));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int len) const {
  if (length() > len) throw PreconditionViolated("partition " + to_string(*this) + " longer than " + std::to_string(len));
  std::vector<int> out(parts_);
  out.resize(len, 0);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.part(1), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool in_hook(const Partition& lambda, int m, int n) { return lambda.part(m + 1) <= n; }

DerivedShapes derived_shapes(const Partition& lambda, int m, int n) {
  if (!in_hook(lambda, m, n))
    throw NotInHook(to_string(lambda) + " is not in the (" + std::to_string(m) + "," + std::to_string(n) + ")-hook");
  std::vector<int> mu, nu, rho;
  for (int part : lambda.parts())
    if (part > n) mu.push_back(part - n);
  const Partition columns = conjugate(lambda);
  for (int col : columns.parts())
    if (col > m) nu.push_back(col - m);
  for (int i = 1; i <= m; ++i) rho.push_back(std::min(lambda.part(i), n));
  return {Partition(std::move(mu)), Partition(std::move(nu)), Partition(std::move(rho))};
}

XiEta xi_eta(const Partition& zeta, int m, int n) {
  if (!in_hook(zeta, m, n))
    throw NotInHook(to_string(zeta) + " is not in the (" + std::to_string(m) + "," + std::to_string(n) + ")-hook");
  XiEta out;
  for (int i = 1; i <= m; ++i) out.xi.push_back(zeta.part(i));
  Partition zc = conjugate(zeta);
  for (int i = 1; i <= n; ++i) out.eta.push_back(std::max(zc.part(i) - m, 0));
  return out;
}

mpz_class hook_product(const Partition& lambda) {
  Partition lc = conjugate(lambda);
  mpz_class out = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) out *= (lambda.part(i) - j) + (lc.part(j) - i) + 1;
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void between_rec(int row, const Partition& inner, const Partition& outer, std::vector<int>& prefix,
                 std::vector<Partition>& out) {
  if (row > outer.length()) {
    out.emplace_back(prefix);
    return;
  }
  int hi = outer.part(row);
  if (row > 1) hi = std::min(hi, prefix.back());
  for (int part = inner.part(row); part <= hi; ++part) {
    prefix.push_back(part);
    between_rec(row + 1, inner, outer, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> prefix;
  partitions_rec(weight, weight, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> hook_partitions(int max_weight, int m, int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_up_to(max_weight))
    if (in_hook(p, m, n)) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer) {
  std::vector<Partition> out;
  if (!contains(outer, inner)) return out;
  std::vector<int> prefix;
  between_rec(1, inner, outer, prefix, out);
  return out;
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < lambda.length(); ++i) os << (i ? "," : "") << lambda.parts()[i];
  os << ']';
  return os.str();
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in partition '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(std::string(item)));
    if (parts.back() <= 0) throw ParseError("partition parts must be positive: '" + std::string(text) + "'");
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw ParseError("trailing comma in partition '" + std::string(text) + "'");
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw ParseError("partition parts must weakly decrease: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw PreconditionViolated("skew shape " + to_string(outer_) + "/" + to_string(inner_) + " has inner not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
  return out;
}

SkewShape SkewShape::conjugate() const {
  return SkewShape(facschur::conjugate(outer_), facschur::conjugate(inner_));
}

std::string to_string(const SkewShape& shape) {
  if (shape.inner().empty()) return to_string(shape.outer());
  return to_string(shape.outer()) + "/" + to_string(shape.inner());
}

} // namespace facschur
