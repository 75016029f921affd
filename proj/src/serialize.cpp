#include "facschur/serialize.hpp"

#include "facschur/error.hpp"

#include <cctype>
#include <charconv>

namespace facschur {

namespace {

std::string family_key(Family f) {
  return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(family_letter(f)))));
}

Family parse_family(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
  case 'X': return Family::X;
  case 'Y': return Family::Y;
  case 'U': return Family::U;
  case 'V': return Family::V;
  case 'A': return Family::A;
  case 'T': return Family::T;
  case 'Z': return Family::Z;
  }
  throw ParseError(std::string("unknown variable family '") + c + "'");
}

VarId parse_var_key(std::string_view key) {
  auto colon = key.find(':');
  if (colon != 1) throw ParseError("malformed variable key '" + std::string(key) + "'");
  VarId v{parse_family(key[0]), 0};
  std::string_view digits = key.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v.index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("malformed variable index in '" + std::string(key) + "'");
  return v;
}

} // namespace

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) mono[family_key(v.family) + ":" + std::to_string(v.index)] = e;
    out.push_back({{"coeff", to_fraction_string(c)}, {"mono", mono}});
  }
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be a list of terms");
  Poly out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("mono"))
      throw ParseError("each term needs \"coeff\" and \"mono\"");
    const auto& coeff = term.at("coeff");
    Rational c;
    if (coeff.is_string())
      c = parse_rational(coeff.get<std::string>());
    else if (coeff.is_number_integer())
      c = Rational(coeff.get<long>());
    else
      throw ParseError("coefficient must be a \"num/den\" string or an integer");
    const auto& mono = term.at("mono");
    if (!mono.is_object()) throw ParseError("\"mono\" must be an object");
    std::vector<Monomial::Factor> factors;
    for (const auto& [key, e] : mono.items()) {
      if (!e.is_number_integer() || e.get<long>() < 0) throw ParseError("exponent of " + key + " must be a non-negative integer");
      factors.emplace_back(parse_var_key(key), e.get<int>());
    }
    out.add_term(c, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

Poly parse_poly_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("polynomial input is not valid JSON");
  return poly_from_json(j);
}

nlohmann::json expansion_to_json(const BasisExpansion& e) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [lambda, c] : e.coefficients) coeffs[to_string(lambda)] = to_display_string(c);
  return {{"coefficients", coeffs}, {"reconstruction_exact", e.reconstruction_exact}};
}

} // namespace facschur
