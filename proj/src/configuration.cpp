#include "repcount/configuration.hpp"

#include <charconv>
#include <numeric>

namespace repcount {
namespace {

std::string term_text(const Term& t) {
  return std::to_string(t.k) + ":" + std::to_string(t.m);
}

void validate(const std::vector<Term>& terms) {
  using Kind = ConfigError::Kind;
  if (terms.empty()) throw ConfigError(Kind::Empty, "", "configuration is empty");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.k == 0)
      throw ConfigError(Kind::ZeroCoefficient, term_text(t),
                        "coefficient must be positive in term '" + term_text(t) + "'");
    if (t.m == 0)
      throw ConfigError(Kind::ZeroMultiplicity, term_text(t),
                        "multiplicity must be positive in term '" + term_text(t) + "'");
    if (i > 0 && t.k == terms[i - 1].k)
      throw ConfigError(Kind::DuplicateCoefficient, term_text(t),
                        "duplicate coefficient in term '" + term_text(t) + "'");
    if (i > 0 && t.k < terms[i - 1].k)
      throw ConfigError(Kind::NotIncreasing, term_text(t),
                        "coefficients must be strictly increasing at term '" + term_text(t) + "'");
  }
}

bool parse_decimal(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Configuration::Configuration(std::vector<Term> terms) : terms_(std::move(terms)) {
  validate(terms_);
}

std::uint64_t Configuration::total_multiplicity() const noexcept {
  std::uint64_t total = 0;
  for (const auto& t : terms_) total += t.m;
  return total;
}

std::uint64_t degree(const Configuration& cfg) {
  std::uint64_t g = 0;
  for (const auto& t : cfg.terms()) g = std::gcd(g, t.m);
  return g;
}

Configuration reduced(const Configuration& cfg) {
  const auto s = degree(cfg);
  std::vector<Term> terms;
  terms.reserve(cfg.size());
  for (const auto& t : cfg.terms()) terms.push_back({t.k, t.m / s});
  return Configuration(std::move(terms));
}

Configuration parse_config(std::string_view text) {
  using Kind = ConfigError::Kind;
  if (text.empty()) throw ConfigError(Kind::Empty, "", "configuration is empty");

  std::vector<Term> terms;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos);
    const auto colon = token.find(':');
    Term t;
    if (colon == std::string_view::npos || !parse_decimal(token.substr(0, colon), t.k) ||
        !parse_decimal(token.substr(colon + 1), t.m))
      throw ConfigError(Kind::Malformed, std::string(token),
                        "malformed term '" + std::string(token) + "', expected k:m");
    terms.push_back(t);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Configuration(std::move(terms));
}

std::string format_config(const Configuration& cfg) {
  std::string out;
  for (const auto& t : cfg.terms()) {
    if (!out.empty()) out += ',';
    out += term_text(t);
  }
  return out;
}

}  // namespace repcount
