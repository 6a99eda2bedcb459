#ifndef REPCOUNT_CONFIGURATION_HPP
#define REPCOUNT_CONFIGURATION_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace repcount {

/// One (coefficient, multiplicity) pair of a configuration: the coefficient
/// k multiplies a block of m summands drawn from the sequence.
struct Term {
  std::uint64_t k = 1;
  std::uint64_t m = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Raised for malformed configurations, both from the constructor and from
/// parse_config. `term()` carries the offending term text when one exists.
class ConfigError : public std::invalid_argument {
 public:
  enum class Kind {
    Empty,
    Malformed,
    ZeroCoefficient,
    ZeroMultiplicity,
    DuplicateCoefficient,
    NotIncreasing,
  };

  ConfigError(Kind kind, std::string term, const std::string& what)
      : std::invalid_argument(what), kind_(kind), term_(std::move(term)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& term() const noexcept { return term_; }

 private:
  Kind kind_;
  std::string term_;
};

/// The multiset {(k_1,m_1),...,(k_r,m_r)} defining the multilinear form
///   k_1 (x_{1,1}+...+x_{1,m_1}) + ... + k_r (x_{r,1}+...+x_{r,m_r}).
///
/// Invariants: non-empty, 0 < k_1 < ... < k_r, every m_i >= 1.
class Configuration {
 public:
  explicit Configuration(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Number of summands in one representation, sum of all m_i.
  std::uint64_t total_multiplicity() const noexcept;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Term> terms_;
};

/// gcd(m_1, ..., m_r).
std::uint64_t degree(const Configuration& cfg);

/// {(k_i, m_i / s)} with s = degree(cfg). The result always has degree 1.
Configuration reduced(const Configuration& cfg);

/// Parses "k:m,k:m,...". Terms must already be sorted by strictly
/// increasing k; nothing is normalized silently.
Configuration parse_config(std::string_view text);

std::string format_config(const Configuration& cfg);

}  // namespace repcount

#endif  // REPCOUNT_CONFIGURATION_HPP
