#include "repcount/residue.hpp"

#include <stdexcept>
#include <string>

#include "repcount/series.hpp"

namespace repcount {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<ResidueViolation> mod_p_residue_check(const IntegerSequence& a, std::uint64_t p,
                                                  std::size_t order) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const Configuration cfg({{1, p}});
  const auto table = rep_series(a, cfg, order);

  std::vector<ResidueViolation> violations;
  for (std::size_t n = 0; n <= order; ++n) {
    const std::uint64_t residue = mpz_fdiv_ui(table[n].get_mpz_t(), p);
    const bool fixed_point =
        n % p == 0 && a.contains(static_cast<std::int64_t>(n / p));
    const std::uint64_t expected = fixed_point ? 1 : 0;
    if (residue != expected) violations.push_back({n, residue, expected});
  }
  return violations;
}

}  // namespace repcount
