#ifndef REPCOUNT_RESIDUE_HPP
#define REPCOUNT_RESIDUE_HPP

#include <cstdint>
#include <vector>

#include "repcount/integer_sequence.hpp"

namespace repcount {

bool is_prime(std::uint64_t n);

struct ResidueViolation {
  std::size_t n;
  std::uint64_t residue;   // r(n) mod p
  std::uint64_t expected;  // 1 if p | n and n/p in A, else 0
};

/// For cfg = {(1, p)}: the cyclic group of order p rotates ordered
/// p-tuples, and the only fixed tuples are the constant ones (a, ..., a)
/// with pa = n. Hence r(n) = [p | n and n/p in A] (mod p) for every n.
/// Returns every n <= N where that congruence fails; empty means it held
/// everywhere. Throws std::invalid_argument if p is not prime.
std::vector<ResidueViolation> mod_p_residue_check(const IntegerSequence& a, std::uint64_t p,
                                                  std::size_t order);

}  // namespace repcount

#endif  // REPCOUNT_RESIDUE_HPP
