#ifndef REPCOUNT_ORACLE_HPP
#define REPCOUNT_ORACLE_HPP

#include <cstdint>

#include "repcount/configuration.hpp"
#include "repcount/integer_sequence.hpp"
#include "repcount/power_series.hpp"

// Brute-force representation counting. Shares no code with the series
// engine: tuples are enumerated slot by slot, factors in configuration
// order, elements ascending, pruning once the running sum passes n.
// Intended for n <= 256 with at most six summands.
namespace repcount::oracle {

/// Number of ordered tuples (a_{1,1},...,a_{r,m_r}) in A with
/// sum_i k_i sum_j a_{i,j} = n. Requires A.limit() >= n.
Integer brute_rep_single(const IntegerSequence& a, const Configuration& cfg, std::int64_t n);

/// brute_rep_single for n = 0..N.
RepTable brute_rep(const IntegerSequence& a, const Configuration& cfg, std::size_t order);

}  // namespace repcount::oracle

#endif  // REPCOUNT_ORACLE_HPP
