#ifndef REPCOUNT_SERIES_HPP
#define REPCOUNT_SERIES_HPP

#include <cstdint>

#include "repcount/configuration.hpp"
#include "repcount/integer_sequence.hpp"
#include "repcount/power_series.hpp"

namespace repcount {

/// Indicator series f_A(z) = sum_{a in A} z^a truncated at N.
/// Requires A.limit() >= N.
PowerSeries seq_series(const IntegerSequence& a, std::size_t order);

/// f(z^k) truncated at N. Requires f.order() >= N / k.
PowerSeries substitute_power(const PowerSeries& f, std::uint64_t k, std::size_t order);

/// Exact truncated Cauchy product. Chooses between the schoolbook and the
/// NTT path by size; both give identical results. Shorter inputs are
/// zero-extended.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, std::size_t order);

/// O(N^2) reference product. Accumulates in 128-bit integers when the
/// coefficient bound allows it, GMP otherwise.
PowerSeries multiply_schoolbook(const PowerSeries& f, const PowerSeries& g, std::size_t order);

/// Product through number-theoretic transforms modulo as many 62-bit primes
/// as the coefficient bound requires, reconstructed exactly by CRT.
PowerSeries multiply_ntt(const PowerSeries& f, const PowerSeries& g, std::size_t order);

/// f^m truncated at N by repeated squaring; power(f, 0, N) is the unit series.
PowerSeries power(const PowerSeries& f, std::uint64_t m, std::size_t order);

/// r_m(0..N, A) as the coefficients of prod_i f_A(z^{k_i})^{m_i}.
RepTable rep_series(const IntegerSequence& a, const Configuration& cfg, std::size_t order);

/// Truncated evaluation sum_{n<=N} c_n x^n in double precision; no tail
/// estimate. Requires 0 <= x < 1.
double evaluate(const PowerSeries& f, double x);

}  // namespace repcount

#endif  // REPCOUNT_SERIES_HPP
