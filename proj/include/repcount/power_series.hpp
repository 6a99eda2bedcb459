#ifndef REPCOUNT_POWER_SERIES_HPP
#define REPCOUNT_POWER_SERIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "repcount/configuration.hpp"

namespace repcount {

using Integer = mpz_class;

/// A power series truncated at order N: exactly N+1 exact integer
/// coefficients c_0..c_N.
///
/// Storage is canonical: when every coefficient fits in int64 the series is
/// held as a flat int64 vector ("compact"), otherwise as GMP integers
/// ("wide"). Arithmetic never rounds; the representation switch is
/// invisible except through the span accessors used by hot loops.
class PowerSeries {
 public:
  /// The zero series of order 0.
  PowerSeries();
  explicit PowerSeries(std::vector<std::int64_t> coeffs);
  explicit PowerSeries(std::vector<Integer> coeffs);

  static PowerSeries zero(std::size_t order);
  /// 1 + 0 z + ... + 0 z^order.
  static PowerSeries unit(std::size_t order);

  std::size_t order() const noexcept { return size() - 1; }
  std::size_t size() const noexcept;

  Integer operator[](std::size_t n) const;
  double as_double(std::size_t n) const;

  bool is_compact() const noexcept {
    return std::holds_alternative<std::vector<std::int64_t>>(data_);
  }
  /// Precondition: is_compact().
  std::span<const std::int64_t> compact() const;
  /// Precondition: !is_compact().
  std::span<const Integer> wide() const;

  std::vector<Integer> coefficients() const;

  /// Bit length of max |c_n| (0 for the zero series).
  std::size_t max_bits() const;
  bool nonnegative() const;
  bool is_zero() const;

  /// Drops coefficients above `order`, or zero-extends up to it.
  PowerSeries resized(std::size_t order) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::variant<std::vector<std::int64_t>, std::vector<Integer>> data_;
};

/// Values r_m(0..N, A) for one configuration.
struct RepTable {
  Configuration config;
  PowerSeries values;

  std::size_t order() const noexcept { return values.order(); }
  Integer operator[](std::size_t n) const { return values[n]; }
};

}  // namespace repcount

#endif  // REPCOUNT_POWER_SERIES_HPP
