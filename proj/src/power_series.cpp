#include "repcount/power_series.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace repcount {
namespace {

std::size_t bit_length(std::int64_t v) {
  const auto mag = v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
                         : static_cast<std::uint64_t>(v);
  return static_cast<std::size_t>(std::bit_width(mag));
}

std::size_t bit_length(const Integer& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

PowerSeries::PowerSeries() : data_(std::vector<std::int64_t>(1, 0)) {}

PowerSeries::PowerSeries(std::vector<std::int64_t> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("power series needs at least one coefficient");
  data_ = std::move(coeffs);
}

PowerSeries::PowerSeries(std::vector<Integer> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("power series needs at least one coefficient");
  const bool fits = std::all_of(coeffs.begin(), coeffs.end(),
                                [](const Integer& c) { return mpz_fits_slong_p(c.get_mpz_t()); });
  if (fits) {
    std::vector<std::int64_t> small(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) small[i] = coeffs[i].get_si();
    data_ = std::move(small);
  } else {
    data_ = std::move(coeffs);
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<std::int64_t>(order + 1, 0));
}

PowerSeries PowerSeries::unit(std::size_t order) {
  std::vector<std::int64_t> c(order + 1, 0);
  c[0] = 1;
  return PowerSeries(std::move(c));
}

std::size_t PowerSeries::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, data_);
}

Integer PowerSeries::operator[](std::size_t n) const {
  if (n >= size()) throw std::out_of_range("coefficient index beyond series order");
  if (is_compact()) return Integer(static_cast<long>(std::get<0>(data_)[n]));
  return std::get<1>(data_)[n];
}

double PowerSeries::as_double(std::size_t n) const {
  if (is_compact()) return static_cast<double>(std::get<0>(data_)[n]);
  return std::get<1>(data_)[n].get_d();
}

std::span<const std::int64_t> PowerSeries::compact() const { return std::get<0>(data_); }

std::span<const Integer> PowerSeries::wide() const { return std::get<1>(data_); }

std::vector<Integer> PowerSeries::coefficients() const {
  if (!is_compact()) return std::get<1>(data_);
  const auto& v = std::get<0>(data_);
  std::vector<Integer> out;
  out.reserve(v.size());
  for (auto c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

std::size_t PowerSeries::max_bits() const {
  std::size_t bits = 0;
  std::visit(
      [&](const auto& v) {
        for (const auto& c : v) bits = std::max(bits, bit_length(c));
      },
      data_);
  return bits;
}

bool PowerSeries::nonnegative() const {
  return std::visit(
      [](const auto& v) {
        return std::all_of(v.begin(), v.end(), [](const auto& c) { return c >= 0; });
      },
      data_);
}

bool PowerSeries::is_zero() const {
  return std::visit(
      [](const auto& v) {
        return std::all_of(v.begin(), v.end(), [](const auto& c) { return c == 0; });
      },
      data_);
}

PowerSeries PowerSeries::resized(std::size_t order) const {
  if (is_compact()) {
    std::vector<std::int64_t> v(std::get<0>(data_));
    v.resize(order + 1, 0);
    return PowerSeries(std::move(v));
  }
  std::vector<Integer> v(std::get<1>(data_));
  v.resize(order + 1, Integer(0));
  return PowerSeries(std::move(v));
}

}  // namespace repcount
