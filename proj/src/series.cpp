#include "repcount/series.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "series_detail.hpp"

namespace repcount {
namespace {

using detail::i128;

// Below this many nonzero terms in the shorter factor the schoolbook
// product beats the transform.
constexpr std::size_t kSchoolbookCutoff = 48;

}  // namespace

PowerSeries seq_series(const IntegerSequence& a, std::size_t order) {
  if (a.limit() < static_cast<std::int64_t>(order))
    throw std::invalid_argument("sequence materialized to " + std::to_string(a.limit()) +
                                ", below series order " + std::to_string(order));
  std::vector<std::int64_t> c(order + 1, 0);
  for (auto x : a.up_to(static_cast<std::int64_t>(order))) c[static_cast<std::size_t>(x)] = 1;
  return PowerSeries(std::move(c));
}

PowerSeries substitute_power(const PowerSeries& f, std::uint64_t k, std::size_t order) {
  if (k == 0) throw std::invalid_argument("substitution exponent must be positive");
  if (f.order() < order / k)
    throw std::invalid_argument("series of order " + std::to_string(f.order()) +
                                " is too short to substitute z^" + std::to_string(k) +
                                " up to order " + std::to_string(order));
  const std::size_t count = order / k + 1;
  if (f.is_compact()) {
    std::vector<std::int64_t> c(order + 1, 0);
    const auto src = f.compact();
    for (std::size_t n = 0; n < count; ++n) c[n * k] = src[n];
    return PowerSeries(std::move(c));
  }
  std::vector<Integer> c(order + 1);
  const auto src = f.wide();
  for (std::size_t n = 0; n < count; ++n) c[n * k] = src[n];
  return PowerSeries(std::move(c));
}

PowerSeries multiply_schoolbook(const PowerSeries& f, const PowerSeries& g, std::size_t order) {
  const std::size_t len_f = detail::effective_size(f, order + 1);
  const std::size_t len_g = detail::effective_size(g, order + 1);
  if (len_f == 0 || len_g == 0) return PowerSeries::zero(order);

  const std::size_t bound_bits = static_cast<std::size_t>(std::bit_width(std::min(len_f, len_g))) +
                                 f.max_bits() + g.max_bits();

  if (f.is_compact() && g.is_compact() && bound_bits <= 126) {
    const auto a = f.compact();
    const auto b = g.compact();
    std::vector<i128> acc(order + 1, 0);
    for (std::size_t i = 0; i < len_f; ++i) {
      const i128 x = a[i];
      if (x == 0) continue;
      const std::size_t j_end = std::min(len_g, order - i + 1);
      i128* out = acc.data() + i;
      for (std::size_t j = 0; j < j_end; ++j) out[j] += x * b[j];
    }
    detail::SeriesBuilder builder(order + 1);
    for (auto v : acc) builder.push(v);
    return builder.finish();
  }

  const auto a = f.coefficients();
  const auto b = g.coefficients();
  std::vector<Integer> acc(order + 1);
  for (std::size_t i = 0; i < len_f; ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t j_end = std::min(len_g, order - i + 1);
    for (std::size_t j = 0; j < j_end; ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return PowerSeries(std::move(acc));
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, std::size_t order) {
  const std::size_t len_f = detail::effective_size(f, order + 1);
  const std::size_t len_g = &f == &g ? len_f : detail::effective_size(g, order + 1);
  if (std::min(len_f, len_g) <= kSchoolbookCutoff) return multiply_schoolbook(f, g, order);
  return multiply_ntt(f, g, order);
}

PowerSeries power(const PowerSeries& f, std::uint64_t m, std::size_t order) {
  PowerSeries result = PowerSeries::unit(order);
  if (m == 0) return result;
  PowerSeries base = f.resized(order);
  bool first = true;
  while (true) {
    if (m & 1) {
      result = first ? base : multiply(result, base, order);
      first = false;
    }
    m >>= 1;
    if (m == 0) break;
    base = multiply(base, base, order);
  }
  return result;
}

RepTable rep_series(const IntegerSequence& a, const Configuration& cfg, std::size_t order) {
  const PowerSeries indicator = seq_series(a, order);

  struct Factor {
    std::size_t bits;
    std::size_t index;
    PowerSeries series;
  };
  std::vector<Factor> factors;
  std::size_t next_index = 0;
  for (const auto& t : cfg.terms()) {
    auto s = power(substitute_power(indicator, t.k, order), t.m, order);
    const auto bits = s.max_bits();
    factors.push_back({bits, next_index++, std::move(s)});
  }

  // Pairwise products, always combining the two smallest factors.
  const auto larger = [](const Factor& x, const Factor& y) {
    return x.bits != y.bits ? x.bits > y.bits : x.index > y.index;
  };
  while (factors.size() > 1) {
    std::sort(factors.begin(), factors.end(), larger);
    Factor x = std::move(factors.back());
    factors.pop_back();
    Factor y = std::move(factors.back());
    factors.pop_back();
    auto s = multiply(x.series, y.series, order);
    const auto bits = s.max_bits();
    factors.push_back({bits, next_index++, std::move(s)});
  }
  return RepTable{cfg, std::move(factors.front().series)};
}

double evaluate(const PowerSeries& f, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("evaluation point must lie in [0, 1)");
  double result = 0.0;
  for (std::size_t n = f.size(); n-- > 0;) result = result * x + f.as_double(n);
  return result;
}

}  // namespace repcount
