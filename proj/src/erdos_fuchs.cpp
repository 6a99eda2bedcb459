#include "repcount/erdos_fuchs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace repcount {
namespace {

using i128 = __int128;

// Calls fn(n, C(n)) for n = 0..N with C(n) = sum_{j=1}^{n} r(j).
template <typename Fn>
void for_each_cumulative(const RepTable& table, Fn&& fn) {
  const std::size_t order = table.order();
  if (table.values.is_compact() && order < (std::size_t(1) << 60)) {
    // |C(n)| <= N * 2^63 fits in 128 bits.
    const auto r = table.values.compact();
    i128 acc = 0;
    fn(std::size_t(0), acc);
    for (std::size_t n = 1; n <= order; ++n) {
      acc += r[n];
      fn(n, acc);
    }
  } else {
    const auto r = table.values.coefficients();
    Integer acc(0);
    fn(std::size_t(0), acc);
    for (std::size_t n = 1; n <= order; ++n) {
      acc += r[n];
      fn(n, acc);
    }
  }
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  const auto mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                       : static_cast<unsigned __int128>(v);
  Integer out(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  return neg ? Integer(-out) : out;
}
const Integer& to_integer(const Integer& v) { return v; }

long double to_long_double(i128 v) { return static_cast<long double>(v); }
long double to_long_double(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<long double>(v.get_si());
  // Keep the top 64 bits, the full long double mantissa.
  const auto bits = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
  Integer top = abs(v) >> static_cast<mp_bitcnt_t>(bits - 64);
  const long double mag = std::ldexp(static_cast<long double>(top.get_ui()), static_cast<int>(bits - 64));
  return sgn(v) < 0 ? -mag : mag;
}

}  // namespace

PartialSumSeries PartialSumSeries::exact(Rational c, std::vector<Integer> numerators) {
  return PartialSumSeries(ExactData{std::move(c), std::move(numerators)});
}

PartialSumSeries PartialSumSeries::floating(double c, std::vector<double> values) {
  return PartialSumSeries(FloatData{c, std::move(values)});
}

std::size_t PartialSumSeries::last() const noexcept {
  if (const auto* e = std::get_if<ExactData>(&data_)) return e->numerators.size() - 1;
  return std::get<FloatData>(data_).values.size() - 1;
}

double PartialSumSeries::c() const {
  if (const auto* e = std::get_if<ExactData>(&data_)) return e->c.get_d();
  return std::get<FloatData>(data_).c;
}

const Rational& PartialSumSeries::exact_c() const { return std::get<ExactData>(data_).c; }

double PartialSumSeries::operator[](std::size_t n) const {
  if (const auto* e = std::get_if<ExactData>(&data_))
    return Rational(e->numerators.at(n), e->c.get_den()).get_d();
  return std::get<FloatData>(data_).values.at(n);
}

Rational PartialSumSeries::exact_value(std::size_t n) const {
  const auto& e = std::get<ExactData>(data_);
  Rational v(e.numerators.at(n), e.c.get_den());
  v.canonicalize();
  return v;
}

PartialSumSeries partial_sums(const RepTable& table, const Rational& c) {
  if (sgn(c) <= 0) throw std::invalid_argument("partial sums need a positive constant c");
  Rational cc(c);
  cc.canonicalize();
  const Integer& num = cc.get_num();
  const Integer& den = cc.get_den();
  std::vector<Integer> numerators(table.order() + 1);
  for_each_cumulative(table, [&](std::size_t n, const auto& cumulative) {
    // a_n * den = den * C(n) - n * num
    Integer v = den * to_integer(cumulative);
    v -= num * static_cast<unsigned long>(n);
    numerators[n] = std::move(v);
  });
  return PartialSumSeries::exact(std::move(cc), std::move(numerators));
}

PartialSumSeries partial_sums(const RepTable& table, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("partial sums need a positive constant c");
  std::vector<double> values(table.order() + 1);
  const long double lc = c;
  for_each_cumulative(table, [&](std::size_t n, const auto& cumulative) {
    values[n] = static_cast<double>(to_long_double(cumulative) - static_cast<long double>(n) * lc);
  });
  return PartialSumSeries::floating(c, std::move(values));
}

double estimate_c(const RepTable& table) {
  const std::size_t order = table.order();
  if (order < 16) throw std::invalid_argument("estimate_c needs a table of order >= 16");
  if (table.values.is_zero()) throw std::invalid_argument("estimate_c: table is identically zero");

  // Regress y = sum_{j<=n} r(j) (including j = 0) on x = n for n in [N/2, N].
  const std::size_t lo = order / 2;
  const Integer r0 = table[0];

  // 128-bit accumulation with overflow detection, GMP as the fallback.
  bool overflow = !mpz_fits_slong_p(r0.get_mpz_t());
  i128 sx = 0, sxx = 0, sy = 0, sxy = 0;
  const i128 r0_small = overflow ? 0 : r0.get_si();
  if (!overflow && table.values.is_compact()) {
    for_each_cumulative(table, [&](std::size_t n, const auto& cumulative) {
      if (n < lo || overflow) return;
      if constexpr (std::is_same_v<std::decay_t<decltype(cumulative)>, i128>) {
        const i128 x = static_cast<i128>(n);
        i128 y, xy;
        overflow = __builtin_add_overflow(cumulative, r0_small, &y) ||
                   __builtin_mul_overflow(x, y, &xy) || __builtin_add_overflow(sy, y, &sy) ||
                   __builtin_add_overflow(sxy, xy, &sxy);
        sx += x;
        sxx += x * x;
      } else {
        overflow = true;
      }
    });
  } else {
    overflow = true;
  }

  const Integer count(static_cast<unsigned long>(order - lo + 1));
  Integer num, den;
  if (!overflow) {
    const Integer isx = to_integer(sx), isxx = to_integer(sxx);
    num = count * to_integer(sxy) - isx * to_integer(sy);
    den = count * isxx - isx * isx;
  } else {
    Integer gsx(0), gsxx(0), gsy(0), gsxy(0), y;
    for_each_cumulative(table, [&](std::size_t n, const auto& cumulative) {
      if (n < lo) return;
      y = to_integer(cumulative);
      y += r0;
      gsx += static_cast<unsigned long>(n);
      mpz_addmul_ui(gsxx.get_mpz_t(), Integer(static_cast<unsigned long>(n)).get_mpz_t(), n);
      gsy += y;
      mpz_addmul_ui(gsxy.get_mpz_t(), y.get_mpz_t(), n);
    });
    num = count * gsxy - gsx * gsy;
    den = count * gsxx - gsx * gsx;
  }
  return Rational(num, den).get_d();
}

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::NonDecreasing: return "non-decreasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

DyadicReport ef_dyadic_report(const PartialSumSeries& a, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.25))
    throw std::invalid_argument("epsilon must lie in (0, 1/4)");
  const std::size_t order = a.last();
  if (order < 8) throw std::invalid_argument("dyadic report needs partial sums up to n >= 8");

  DyadicReport report{epsilon, {}, Trend::NotApplicable};
  const double exponent = 0.25 - epsilon;
  for (std::size_t k = 0;; ++k) {
    const std::size_t lo = std::size_t(1) << k;
    const std::size_t hi = 2 * lo - 1;
    if (hi > order) break;
    double max_abs = 0.0;
    for (std::size_t n = lo; n <= hi; ++n) max_abs = std::max(max_abs, std::abs(a[n]));
    const double ratio = max_abs / std::pow(2.0, static_cast<double>(k) * exponent);
    report.blocks.push_back({k, lo, hi, max_abs, ratio});
  }

  const auto& b = report.blocks;
  const std::size_t m = b.size();
  if (m >= 3) {
    const bool all_zero = b[m - 1].max_abs == 0 && b[m - 2].max_abs == 0 && b[m - 3].max_abs == 0;
    if (!all_zero) {
      const bool rising = b[m - 3].ratio <= b[m - 2].ratio && b[m - 2].ratio <= b[m - 1].ratio;
      report.trend = rising ? Trend::NonDecreasing : Trend::Decreasing;
    }
  }
  return report;
}

}  // namespace repcount
