#ifndef REPCOUNT_ERDOS_FUCHS_HPP
#define REPCOUNT_ERDOS_FUCHS_HPP

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "repcount/power_series.hpp"

namespace repcount {

using Rational = mpq_class;

/// a_n = sum_{j=1}^{n} (r(j) - c) for n = 0..N (a_0 = 0, the empty sum).
///
/// Exact when c is rational: values are kept as integer numerators over
/// c's denominator, so a_n - a_{n-1} = r(n) - c holds exactly. Floating
/// otherwise: cumulative sums stay exact and only the n*c term rounds.
class PartialSumSeries {
 public:
  static PartialSumSeries exact(Rational c, std::vector<Integer> numerators);
  static PartialSumSeries floating(double c, std::vector<double> values);

  bool is_exact() const noexcept { return std::holds_alternative<ExactData>(data_); }
  /// Largest index N.
  std::size_t last() const noexcept;
  double c() const;
  /// Precondition: is_exact().
  const Rational& exact_c() const;

  double operator[](std::size_t n) const;
  /// Precondition: is_exact().
  Rational exact_value(std::size_t n) const;

 private:
  struct ExactData {
    Rational c;
    std::vector<Integer> numerators;  // a_n * denominator(c)
  };
  struct FloatData {
    double c;
    std::vector<double> values;
  };
  explicit PartialSumSeries(std::variant<ExactData, FloatData> data) : data_(std::move(data)) {}
  std::variant<ExactData, FloatData> data_;
};

/// Throws std::invalid_argument unless c > 0.
PartialSumSeries partial_sums(const RepTable& table, const Rational& c);
PartialSumSeries partial_sums(const RepTable& table, double c);

/// Least-squares slope of C(n) = sum_{j<=n} r(j) against n over the upper
/// half n in [N/2, N], computed exactly and rounded once. Requires
/// order >= 16 and a table that is not identically zero.
double estimate_c(const RepTable& table);

struct DyadicBlock {
  std::size_t k;
  std::size_t lo;       // 2^k
  std::size_t hi;       // 2^{k+1} - 1
  double max_abs;       // S_k = max_{n in block} |a_n|
  double ratio;         // S_k / 2^{k(1/4 - eps)}
};

enum class Trend {
  NonDecreasing,     // ratio non-decreasing over the last 3 blocks
  Decreasing,        // some ratio drop among the last 3 blocks
  NotApplicable,     // last 3 blocks all zero
};
std::string_view to_string(Trend t);

/// Fluctuation of a_n over complete dyadic blocks [2^k, 2^{k+1}) <= N.
/// The trend over the final three blocks is a finite-range proxy for the
/// growth statement, not a proof of it.
struct DyadicReport {
  double epsilon;
  std::vector<DyadicBlock> blocks;
  Trend trend;
};

/// Requires N >= 8 and 0 < epsilon < 1/4.
DyadicReport ef_dyadic_report(const PartialSumSeries& a, double epsilon);

}  // namespace repcount

#endif  // REPCOUNT_ERDOS_FUCHS_HPP
