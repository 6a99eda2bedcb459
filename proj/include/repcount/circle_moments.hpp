#ifndef REPCOUNT_CIRCLE_MOMENTS_HPP
#define REPCOUNT_CIRCLE_MOMENTS_HPP

#include <cstdint>
#include <optional>

#include "repcount/configuration.hpp"
#include "repcount/integer_sequence.hpp"
#include "repcount/power_series.hpp"

namespace repcount {

/// h_M(z) = 1 + z + ... + z^{M-1}, truncated at N. Requires M >= 1.
PowerSeries hM_series(std::size_t m, std::size_t order);

/// Default radius schedule r^2 = 1 - M^{-(2 + 8 eps)}.
double schedule_r2(std::size_t m, double epsilon);

/// Smallest N >= 1 with (r^2)^N < 1e-12, the order past which the series
/// tails are treated as negligible.
std::size_t required_order(double r2);

/// Relative slack applied to every floating inequality below.
inline constexpr double kMomentSlack = 1e-9;

/// larger >= smaller up to kMomentSlack relative to the bigger magnitude.
bool holds_with_slack(double larger, double smaller);

struct CircleMomentOptions {
  std::size_t m = 16;
  double epsilon = 0.05;
  std::optional<double> r2;  // overrides schedule_r2(m, epsilon)
};

/// Circle means on |z| = r reduced to coefficient sums by Parseval.
///
/// With F the representation series of the reduced configuration and
/// s = 2k or 2k+1, b_n are the coefficients of F^k h_M. The chain checked is
///   sum b_n^2 r^{2n} >= sum b_n r^{2n} >= F(r^2)^k M r^{2M}
/// (b_n are nonnegative integers, so b_n^2 >= b_n; h_M(r^2) >= M r^{2M}).
/// For odd s the Hölder step
///   mean |F|^{2k+1}|h_M|^2 >= (mean |F|^{2k}|h_M|^2)^{(2k+1)/2k} / (mean |h_M|^2)^{1/2k}
/// is checked against the odd moment itself. An odd power of |F| has no
/// coefficient-sum form, so that one mean is taken by the trapezoid rule on
/// L equally spaced points of the circle, L a power of two starting at
/// 2(kN + M) and doubled (up to 2^27) until the L/2 and L estimates agree to
/// 1e-13. |F^k h_M|^2 is a trigonometric polynomial of degree < L, so the
/// same rule reproduces its exact Parseval sum up to rounding. quadrature_error
/// is the larger of that control gap and the last L/2-to-L change; holder_ok
/// also requires it to be <= kMomentSlack.
/// The right-hand-side terms are reported, not checked.
struct CircleMomentReport {
  std::size_t m;
  double r2;
  double radius;
  double epsilon;
  std::uint64_t s;
  std::uint64_t k;
  std::size_t order;
  double c;  // estimate_c of the full table

  double lhs_parseval;        // sum b_n^2 r^{2n}
  double chain_linear;        // sum b_n r^{2n}
  double chain_kernel_bound;  // F(r^2)^k M r^{2M}
  double f_at_r2;             // F(r^2)
  double hM_at_r2;            // h_M(r^2) = mean |h_M|^2
  double hM_lower;            // M r^{2M}

  double rhs_log_term;  // 2 c M^2 log(1 / (1 - r^2))
  double rhs_cs_term;   // M^{1/2} (sum a_n^2 r^{2n})^{1/2}

  std::optional<double> holder_lhs;        // mean |F|^{2k+1}|h_M|^2 by quadrature
  std::optional<double> holder_lhs_lower;  // |sum b_n c_n r^{2n}|, c = F^{k+1} h_M
  std::optional<double> holder_rhs;
  std::optional<bool> holder_ok;           // holder_lhs >= holder_rhs
  std::optional<std::size_t> quadrature_points;
  std::optional<double> quadrature_error;  // relative, see above

  bool parseval_ok;  // lhs_parseval >= chain_linear
  bool kernel_ok;    // chain_linear >= chain_kernel_bound
  bool hM_ok;        // hM_at_r2 >= hM_lower

  bool all_ok() const { return parseval_ok && kernel_ok && hM_ok && holder_ok.value_or(true); }
};

/// Requires degree(cfg) >= 2, 0 <= r^2 < 1, order >= 16 and
/// order >= required_order(r^2); throws std::invalid_argument otherwise.
CircleMomentReport circle_moments(const IntegerSequence& a, const Configuration& cfg,
                                  const CircleMomentOptions& options, std::size_t order);

}  // namespace repcount

#endif  // REPCOUNT_CIRCLE_MOMENTS_HPP
