#include "repcount/circle_moments.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "repcount/erdos_fuchs.hpp"
#include "repcount/series.hpp"

namespace repcount {

namespace {

constexpr double kQuadratureTarget = 1e-13;
constexpr std::size_t kMaxQuadraturePoints = std::size_t{1} << 27;

// The FFTW planner is not reentrant; execution is.
std::mutex planner_mutex;

struct FftwFree {
  void operator()(double* p) const { fftw_free(p); }
};

struct CircleMeans {
  double even;       // mean |F|^{2k} |h_M|^2
  double odd;        // mean |F|^{2k+1} |h_M|^2
  double odd_half;   // odd moment from every second point
  std::size_t points;
};

// 1 - rho e^{i phi} without cancellation near phi = 0, given 1 - rho.
std::complex<double> one_minus(double rho, double one_minus_rho, double phi) {
  const double s = std::sin(0.5 * phi);
  return {one_minus_rho + 2.0 * rho * s * s, -rho * std::sin(phi)};
}

// Trapezoid means over |z| = r at L points. F(r w^j) for all j comes from a
// real-to-complex FFT of f_n r^n; h_M(z) = (1 - z^M) / (1 - z) in closed form.
CircleMeans circle_means(const PowerSeries& f, std::size_t m, double r2, std::uint64_t k,
                         std::size_t points) {
  const std::size_t l = points;
  std::unique_ptr<double, FftwFree> buf(fftw_alloc_real(2 * (l / 2 + 1)));
  if (!buf) throw std::bad_alloc();
  double* x = buf.get();
  auto* spectrum = reinterpret_cast<fftw_complex*>(x);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(l), x, spectrum, FFTW_ESTIMATE);
  }

  const double r = std::sqrt(r2);
  std::fill(x, x + 2 * (l / 2 + 1), 0.0);
  double weight = 1.0;
  for (std::size_t n = 0; n < f.size() && weight != 0.0; ++n) {
    x[n % l] += f.as_double(n) * weight;
    weight *= r;
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(plan);
  }

  // log r and 1 - r, 1 - r^M accurate for r near 1.
  const double log_r = r2 > 0.0 ? 0.5 * std::log1p(r2 - 1.0) : -INFINITY;
  const double one_minus_r = -std::expm1(log_r);
  const double r_m = std::exp(static_cast<double>(m) * log_r);
  const double one_minus_r_m = -std::expm1(static_cast<double>(m) * log_r);
  const double two_pi = 2.0 * M_PI;

  long double even = 0, odd = 0, odd_half = 0;
  for (std::size_t j = 0; j <= l / 2; ++j) {
    // The spectrum holds F at conj(z_j); |F| and |h_M| are symmetric.
    const std::complex<double> fz(spectrum[j][0], spectrum[j][1]);
    double h2;
    if (r2 == 0.0) {
      h2 = 1.0;
    } else {
      const double theta = two_pi * static_cast<double>(j) / static_cast<double>(l);
      const double phi = two_pi * static_cast<double>((m * j) % l) / static_cast<double>(l);
      h2 = std::norm(one_minus(r_m, one_minus_r_m, phi)) / std::norm(one_minus(r, one_minus_r, theta));
    }
    const double abs_f = std::abs(fz);
    const double f2k = std::pow(abs_f, 2.0 * static_cast<double>(k));
    const long double mult = (j == 0 || j == l / 2) ? 1.0L : 2.0L;
    even += mult * f2k * h2;
    odd += mult * f2k * abs_f * h2;
    if (j % 2 == 0) odd_half += mult * f2k * abs_f * h2;
  }
  const auto ld = static_cast<long double>(l);
  return {static_cast<double>(even / ld), static_cast<double>(odd / ld),
          static_cast<double>(odd_half / (ld / 2)), l};
}

}  // namespace

PowerSeries hM_series(std::size_t m, std::size_t order) {
  if (m == 0) throw std::invalid_argument("kernel length M must be positive");
  std::vector<std::int64_t> c(order + 1, 0);
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(m, order + 1)), 1);
  return PowerSeries(std::move(c));
}

double schedule_r2(std::size_t m, double epsilon) {
  return 1.0 - std::pow(static_cast<double>(m), -(2.0 + 8.0 * epsilon));
}

std::size_t required_order(double r2) {
  if (!(r2 >= 0.0 && r2 < 1.0)) throw std::invalid_argument("r^2 must lie in [0, 1)");
  if (r2 == 0.0) return 1;
  // r2^N < 1e-12  <=>  N > log(1e-12) / log(r2)
  const double bound = std::log(1e-12) / std::log(r2);
  auto n = static_cast<std::size_t>(std::floor(bound)) + 1;
  while (std::pow(r2, static_cast<double>(n)) >= 1e-12) ++n;
  return n;
}

bool holds_with_slack(double larger, double smaller) {
  const double scale = std::max(std::abs(larger), std::abs(smaller));
  return larger >= smaller - kMomentSlack * scale;
}

CircleMomentReport circle_moments(const IntegerSequence& a, const Configuration& cfg,
                                  const CircleMomentOptions& options, std::size_t order) {
  const auto s = degree(cfg);
  if (s < 2)
    throw std::invalid_argument("circle moments need configuration degree >= 2, got " +
                                std::to_string(s));
  if (options.m == 0) throw std::invalid_argument("kernel length M must be positive");
  if (!(options.epsilon > 0.0 && options.epsilon < 0.25))
    throw std::invalid_argument("epsilon must lie in (0, 1/4)");
  const double r2 = options.r2.value_or(schedule_r2(options.m, options.epsilon));
  if (!(r2 >= 0.0 && r2 < 1.0)) throw std::invalid_argument("r^2 must lie in [0, 1)");
  const std::size_t needed = std::max<std::size_t>(required_order(r2), 16);
  if (order < needed)
    throw std::invalid_argument("order " + std::to_string(order) + " too small: r^2 = " +
                                std::to_string(r2) + " needs order >= " + std::to_string(needed));

  CircleMomentReport rep{};
  rep.m = options.m;
  rep.r2 = r2;
  rep.radius = std::sqrt(r2);
  rep.epsilon = options.epsilon;
  rep.s = s;
  rep.k = s / 2;
  rep.order = order;

  const PowerSeries f = rep_series(a, reduced(cfg), order).values;
  const PowerSeries h = hM_series(options.m, order);
  const PowerSeries b = multiply(power(f, rep.k, order), h, order);

  long double sum_sq = 0, sum_lin = 0, weight = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    const long double bn = b.as_double(n);
    sum_sq += bn * bn * weight;
    sum_lin += bn * weight;
    weight *= r2;
  }
  rep.lhs_parseval = static_cast<double>(sum_sq);
  rep.chain_linear = static_cast<double>(sum_lin);
  rep.f_at_r2 = evaluate(f, r2);
  rep.hM_at_r2 = evaluate(h, r2);
  const double r_2m = std::pow(r2, static_cast<double>(options.m));
  rep.hM_lower = static_cast<double>(options.m) * r_2m;
  rep.chain_kernel_bound = std::pow(rep.f_at_r2, static_cast<double>(rep.k)) * rep.hM_lower;

  rep.parseval_ok = holds_with_slack(rep.lhs_parseval, rep.chain_linear);
  rep.kernel_ok = holds_with_slack(rep.chain_linear, rep.chain_kernel_bound);
  rep.hM_ok = holds_with_slack(rep.hM_at_r2, rep.hM_lower);

  if (s % 2 == 1) {
    const PowerSeries c = multiply(f, b, order);
    long double mixed = 0;
    weight = 1;
    for (std::size_t n = 0; n <= order; ++n) {
      mixed += static_cast<long double>(b.as_double(n)) * c.as_double(n) * weight;
      weight *= r2;
    }
    // Parseval control against F^k h_M untruncated, the polynomial the
    // quadrature actually sees.
    const std::size_t top = rep.k * order + options.m - 1;
    const PowerSeries g = multiply(power(f.resized(top), rep.k, top), hM_series(options.m, top), top);
    long double even_exact = 0;
    weight = 1;
    for (std::size_t n = 0; n <= top && weight != 0; ++n) {
      const long double gn = g.as_double(n);
      even_exact += gn * gn * weight;
      weight *= r2;
    }

    // Double L until the odd moment stops moving.
    std::size_t points = std::bit_ceil(2 * (top + 1));
    CircleMeans means = circle_means(f, options.m, r2, rep.k, points);
    auto odd_gap = [&] {
      return means.odd > 0 ? std::abs(means.odd - means.odd_half) / means.odd : 0.0;
    };
    while (odd_gap() > kQuadratureTarget && points < kMaxQuadraturePoints) {
      points *= 2;
      means = circle_means(f, options.m, r2, rep.k, points);
    }
    const double even_gap =
        std::abs(means.even - static_cast<double>(even_exact)) / static_cast<double>(even_exact);

    const double two_k = 2.0 * static_cast<double>(rep.k);
    const double rhs = std::pow(rep.lhs_parseval, (two_k + 1.0) / two_k) /
                       std::pow(rep.hM_at_r2, 1.0 / two_k);
    rep.holder_lhs = means.odd;
    rep.holder_lhs_lower = std::abs(static_cast<double>(mixed));
    rep.holder_rhs = rhs;
    rep.quadrature_points = means.points;
    rep.quadrature_error = std::max(even_gap, odd_gap());
    rep.holder_ok = *rep.quadrature_error <= kMomentSlack && holds_with_slack(means.odd, rhs);
  }

  const RepTable full{cfg, power(f, s, order)};
  rep.c = estimate_c(full);
  const auto partial = partial_sums(full, rep.c);
  long double sum_a2 = 0;
  weight = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    const long double an = partial[n];
    sum_a2 += an * an * weight;
    weight *= r2;
  }
  const double mm = static_cast<double>(options.m);
  rep.rhs_log_term = 2.0 * rep.c * mm * mm * std::log(1.0 / (1.0 - r2));
  rep.rhs_cs_term = std::sqrt(mm) * std::sqrt(static_cast<double>(sum_a2));
  return rep;
}

}  // namespace repcount
