#include <cmath>

#include "doctest.h"
#include "repcount/circle_moments.hpp"
#include "repcount/sequences.hpp"
#include "repcount/series.hpp"

using namespace repcount;

TEST_CASE("hM_series") {
  CHECK(hM_series(1, 3) == PowerSeries::unit(3));
  CHECK(hM_series(3, 4) == PowerSeries(std::vector<std::int64_t>{1, 1, 1, 0, 0}));
  CHECK(hM_series(10, 2) == PowerSeries(std::vector<std::int64_t>{1, 1, 1}));
  CHECK_THROWS_AS(hM_series(0, 3), std::invalid_argument);
  for (double r2 : {0.1, 0.5, 0.9, 0.999})
    for (std::size_t m : {1, 4, 16})
      CHECK(evaluate(hM_series(m, 64), r2) >= m * std::pow(r2, static_cast<double>(m)));
}

TEST_CASE("radius schedule and required order") {
  CHECK(schedule_r2(16, 0.05) == doctest::Approx(1.0 - std::pow(16.0, -2.4)));
  CHECK(required_order(0.0) == 1);
  const double r2 = schedule_r2(16, 0.05);
  const auto n = required_order(r2);
  CHECK(std::pow(r2, static_cast<double>(n)) < 1e-12);
  CHECK(std::pow(r2, static_cast<double>(n - 1)) >= 1e-12);
  CHECK_THROWS_AS(required_order(1.0), std::invalid_argument);
}

TEST_CASE("naturals with s = 2 satisfy the chain") {
  const CircleMomentOptions opts{16, 0.05, std::nullopt};
  const std::size_t order = std::max<std::size_t>(required_order(schedule_r2(16, 0.05)), 16);
  const auto rep = circle_moments(sequences::naturals(order), parse_config("1:2"), opts, order);
  CHECK(rep.s == 2);
  CHECK(rep.k == 1);
  CHECK(rep.parseval_ok);
  CHECK(rep.kernel_ok);
  CHECK(rep.hM_ok);
  CHECK_FALSE(rep.holder_ok.has_value());
  CHECK(rep.all_ok());
  CHECK(rep.lhs_parseval >= rep.chain_linear);
  CHECK(rep.chain_linear >= rep.chain_kernel_bound);
  // F = 1/(1-z) for the reduced configuration, so sum b_n r^{2n} = F(r^2) h_M(r^2).
  CHECK(rep.chain_linear == doctest::Approx(rep.f_at_r2 * rep.hM_at_r2).epsilon(1e-9));
  CHECK(rep.f_at_r2 == doctest::Approx(1.0 / (1.0 - rep.r2)).epsilon(1e-9));
  CHECK(std::isfinite(rep.rhs_log_term));
  CHECK(std::isfinite(rep.rhs_cs_term));
  CHECK(rep.c == doctest::Approx(static_cast<double>(order) * 0.75).epsilon(0.05));
}

TEST_CASE("odd degree certifies the Hölder step") {
  const CircleMomentOptions opts{16, 0.05, std::nullopt};
  const std::size_t order = std::max<std::size_t>(required_order(schedule_r2(16, 0.05)), 16);
  const auto rep = circle_moments(sequences::naturals(order), parse_config("1:3"), opts, order);
  CHECK(rep.s == 3);
  REQUIRE(rep.holder_ok.has_value());
  CHECK(*rep.holder_ok);
  CHECK(*rep.holder_lhs >= *rep.holder_rhs);
  CHECK(*rep.quadrature_error <= kMomentSlack);
  // The mixed coefficient sum is a lower bound for the odd moment.
  CHECK(*rep.holder_lhs >= *rep.holder_lhs_lower * (1 - 1e-12));
  CHECK(rep.all_ok());
}

TEST_CASE("degenerate kernel and radius override") {
  CircleMomentOptions opts{1, 0.05, std::nullopt};
  CHECK(schedule_r2(1, 0.05) == 0.0);
  CHECK(required_order(0.0) == 1);
  const std::size_t order = 16;  // the floor circle_moments imposes
  const auto rep = circle_moments(sequences::naturals(order), parse_config("1:2"), opts, order);
  CHECK(rep.all_ok());

  opts = {8, 0.05, 0.5};
  const auto fixed = circle_moments(sequences::primes(200), parse_config("1:2,3:2"), opts, 200);
  CHECK(fixed.r2 == 0.5);
  CHECK(fixed.all_ok());

  opts.r2 = 1.0;
  CHECK_THROWS_AS(circle_moments(sequences::naturals(200), parse_config("1:2"), opts, 200),
                  std::invalid_argument);
  opts.r2 = 0.99;
  CHECK_THROWS_AS(circle_moments(sequences::naturals(200), parse_config("1:2"), opts, 200),
                  std::invalid_argument);
  opts.r2.reset();
  CHECK_THROWS_AS(circle_moments(sequences::naturals(200), parse_config("1:1"), opts, 200),
                  std::invalid_argument);
}

TEST_CASE("property: chain holds across sequences, degrees and kernels") {
  for (const char* cfg : {"1:2", "1:3", "1:2,2:4", "1:3,2:3", "1:4"})
    for (std::size_t m : {2, 8, 16})
      for (double r2 : {0.3, 0.8, 0.95}) {
        const std::size_t order = std::max<std::size_t>(required_order(r2), 16);
        const CircleMomentOptions opts{m, 0.05, r2};
        for (const auto& a : {sequences::primes(order), sequences::squares(order),
                              sequences::mian_chowla(order)}) {
          const auto rep = circle_moments(a, parse_config(cfg), opts, order);
          CHECK(rep.parseval_ok);
          CHECK(rep.kernel_ok);
          CHECK(rep.hM_ok);
          if (rep.s % 2 == 1) {
            CHECK(rep.holder_ok.value_or(false));
            CHECK(*rep.quadrature_error <= kMomentSlack);
            CHECK(*rep.holder_lhs >= *rep.holder_lhs_lower * (1 - 1e-12));
          }
        }
      }
}

TEST_CASE("odd moment quadrature against a closed form") {
  // Naturals with cfg 1:3 reduce to F = 1/(1-z); with M = 1 the odd moment is
  // mean |1 - z|^{-3} on |z| = r, which equals sum_n C(n+1/2, n)^2 r^{2n}
  // since (1-z)^{-3/2} has coefficients C(n+1/2, n).
  const double r2 = 0.6;
  const std::size_t order = std::max<std::size_t>(required_order(r2), 16);
  const auto rep = circle_moments(sequences::naturals(order), parse_config("1:3"), {1, 0.05, r2}, order);
  long double expected = 0, coeff = 1, weight = 1;
  for (std::size_t n = 0; n < 4000; ++n) {
    expected += coeff * coeff * weight;
    coeff *= (n + 1.5L) / (n + 1.0L);
    weight *= r2;
  }
  // Truncating F at N perturbs the mean by O(r^N) relative.
  CHECK(*rep.holder_lhs == doctest::Approx(static_cast<double>(expected)).epsilon(1e-5));
}
