#include "repcount/polynomial_tail.hpp"

#include <stdexcept>
#include <string>

#include "repcount/series.hpp"

namespace repcount {
namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Coefficients of (1 - z)^e.
std::vector<Integer> one_minus_z_power(std::size_t e) {
  std::vector<Integer> c(e + 1);
  for (std::size_t j = 0; j <= e; ++j) c[j] = (j % 2 ? -1 : 1) * binomial(e, j);
  return c;
}

template <typename A, typename B>
std::vector<Rational> poly_mul(const std::vector<A>& a, const std::vector<B>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += Rational(a[i]) * Rational(b[j]);
  return out;
}

}  // namespace

std::vector<Integer> finite_differences(std::span<const Integer> values, std::size_t order) {
  if (values.empty() || order >= values.size())
    throw std::invalid_argument("difference order " + std::to_string(order) +
                                " needs more than " + std::to_string(values.size()) + " values");
  std::vector<Integer> d(values.begin(), values.end());
  for (std::size_t t = 0; t < order; ++t) {
    for (std::size_t n = 0; n + 1 < d.size(); ++n) d[n] = d[n + 1] - d[n];
    d.pop_back();
  }
  return d;
}

std::vector<Integer> finite_differences(const RepTable& table, std::size_t order) {
  const auto values = table.values.coefficients();
  return finite_differences(values, order);
}

PolynomialSpec::PolynomialSpec(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  if (coefficients_.empty()) throw std::invalid_argument("polynomial needs a coefficient");
  if (coefficients_.size() > 1 && sgn(coefficients_.back()) == 0)
    throw std::invalid_argument("leading coefficient of a degree " +
                                std::to_string(coefficients_.size() - 1) +
                                " polynomial is zero (degree overstated)");
}

bool PolynomialSpec::is_zero() const {
  return coefficients_.size() == 1 && sgn(coefficients_[0]) == 0;
}

Rational PolynomialSpec::operator()(const Rational& n) const {
  return evaluate_polynomial(coefficients_, n);
}

Rational evaluate_polynomial(std::span<const Rational> coefficients, const Rational& z) {
  Rational acc(0);
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * z + coefficients[i];
  return acc;
}

namespace {

struct WindowScan {
  std::optional<PolyTailFit> fit;
  std::vector<DifferenceWitness> witnesses;
};

WindowScan scan_window(const RepTable& table, std::size_t max_degree, std::size_t window_start) {
  const std::size_t order = table.order();
  if (window_start + max_degree + 1 > order)
    throw std::invalid_argument("window [" + std::to_string(window_start) + ", " +
                                std::to_string(order) + "] has fewer than " +
                                std::to_string(max_degree + 2) + " points");

  const auto all = table.values.coefficients();
  std::vector<Integer> diff(all.begin() + static_cast<std::ptrdiff_t>(window_start), all.end());
  std::vector<Integer> newton{diff.front()};  // Delta^j r(W)

  WindowScan scan;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (std::size_t n = 0; n + 1 < diff.size(); ++n) diff[n] = diff[n + 1] - diff[n];
    diff.pop_back();
    // diff[i] = Delta^{d+1} r(W + i), i in [0, N-W-d-1]
    std::size_t nonzero = diff.size();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (sgn(diff[i]) != 0) {
        nonzero = i;
        break;
      }
    }
    if (nonzero == diff.size()) {
      // q(x) = sum_j newton[j] * C(x - W, j), expanded in monomials.
      std::vector<Rational> q(d + 1, Rational(0));
      std::vector<Rational> basis{Rational(1)};  // C(x - W, j)
      for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t i = 0; i < basis.size(); ++i) q[i] += Rational(newton[j]) * basis[i];
        // basis *= (x - W - j) / (j + 1)
        const Rational shift(-static_cast<long>(window_start + j));
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
          next[i + 1] += basis[i];
          next[i] += basis[i] * shift;
        }
        for (auto& c : next) c /= static_cast<long>(j + 1);
        basis = std::move(next);
      }
      while (q.size() > 1 && sgn(q.back()) == 0) q.pop_back();
      scan.fit = PolyTailFit{d, PolynomialSpec(std::move(q))};
      return scan;
    }
    scan.witnesses.push_back({d, window_start + nonzero, diff[nonzero]});
    newton.push_back(diff.front());
  }
  return scan;
}

}  // namespace

std::optional<PolyTailFit> poly_tail_detect(const RepTable& table, std::size_t max_degree,
                                            std::size_t window_start) {
  return scan_window(table, max_degree, window_start).fit;
}

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

TailReport tail_report(const RepTable& table, std::size_t max_degree, std::size_t window_start) {
  auto scan = scan_window(table, max_degree, window_start);
  TailReport report{degree(table.config),
                    max_degree,
                    window_start,
                    table.order(),
                    scan.fit ? Verdict::Fail : Verdict::Pass,
                    std::move(scan.fit),
                    std::move(scan.witnesses)};
  return report;
}

TailReport theorem1_check(const IntegerSequence& a, const Configuration& cfg, std::size_t order,
                          std::size_t window_start, std::optional<std::size_t> max_degree) {
  const auto s = degree(cfg);
  if (s < 2)
    throw std::invalid_argument("configuration degree is " + std::to_string(s) +
                                "; the window check needs degree >= 2");
  const auto table = rep_series(a, cfg, order);
  return tail_report(table, max_degree.value_or(s - 2), window_start);
}

std::vector<Integer> power_sum_numerator(std::size_t i) {
  // Q_0 = 1, Q_{i+1}(z) = z * ((1 - z) Q_i'(z) + (i + 1) Q_i(z)).
  std::vector<Integer> q{Integer(1)};
  for (std::size_t step = 0; step < i; ++step) {
    std::vector<Integer> inner(q.size() + 1);
    for (std::size_t j = 0; j < q.size(); ++j) {
      inner[j] += static_cast<long>(step + 1) * q[j];
      if (j > 0) {
        inner[j - 1] += static_cast<long>(j) * q[j];
        inner[j] -= static_cast<long>(j) * q[j];
      }
    }
    std::vector<Integer> next(inner.size() + 1);
    for (std::size_t j = 0; j < inner.size(); ++j) next[j + 1] = inner[j];
    while (next.size() > 1 && sgn(next.back()) == 0) next.pop_back();
    q = std::move(next);
  }
  return q;
}

RationalTailForm poly_tail_to_rational(const PolynomialSpec& q, std::int64_t cutoff,
                                       std::span<const Integer> head) {
  if (cutoff < -1) throw std::invalid_argument("cutoff must be >= -1");
  if (head.size() != static_cast<std::size_t>(cutoff + 1))
    throw std::invalid_argument("head must hold cutoff + 1 values");
  const auto coeffs = q.coefficients();
  const std::size_t d = q.degree();
  if (d > 0 && sgn(coeffs[d]) == 0)
    throw std::invalid_argument("degree overstated: leading coefficient is zero");
  if (q.is_zero()) throw std::domain_error("zero tail polynomial has no pole at z = 1");

  RationalTailForm form;
  form.pole_order = d + 1;
  for (std::size_t n = 0; n < head.size(); ++n)
    form.head.push_back(Rational(head[n]) - q(Rational(static_cast<long>(n))));

  form.numerator.assign(d + 1, Rational(0));
  for (std::size_t i = 0; i <= d; ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    const auto term = poly_mul(power_sum_numerator(i), one_minus_z_power(d - i));
    if (term.size() > form.numerator.size()) form.numerator.resize(term.size(), Rational(0));
    for (std::size_t j = 0; j < term.size(); ++j) form.numerator[j] += coeffs[i] * term[j];
  }
  while (form.numerator.size() > 1 && sgn(form.numerator.back()) == 0) form.numerator.pop_back();

  // Only the i = d term survives at z = 1: Q(1) = q_d * d!.
  if (sgn(evaluate_polynomial(form.numerator, Rational(1))) == 0)
    throw std::logic_error("rational tail numerator vanishes at z = 1");
  return form;
}

std::vector<Rational> expand(const RationalTailForm& form, std::size_t order) {
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t n = 0; n < form.head.size() && n <= order; ++n) out[n] = form.head[n];
  // 1 / (1-z)^m = sum_n C(n + m - 1, m - 1) z^n
  const std::size_t m = form.pole_order;
  std::vector<Integer> pole(order + 1);
  for (std::size_t n = 0; n <= order; ++n) pole[n] = binomial(n + m - 1, m - 1);
  for (std::size_t j = 0; j < form.numerator.size() && j <= order; ++j) {
    if (sgn(form.numerator[j]) == 0) continue;
    for (std::size_t n = j; n <= order; ++n) out[n] += form.numerator[j] * Rational(pole[n - j]);
  }
  return out;
}

std::vector<Rational> single_fraction_numerator(const RationalTailForm& form) {
  std::vector<Rational> q = form.numerator;
  if (!form.head.empty()) {
    const auto shifted = poly_mul(form.head, one_minus_z_power(form.pole_order));
    if (shifted.size() > q.size()) q.resize(shifted.size(), Rational(0));
    for (std::size_t j = 0; j < shifted.size(); ++j) q[j] += shifted[j];
  }
  while (q.size() > 1 && sgn(q.back()) == 0) q.pop_back();
  return q;
}

}  // namespace repcount
