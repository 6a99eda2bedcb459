#ifndef REPCOUNT_POLYNOMIAL_TAIL_HPP
#define REPCOUNT_POLYNOMIAL_TAIL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "repcount/configuration.hpp"
#include "repcount/integer_sequence.hpp"
#include "repcount/power_series.hpp"

namespace repcount {

using Rational = mpq_class;

/// t-th forward difference of r(0..N): Delta^t r(n) for n = 0..N-t.
std::vector<Integer> finite_differences(std::span<const Integer> values, std::size_t order);
std::vector<Integer> finite_differences(const RepTable& table, std::size_t order);

/// q(n) = q_0 + q_1 n + ... + q_d n^d with exact rational coefficients.
/// Integer-valued polynomials such as C(n+2, 2) need non-integer q_i.
class PolynomialSpec {
 public:
  /// Throws std::invalid_argument when empty or when d > 0 and q_d = 0.
  explicit PolynomialSpec(std::vector<Rational> coefficients);

  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  std::span<const Rational> coefficients() const noexcept { return coefficients_; }
  bool is_zero() const;

  Rational operator()(const Rational& n) const;

  friend bool operator==(const PolynomialSpec&, const PolynomialSpec&) = default;

 private:
  std::vector<Rational> coefficients_;
};

struct PolyTailFit {
  std::size_t degree;
  PolynomialSpec polynomial;
};

/// Smallest d0 <= max_degree with Delta^{d0+1} r(n) = 0 for every n in
/// [W, N-d0-1], together with the polynomial interpolated from the
/// differences at n = W. Empty when no degree up to max_degree fits.
/// Throws std::invalid_argument if the window has fewer than
/// max_degree + 2 points.
std::optional<PolyTailFit> poly_tail_detect(const RepTable& table, std::size_t max_degree,
                                            std::size_t window_start);

/// Evidence that no polynomial of `degree` matches the window: the
/// (degree+1)-th difference at n is nonzero, so r on [n, n+degree+1] is not
/// of that degree.
struct DifferenceWitness {
  std::size_t degree;
  std::size_t n;
  Integer difference;
};

enum class Verdict { Pass, Fail };
std::string_view to_string(Verdict v);

/// Outcome of a window fit. Pass means no polynomial of degree <= max_degree
/// fits [window_start, window_end]; this is consistency with the
/// non-polynomial statement on one finite window, never a proof of it. Fail
/// means a fit was found, which at desk scale signals a window that is too
/// small or a degenerate instance, not a counterexample.
struct TailReport {
  std::uint64_t degree_s;
  std::size_t max_degree;
  std::size_t window_start;
  std::size_t window_end;
  Verdict verdict;
  std::optional<PolyTailFit> fit;
  std::vector<DifferenceWitness> witnesses;  // one per rejected degree
};

TailReport tail_report(const RepTable& table, std::size_t max_degree, std::size_t window_start);

/// Computes r_m(0..N, A) and checks that no polynomial of degree < s-1
/// fits [W, N], s = degree(cfg) >= 2. `max_degree` overrides the default
/// s-2, e.g. to show the degree s-1 fit for the naturals.
TailReport theorem1_check(const IntegerSequence& a, const Configuration& cfg, std::size_t order,
                          std::size_t window_start,
                          std::optional<std::size_t> max_degree = std::nullopt);

/// head(z) + numerator(z) / (1-z)^pole_order, where head is the polynomial
/// T_0 of degree <= N0 correcting the first N0+1 coefficients and
/// numerator = sum_i q_i Q_i(z) (1-z)^{d-i} with
/// sum_n n^i z^n = Q_i(z) / (1-z)^{i+1}.
struct RationalTailForm {
  std::vector<Rational> head;
  std::vector<Rational> numerator;
  std::size_t pole_order;
};

/// Q_i, the numerator of sum_{n>=0} n^i z^n over (1-z)^{i+1}
/// (z times the Eulerian polynomial for i >= 1; Q_i(1) = i!).
std::vector<Integer> power_sum_numerator(std::size_t i);

/// Builds the rational form of the series equal to head[n] for n <= cutoff
/// and q(n) for n > cutoff. cutoff = -1 means no head. Throws when the
/// degree is overstated or q is identically zero (no pole).
RationalTailForm poly_tail_to_rational(const PolynomialSpec& q, std::int64_t cutoff,
                                       std::span<const Integer> head);

/// Coefficients 0..order of the form's power-series expansion.
std::vector<Rational> expand(const RationalTailForm& form, std::size_t order);

/// The single numerator Q with series = Q(z) / (1-z)^pole_order, i.e.
/// head * (1-z)^pole_order + numerator. Q(0) equals the series' c_0.
std::vector<Rational> single_fraction_numerator(const RationalTailForm& form);

Rational evaluate_polynomial(std::span<const Rational> coefficients, const Rational& z);

}  // namespace repcount

#endif  // REPCOUNT_POLYNOMIAL_TAIL_HPP
