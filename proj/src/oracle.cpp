#include "repcount/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace repcount::oracle {
namespace {

struct Enumerator {
  const IntegerSequence& a;
  std::vector<std::int64_t> slots;  // coefficient of each summand
  std::uint64_t count = 0;

  void run(std::size_t slot, std::int64_t remaining) {
    const std::int64_t k = slots[slot];
    if (slot + 1 == slots.size()) {
      // Last summand is forced: remaining = k * a.
      if (remaining % k == 0 && a.contains(remaining / k)) ++count;
      return;
    }
    for (auto x : a.elements()) {
      const std::int64_t used = k * x;
      if (used > remaining) break;
      run(slot + 1, remaining - used);
    }
  }
};

}  // namespace

Integer brute_rep_single(const IntegerSequence& a, const Configuration& cfg, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("target must be nonnegative");
  if (a.limit() < n)
    throw std::invalid_argument("sequence materialized to " + std::to_string(a.limit()) +
                                ", below target " + std::to_string(n));
  Enumerator e{a, {}};
  for (const auto& t : cfg.terms())
    for (std::uint64_t j = 0; j < t.m; ++j) e.slots.push_back(static_cast<std::int64_t>(t.k));
  e.run(0, n);
  return Integer(static_cast<unsigned long>(e.count));
}

RepTable brute_rep(const IntegerSequence& a, const Configuration& cfg, std::size_t order) {
  std::vector<Integer> values;
  values.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    values.push_back(brute_rep_single(a, cfg, static_cast<std::int64_t>(n)));
  return RepTable{cfg, PowerSeries(std::move(values))};
}

}  // namespace repcount::oracle
