#ifndef REPCOUNT_SRC_SERIES_DETAIL_HPP
#define REPCOUNT_SRC_SERIES_DETAIL_HPP

#include <algorithm>
#include <climits>
#include <cstdint>
#include <vector>

#include "repcount/power_series.hpp"

namespace repcount::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Index one past the last nonzero coefficient, looking at most `cap` terms.
inline std::size_t effective_size(const PowerSeries& f, std::size_t cap) {
  std::size_t len = std::min(f.size(), cap);
  if (f.is_compact()) {
    const auto c = f.compact();
    while (len > 0 && c[len - 1] == 0) --len;
  } else {
    const auto c = f.wide();
    while (len > 0 && sgn(c[len - 1]) == 0) --len;
  }
  return len;
}

// Accumulates exact results, staying in int64 storage until a value needs more.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(std::size_t size) { small_.reserve(size); }

  void push(i128 v) {
    if (wide_mode_) {
      wide_.push_back(from_i128(v));
    } else if (v >= INT64_MIN && v <= INT64_MAX) {
      small_.push_back(static_cast<std::int64_t>(v));
    } else {
      widen();
      wide_.push_back(from_i128(v));
    }
  }

  void push(Integer v) {
    if (!wide_mode_ && mpz_fits_slong_p(v.get_mpz_t())) {
      small_.push_back(v.get_si());
      return;
    }
    if (!wide_mode_) widen();
    wide_.push_back(std::move(v));
  }

  PowerSeries finish() {
    return wide_mode_ ? PowerSeries(std::move(wide_)) : PowerSeries(std::move(small_));
  }

 private:
  static Integer from_i128(i128 v) {
    const bool neg = v < 0;
    u128 mag = neg ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
    Integer hi(static_cast<unsigned long>(static_cast<u64>(mag >> 64)));
    Integer out = hi << 64;
    out += static_cast<unsigned long>(static_cast<u64>(mag));
    return neg ? Integer(-out) : out;
  }

  void widen() {
    wide_mode_ = true;
    wide_.reserve(small_.capacity());
    for (auto x : small_) wide_.emplace_back(static_cast<long>(x));
    small_.clear();
    small_.shrink_to_fit();
  }

  bool wide_mode_ = false;
  std::vector<std::int64_t> small_;
  std::vector<Integer> wide_;
};

}  // namespace repcount::detail

#endif  // REPCOUNT_SRC_SERIES_DETAIL_HPP
