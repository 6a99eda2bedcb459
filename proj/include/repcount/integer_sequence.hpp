#ifndef REPCOUNT_INTEGER_SEQUENCE_HPP
#define REPCOUNT_INTEGER_SEQUENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace repcount {

/// A strictly increasing set of nonnegative integers, materialized up to a
/// limit L. Every member of the (conceptually infinite) set that is <= L is
/// present, so membership queries for n <= L are authoritative.
class IntegerSequence {
 public:
  /// Throws std::invalid_argument if elements are negative, not strictly
  /// increasing, or exceed `limit`.
  IntegerSequence(std::vector<std::int64_t> elements, std::int64_t limit);

  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::int64_t limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// Throws std::out_of_range for n > limit().
  bool contains(std::int64_t n) const;

  /// Members that are <= n.
  std::span<const std::int64_t> up_to(std::int64_t n) const noexcept;

  friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t limit_;
};

}  // namespace repcount

#endif  // REPCOUNT_INTEGER_SEQUENCE_HPP
