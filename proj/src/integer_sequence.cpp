#include "repcount/integer_sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace repcount {

IntegerSequence::IntegerSequence(std::vector<std::int64_t> elements, std::int64_t limit)
    : elements_(std::move(elements)), limit_(limit) {
  if (limit_ < 0) throw std::invalid_argument("sequence limit must be nonnegative");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0)
      throw std::invalid_argument("sequence element " + std::to_string(elements_[i]) +
                                  " is negative");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw std::invalid_argument("sequence is not strictly increasing at index " +
                                  std::to_string(i));
  }
  if (!elements_.empty() && elements_.back() > limit_)
    throw std::invalid_argument("sequence element " + std::to_string(elements_.back()) +
                                " exceeds limit " + std::to_string(limit_));
}

bool IntegerSequence::contains(std::int64_t n) const {
  if (n > limit_)
    throw std::out_of_range("membership of " + std::to_string(n) +
                            " is unknown beyond limit " + std::to_string(limit_));
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

std::span<const std::int64_t> IntegerSequence::up_to(std::int64_t n) const noexcept {
  const auto end = std::upper_bound(elements_.begin(), elements_.end(), n);
  return {elements_.data(), static_cast<std::size_t>(end - elements_.begin())};
}

}  // namespace repcount
