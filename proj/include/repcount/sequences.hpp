#ifndef REPCOUNT_SEQUENCES_HPP
#define REPCOUNT_SEQUENCES_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "repcount/integer_sequence.hpp"

namespace repcount::sequences {

/// {0, 1, ..., limit}. Includes 0.
IntegerSequence naturals(std::int64_t limit);

/// Primes <= limit by sieve. Contains neither 0 nor 1.
IntegerSequence primes(std::int64_t limit);

/// {0, 1, 4, 9, ...} <= limit. Includes 0.
IntegerSequence squares(std::int64_t limit);

/// Integers whose base-k^2 digits all lie in {0, ..., k-1}. Every n >= 0 has
/// exactly one representation n = a + k*b with a, b in this set: split the
/// base-k digits of n into even and odd positions. Includes 0; k >= 2.
IntegerSequence moser(std::int64_t k, std::int64_t limit);

/// Greedy Sidon sequence 1, 2, 4, 8, 13, ...: each new term is the least
/// integer keeping all pairwise sums a + a' (a <= a') distinct. Excludes 0.
IntegerSequence mian_chowla(std::int64_t limit);

/// Parse errors carry the 1-based line number.
class SequenceFileError : public std::runtime_error {
 public:
  SequenceFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One decimal integer per line, strictly increasing, '#' lines ignored.
/// The resulting limit is the last element.
IntegerSequence parse_sequence(std::istream& in);
IntegerSequence from_file(const std::filesystem::path& path);

/// Writes one element per line, each terminated by '\n'.
void write_sequence(std::ostream& out, const IntegerSequence& seq);

/// Builds a sequence from a command-line spec: naturals, primes, squares,
/// moser:<k>, mianchowla, or file:<path>. Throws std::invalid_argument for
/// unknown specs.
IntegerSequence from_spec(std::string_view spec, std::int64_t limit);

}  // namespace repcount::sequences

#endif  // REPCOUNT_SEQUENCES_HPP
