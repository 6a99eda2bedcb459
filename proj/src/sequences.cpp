#include "repcount/sequences.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace repcount::sequences {
namespace {

void require_limit(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("limit must be nonnegative");
}

bool has_small_digits(std::int64_t n, std::int64_t k) {
  const std::int64_t base = k * k;
  for (; n > 0; n /= base)
    if (n % base >= k) return false;
  return true;
}

}  // namespace

IntegerSequence naturals(std::int64_t limit) {
  require_limit(limit);
  std::vector<std::int64_t> v(static_cast<std::size_t>(limit) + 1);
  for (std::int64_t i = 0; i <= limit; ++i) v[static_cast<std::size_t>(i)] = i;
  return IntegerSequence(std::move(v), limit);
}

IntegerSequence primes(std::int64_t limit) {
  require_limit(limit);
  std::vector<std::int64_t> v;
  if (limit >= 2) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
      if (composite[static_cast<std::size_t>(i)]) continue;
      v.push_back(i);
      for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return IntegerSequence(std::move(v), limit);
}

IntegerSequence squares(std::int64_t limit) {
  require_limit(limit);
  std::vector<std::int64_t> v;
  for (std::int64_t i = 0; i * i <= limit; ++i) v.push_back(i * i);
  return IntegerSequence(std::move(v), limit);
}

IntegerSequence moser(std::int64_t k, std::int64_t limit) {
  if (k < 2) throw std::invalid_argument("moser sequence needs k >= 2, got " + std::to_string(k));
  require_limit(limit);
  std::vector<std::int64_t> v;
  for (std::int64_t n = 0; n <= limit; ++n)
    if (has_small_digits(n, k)) v.push_back(n);
  return IntegerSequence(std::move(v), limit);
}

IntegerSequence mian_chowla(std::int64_t limit) {
  require_limit(limit);
  std::vector<std::int64_t> v;
  std::vector<bool> used_sums(2 * static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t c = 1; c <= limit; ++c) {
    bool ok = !used_sums[static_cast<std::size_t>(2 * c)];
    for (std::size_t i = 0; ok && i < v.size(); ++i)
      ok = !used_sums[static_cast<std::size_t>(c + v[i])];
    if (!ok) continue;
    for (auto x : v) used_sums[static_cast<std::size_t>(c + x)] = true;
    used_sums[static_cast<std::size_t>(2 * c)] = true;
    v.push_back(c);
  }
  return IntegerSequence(std::move(v), limit);
}

IntegerSequence parse_sequence(std::istream& in) {
  std::vector<std::int64_t> v;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) throw SequenceFileError(line_no, "empty line");
    if (line.front() == '-') throw SequenceFileError(line_no, "negative value '" + line + "'");
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), x);
    if (ec != std::errc() || ptr != line.data() + line.size())
      throw SequenceFileError(line_no, "not a decimal integer: '" + line + "'");
    if (!v.empty() && x <= v.back())
      throw SequenceFileError(line_no, "value " + line + " does not exceed previous value " +
                                           std::to_string(v.back()));
    v.push_back(x);
  }
  if (v.empty()) throw SequenceFileError(line_no, "no elements");
  const auto limit = v.back();
  return IntegerSequence(std::move(v), limit);
}

IntegerSequence from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file " + path.string());
  return parse_sequence(in);
}

void write_sequence(std::ostream& out, const IntegerSequence& seq) {
  for (auto x : seq.elements()) out << x << '\n';
}

IntegerSequence from_spec(std::string_view spec, std::int64_t limit) {
  if (spec == "naturals") return naturals(limit);
  if (spec == "primes") return primes(limit);
  if (spec == "squares") return squares(limit);
  if (spec == "mianchowla") return mian_chowla(limit);
  if (spec.starts_with("moser:")) {
    const auto arg = spec.substr(6);
    std::int64_t k = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size())
      throw std::invalid_argument("bad moser parameter in '" + std::string(spec) + "'");
    return moser(k, limit);
  }
  if (spec.starts_with("file:")) {
    auto seq = from_file(std::filesystem::path(std::string(spec.substr(5))));
    if (seq.limit() < limit)
      throw std::invalid_argument("sequence file ends at " + std::to_string(seq.limit()) +
                                  ", below requested limit " + std::to_string(limit));
    return seq;
  }
  throw std::invalid_argument("unknown sequence spec '" + std::string(spec) + "'");
}

}  // namespace repcount::sequences
