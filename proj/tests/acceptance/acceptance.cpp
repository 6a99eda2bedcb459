// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance and time limit is pinned below.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "repcount/repcount.hpp"

using namespace repcount;

namespace {

constexpr double kOracleTimeLimit = 60.0;      // seconds, criterion 1
constexpr double kMinSpeedup = 5.0;            // criterion 2
constexpr double kMoserTimeLimit = 30.0;       // seconds, criterion 4
constexpr double kMomentSlackPinned = 1e-9;    // criterion 8
constexpr double kLatticeTolerance = 0.02;     // criterion 9
constexpr double kDyadicTimeLimit = 300.0;     // seconds, criterion 9
static_assert(kMomentSlack == kMomentSlackPinned);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::printf("criterion %2d [%s] %s: %s\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, int bits) {
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  std::vector<Integer> c(order + 1);
  for (auto& x : c) {
    x = gen.get_z_bits(static_cast<mp_bitcnt_t>(bits));
    if (rng() & 1) x = -x;
  }
  return PowerSeries(std::move(c));
}

// 1. Series engine against the enumeration oracle.
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20241019);
  int equal = 0;
  const int instances = 50;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng() % 128;
    std::vector<std::int64_t> elems;
    for (std::int64_t x = 0; x <= 64; ++x)
      if (rng() & 1) elems.push_back(x);
    const IntegerSequence a(std::move(elems), 128);

    const std::size_t terms = 1 + rng() % 3;
    std::vector<Term> cfg_terms;
    std::uint64_t k = 0;
    std::uint64_t budget = 5;
    for (std::size_t t = 0; t < terms && budget > 0; ++t) {
      k += 1 + rng() % 3;
      const std::uint64_t m = 1 + rng() % std::min<std::uint64_t>(budget, 3);
      budget -= m;
      cfg_terms.push_back({k, m});
    }
    const Configuration cfg(cfg_terms);
    if (rep_series(a, cfg, n).values == oracle::brute_rep(a, cfg, n).values) ++equal;
  }
  const double t = seconds_since(t0);
  return {equal == instances && t < kOracleTimeLimit,
          fmt("%d/%d instances equal, %.1f s (limit %.0f s)", equal, instances, t, kOracleTimeLimit)};
}

// 2. NTT/CRT against schoolbook, exactness and speed.
Outcome fast_path() {
  std::mt19937_64 rng(7);
  int equal = 0;
  const int pairs = 100;
  for (int i = 0; i < pairs; ++i) {
    const std::size_t order = 1 + rng() % 4096;
    const int bits = 1 + static_cast<int>(rng() % 200);
    const auto f = random_series(rng, rng() % (order + 1), bits);
    const auto g = random_series(rng, rng() % (order + 1), 1 + static_cast<int>(rng() % 200));
    if (multiply_ntt(f, g, order) == multiply_schoolbook(f, g, order)) ++equal;
  }

  // Speed on indicator-like inputs at N = 2^16.
  const std::size_t big = std::size_t{1} << 16;
  std::vector<std::int64_t> fc(big + 1), gc(big + 1);
  for (auto& x : fc) x = static_cast<std::int64_t>(rng() & 1);
  for (auto& x : gc) x = static_cast<std::int64_t>(rng() % 1000);
  const PowerSeries f(std::move(fc)), g(std::move(gc));
  auto t0 = Clock::now();
  const auto fast = multiply_ntt(f, g, big);
  const double t_fast = seconds_since(t0);
  t0 = Clock::now();
  const auto slow = multiply_schoolbook(f, g, big);
  const double t_slow = seconds_since(t0);
  const double speedup = t_slow / t_fast;
  return {equal == pairs && fast == slow && speedup >= kMinSpeedup,
          fmt("%d/%d pairs equal; N=2^16: NTT %.4f s, schoolbook %.3f s, speedup %.0fx (need >= %.0fx)",
              equal, pairs, t_fast, t_slow, speedup, kMinSpeedup)};
}

// 3. Naturals with cfg {(1,s)}: stars and bars, and the detected degree.
Outcome naturals_closed_form() {
  const std::size_t n = 500;
  std::string detail;
  bool ok = true;
  for (std::uint64_t s : {2, 3, 4}) {
    const Configuration cfg({{1, s}});
    const auto table = rep_series(sequences::naturals(n), cfg, n);
    bool binom_ok = true;
    for (std::size_t j = 0; j <= n; ++j) binom_ok &= table[j] == binomial(j + s - 1, s - 1);
    // Tie the closed form to explicit enumeration on a prefix.
    binom_ok &= oracle::brute_rep(sequences::naturals(60), cfg, 60).values == table.values.resized(60);

    const auto fit = poly_tail_detect(table, s, 0);
    const bool degree_ok = fit && fit->degree == s - 1;
    // Delta^{s-1} of a degree s-1 polynomial is (s-1)! times its leading
    // coefficient, which is 1/(s-1)! here, so the constant is 1.
    bool diffs_ok = degree_ok;
    if (degree_ok) {
      Rational top = fit->polynomial.coefficients().back();
      for (std::uint64_t i = 2; i <= s - 1; ++i) top *= static_cast<unsigned long>(i);
      diffs_ok &= top == 1;
      for (const auto& d : finite_differences(table, s)) diffs_ok &= d == 0;
      for (const auto& d : finite_differences(table, s - 1)) diffs_ok &= d == 1;
    }
    ok &= binom_ok && degree_ok && diffs_ok;
    detail += fmt("s=%llu: binomial %s, degree %s, differences %s; ", static_cast<unsigned long long>(s),
                  binom_ok ? "ok" : "MISMATCH",
                  fit ? std::to_string(fit->degree).c_str() : "none", diffs_ok ? "ok" : "MISMATCH");
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

// 4. Moser sequences have exactly one representation n = a + k b.
Outcome moser_property() {
  const auto t0 = Clock::now();
  const std::int64_t n = 10'000;
  std::size_t violations = 0;
  for (std::int64_t k : {2, 3, 5}) {
    const auto a = sequences::moser(k, n);
    const Configuration cfg({{1, 1}, {static_cast<std::uint64_t>(k), 1}});
    const auto table = rep_series(a, cfg, static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j <= n; ++j) {
      // Direct count over a in A with (j - a) / k in A.
      std::size_t direct = 0;
      for (const auto x : a.up_to(j))
        if ((j - x) % k == 0 && a.contains((j - x) / k)) ++direct;
      if (table[static_cast<std::size_t>(j)] != 1 || direct != 1) ++violations;
    }
  }
  const double t = seconds_since(t0);
  return {violations == 0 && t < kMoserTimeLimit,
          fmt("k in {2,3,5}, n <= 10^4: %zu violations, %.1f s (limit %.0f s)", violations, t,
              kMoserTimeLimit)};
}

// 5. r(n) mod p for cfg {(1,p)}.
Outcome residue_obstruction() {
  const std::size_t n = 10'000;
  std::size_t violations = 0;
  int runs = 0;
  for (const auto& a : {sequences::primes(n), sequences::squares(n), sequences::mian_chowla(n)})
    for (std::uint64_t p : {2, 3, 5}) {
      violations += mod_p_residue_check(a, p, n).size();
      ++runs;
    }
  return {violations == 0, fmt("%d (A, p) pairs at N=10^4: %zu violations", runs, violations)};
}

// 6. No polynomial of degree < s-1 on [5000, 10000].
Outcome low_degree_windows() {
  const std::size_t n = 10'000;
  int passes = 0, runs = 0;
  std::string failed;
  const char* names[] = {"primes", "squares", "mianchowla"};
  int idx = 0;
  for (const auto& a : {sequences::primes(n), sequences::squares(n), sequences::mian_chowla(n)}) {
    for (const char* cfg : {"1:2", "1:2,3:2"}) {
      const auto rep = theorem1_check(a, parse_config(cfg), n, 5000);
      ++runs;
      if (rep.verdict == Verdict::Pass)
        ++passes;
      else
        failed += std::string(" ") + names[idx] + "/" + cfg;
    }
    ++idx;
  }
  return {passes == runs, fmt("%d/%d PASS at N=10^4, W=5000%s", passes, runs, failed.c_str())};
}

// 7. Rational tail forms re-expand to the source series.
Outcome rational_round_trip() {
  std::mt19937_64 rng(3);
  const std::size_t order = 1000;
  int ok = 0, runs = 0;
  const auto head_source = rep_series(sequences::primes(40), parse_config("1:2"), 40);
  for (std::size_t d = 0; d <= 4; ++d)
    for (std::int64_t cutoff : {-1, 0, 5, 17, 40}) {
      std::vector<Rational> q(d + 1);
      for (auto& c : q) {
        c = Rational(static_cast<long>(rng() % 201) - 100, 1 + static_cast<long>(rng() % 12));
        c.canonicalize();
      }
      if (q[d] == 0) q[d] = 1;
      std::vector<Integer> head;
      for (std::int64_t j = 0; j <= cutoff; ++j) head.push_back(head_source[static_cast<std::size_t>(j)]);
      const auto form = poly_tail_to_rational(PolynomialSpec(q), cutoff, head);
      const auto expanded = expand(form, order);
      bool match = form.pole_order == d + 1;
      for (std::size_t n = 0; n <= order && match; ++n) {
        Rational want;
        if (static_cast<std::int64_t>(n) <= cutoff) {
          want = head[n];
        } else {
          want = 0;  // Horner, independent of PolynomialSpec
          for (std::size_t i = q.size(); i-- > 0;) want = want * static_cast<long>(n) + q[i];
        }
        match = expanded[n] == want;
      }
      const Rational q_at_1 = evaluate_polynomial(single_fraction_numerator(form), 1);
      ++runs;
      if (match && q_at_1 != 0) ++ok;
    }
  return {ok == runs, fmt("%d/%d forms (degrees 0-4, five cutoffs) exact to order 1000 with Q(1) != 0",
                          ok, runs)};
}

// 8. Circle-moment inequality chain on the radius schedule.
Outcome circle_chain() {
  bool all = true;
  std::string detail;
  for (const char* cfg : {"1:2", "1:3"})
    for (std::size_t m : {16, 64, 256}) {
      const auto t0 = Clock::now();
      const CircleMomentOptions opts{m, 0.05, std::nullopt};
      const std::size_t order = std::max<std::size_t>(required_order(schedule_r2(m, 0.05)), 16);
      const auto rep = circle_moments(sequences::naturals(static_cast<std::int64_t>(order)),
                                      parse_config(cfg), opts, order);
      all &= rep.all_ok();
      detail += fmt("%s M=%zu %s (%.0f s); ", cfg, m,
                    rep.all_ok() ? "ok" : (rep.holder_ok && !*rep.holder_ok ? "holder FAILED" : "chain FAILED"),
                    seconds_since(t0));
    }
  detail += fmt("slack %.0e", kMomentSlackPinned);
  return {all, detail};
}

// 9. Dyadic fluctuation of the lattice-point partial sums.
Outcome dyadic_trend() {
  const auto t0 = Clock::now();
  const std::size_t n = 1'000'000;
  const auto table = rep_series(sequences::squares(static_cast<std::int64_t>(n)), parse_config("1:2"), n);
  const double c = estimate_c(table);
  long lattice = 0;  // x, y >= 0 with x^2 + y^2 <= n
  for (long x = 0; x * x <= static_cast<long>(n); ++x) {
    long y = static_cast<long>(std::sqrt(static_cast<double>(static_cast<long>(n) - x * x)));
    while (y * y > static_cast<long>(n) - x * x) --y;
    while ((y + 1) * (y + 1) <= static_cast<long>(n) - x * x) ++y;
    lattice += y + 1;
  }
  const double direct = static_cast<double>(lattice) / static_cast<double>(n);
  const double rel_pi = std::abs(c - M_PI / 4) / (M_PI / 4);
  const double rel_direct = std::abs(c - direct) / direct;
  const auto rep = ef_dyadic_report(partial_sums(table, c), 0.05);
  const double t = seconds_since(t0);
  std::string rhos;
  for (std::size_t i = rep.blocks.size() - 3; i < rep.blocks.size(); ++i)
    rhos += fmt(" %.4g", rep.blocks[i].ratio);
  const bool ok = rel_pi < kLatticeTolerance && rel_direct < kLatticeTolerance &&
                  rep.trend == Trend::NonDecreasing && t < kDyadicTimeLimit;
  return {ok, fmt("c=%.6f (pi/4 rel %.2e, lattice rel %.2e), last rho%s, trend %s, %.1f s", c, rel_pi,
                  rel_direct, rhos.c_str(), std::string(to_string(rep.trend)).c_str(), t)};
}

// 10. CLI exit codes and byte-determinism.
struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(REPCOUNT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_contract() {
  const auto dir = std::filesystem::temp_directory_path() / "repcount_acceptance";
  std::filesystem::create_directories(dir);
  const std::string gen = (dir / "gen.txt").string();
  const std::string summary = (dir / "summary.json").string();
  struct Case {
    std::string args;
    int code;
    std::string file;  // output file to compare, if any
  };
  const std::vector<Case> cases = {
      {"compute --config 1:2 --seq naturals --limit 3", 0, ""},
      {"compute --config 1:1,2:1 --seq moser:2 --limit 4", 0, ""},
      {"compute --config 1:0 --seq naturals --limit 3", 2, ""},
      {"verify parity --p 2 --seq primes --limit 10000", 0, ""},
      {"verify poly-tail --config 1:2 --seq primes --limit 10000 --max-degree 0 --window 5000", 0, ""},
      {"verify parity --p 4 --seq primes --limit 10000", 2, ""},
      {"ef --config 1:2 --seq squares --c auto --epsilon 0.05 --limit 1000000 --summary " + summary, 0,
       summary},
      {"ef --config 1:1,2:1 --seq moser:2 --limit 1000", 2, ""},
      {"generate --seq moser:2 --limit 21 --out " + gen, 0, gen},
      {"generate --seq primes --limit 10", 0, ""},
      {"generate --seq moser:1 --limit 21", 2, ""},
      {"moments --config 1:2 --seq naturals --M 16 --epsilon 0.05", 0, ""},
      {"moments --config 1:2 --seq naturals --M 1 --epsilon 0.05", 0, ""},
      {"moments --config 1:2 --seq naturals --M 16 --r2 1.0", 2, ""},
  };
  int ok = 0;
  std::string failed;
  for (const auto& c : cases) {
    const auto first = run_cli(c.args);
    const std::string file_first = c.file.empty() ? "" : slurp(c.file);
    const auto second = run_cli(c.args);
    const std::string file_second = c.file.empty() ? "" : slurp(c.file);
    const bool same = first.code == second.code && first.out == second.out && file_first == file_second;
    if (first.code == c.code && same)
      ++ok;
    else
      failed += " [" + c.args + " -> " + std::to_string(first.code) + (same ? "" : ", nondeterministic") + "]";
  }
  // Stated outputs of the examples.
  bool contents = run_cli(cases[0].args).out == "# schema: 1\nn,r\n0,1\n1,2\n2,3\n3,4\n" &&
                  slurp(gen) == "0\n1\n4\n5\n16\n17\n20\n21\n" &&
                  run_cli(cases[9].args).out == "2\n3\n5\n7\n" &&
                  slurp(summary).find("\"trend\": \"non-decreasing\"") != std::string::npos;
  if (!contents) failed += " [stated outputs differ]";
  return {ok == static_cast<int>(cases.size()) && contents,
          fmt("%d/%zu invocations with expected exit code and identical output on rerun%s", ok, cases.size(),
              failed.c_str())};
}

}  // namespace

struct Criterion {
  const char* title;
  Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {"oracle equivalence", oracle_equivalence},
    {"fast-path exactness and speed", fast_path},
    {"naturals closed form", naturals_closed_form},
    {"Moser property", moser_property},
    {"residue obstruction", residue_obstruction},
    {"window consistency (no low-degree tail)", low_degree_windows},
    {"rational tail round trip", rational_round_trip},
    {"circle-moment chain", circle_chain},
    {"dyadic fluctuation trend", dyadic_trend},
    {"CLI contract", cli_contract},
};

// With no arguments every criterion runs; otherwise only the listed ids.
int main(int argc, char** argv) {
  constexpr int count = static_cast<int>(std::size(kCriteria));
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > count) {
      std::fprintf(stderr, "unknown criterion '%s' (1-%d)\n", argv[i], count);
      return 2;
    }
    ids.push_back(id);
  }
  if (ids.empty())
    for (int id = 1; id <= count; ++id) ids.push_back(id);
  for (int id : ids) report(id, kCriteria[id - 1].title, kCriteria[id - 1].run);
  std::printf("%d of %zu criteria failed\n", failures, ids.size());
  return failures == 0 ? 0 : 1;
}
