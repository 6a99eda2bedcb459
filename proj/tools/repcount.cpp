// repcount: command-line front end for the representation-function library.
//
// Exit codes: 0 success or pass, 1 verified violation or failed inequality,
// 2 usage or input error.

#include <unistd.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "repcount/repcount.hpp"

namespace {

using namespace repcount;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Writes to stdout for "-" or "stdout"; otherwise through a temporary file
// in the target directory that is renamed into place once complete.
void write_output(const std::string& target, const std::string& content) {
  if (target.empty() || target == "-" || target == "stdout") {
    std::cout << content << std::flush;
    return;
  }
  const std::filesystem::path path(target);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into " + path.string() + ": " + ec.message());
  }
}

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

std::string rational_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q" and finite decimals such as "0.785" or "-1.5e-3" as
// exact rationals.
std::optional<Rational> parse_exact_real(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0 ||
        den == 0)
      return std::nullopt;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  std::string mantissa = text;
  long exponent = 0;
  const auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mantissa = text.substr(0, e);
    const auto exp_text = text.substr(e + 1);
    const char* first = exp_text.data();
    if (!exp_text.empty() && exp_text[0] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || first == ptr) return std::nullopt;
    if (exponent > 4096 || exponent < -4096) return std::nullopt;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_point = false;
  std::size_t i = 0;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    if (mantissa[0] == '-') digits.push_back('-');
    i = 1;
  }
  bool any_digit = false;
  for (; i < mantissa.size(); ++i) {
    const char ch = mantissa[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++frac_len;
    } else {
      return std::nullopt;
    }
  }
  if (!any_digit) return std::nullopt;
  Integer num(digits, 10);
  Integer scale(1);
  const long shift = exponent - frac_len;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return q;
}

struct SeriesArgs {
  std::string config;
  std::string seq;
  std::int64_t limit = -1;
  std::string out = "-";
};

void add_config_flag(CLI::App* cmd, SeriesArgs& args) {
  cmd->add_option("--config", args.config, "configuration k1:m1,k2:m2,...")->required();
}

void add_seq_flags(CLI::App* cmd, SeriesArgs& args, bool limit_required = true) {
  cmd->add_option("--seq", args.seq, "naturals | primes | squares | mianchowla | moser:<k> | file:<path>")
      ->required();
  auto* limit = cmd->add_option("--limit", args.limit, "largest n (N)")->check(CLI::NonNegativeNumber);
  if (limit_required) limit->required();
}

std::string compute_csv(const SeriesArgs& args) {
  const auto cfg = parse_config(args.config);
  const auto a = sequences::from_spec(args.seq, args.limit);
  const auto table = rep_series(a, cfg, static_cast<std::size_t>(args.limit));
  std::string csv = "# schema: 1\nn,r\n";
  csv.reserve(csv.size() + table.values.size() * 12);
  char buf[32];
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, n);
    csv.append(buf, p);
    csv.push_back(',');
    if (table.values.is_compact()) {
      auto [q, ec2] = std::to_chars(buf, buf + sizeof buf, table.values.compact()[n]);
      csv.append(buf, q);
    } else {
      csv += table.values.wide()[n].get_str();
    }
    csv.push_back('\n');
  }
  return csv;
}

int run_parity(const SeriesArgs& args, std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
  const auto a = sequences::from_spec(args.seq, args.limit);
  const auto violations = mod_p_residue_check(a, p, static_cast<std::size_t>(args.limit));
  ordered_json report;
  report["schema"] = 1;
  report["check"] = "parity";
  report["p"] = p;
  report["config"] = "1:" + std::to_string(p);
  report["limit"] = args.limit;
  report["verdict"] = std::string(to_string(violations.empty() ? Verdict::Pass : Verdict::Fail));
  auto& witnesses = report["witnesses"] = ordered_json::array();
  for (const auto& v : violations)
    witnesses.push_back({{"n", v.n}, {"residue", v.residue}, {"expected", v.expected}});
  write_output(args.out, report.dump(2) + "\n");
  return violations.empty() ? kExitPass : kExitViolation;
}

int run_poly_tail(const SeriesArgs& args, std::optional<std::size_t> max_degree, std::size_t window) {
  const auto cfg = parse_config(args.config);
  const auto a = sequences::from_spec(args.seq, args.limit);
  const auto n = static_cast<std::size_t>(args.limit);
  const auto s = degree(cfg);
  if (!max_degree && s < 2)
    throw UsageError("configuration degree is " + std::to_string(s) +
                     "; the default check needs degree >= 2 (pass --max-degree to fit anyway)");
  const TailReport rep = max_degree
                             ? tail_report(rep_series(a, cfg, n), *max_degree, window)
                             : theorem1_check(a, cfg, n, window);
  ordered_json report;
  report["schema"] = 1;
  report["check"] = "poly-tail";
  report["config"] = format_config(cfg);
  report["degree_s"] = rep.degree_s;
  report["max_degree"] = rep.max_degree;
  report["window"] = {rep.window_start, rep.window_end};
  report["verdict"] = std::string(to_string(rep.verdict));
  if (rep.fit) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& q : rep.fit->polynomial.coefficients()) coeffs.push_back(rational_string(q));
    report["fit"] = {{"degree", rep.fit->degree}, {"coefficients", coeffs}};
  } else {
    report["fit"] = nullptr;
  }
  auto& witnesses = report["witnesses"] = ordered_json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back({{"degree", w.degree}, {"n", w.n}, {"difference", integer_json(w.difference)}});
  write_output(args.out, report.dump(2) + "\n");
  return rep.verdict == Verdict::Pass ? kExitPass : kExitViolation;
}

int run_ef(const SeriesArgs& args, const std::string& c_text, double epsilon, const std::string& summary) {
  const auto cfg = parse_config(args.config);
  const auto s = degree(cfg);
  if (s < 2)
    throw UsageError("configuration degree is " + std::to_string(s) + "; ef needs degree > 1");
  if (!(epsilon > 0.0 && epsilon < 0.25)) throw UsageError("--epsilon must lie in (0, 0.25)");
  std::optional<Rational> exact_c;
  if (c_text != "auto") {
    exact_c = parse_exact_real(c_text);
    if (!exact_c) throw UsageError("--c must be 'auto', an integer, p/q or a decimal");
    if (sgn(*exact_c) <= 0) throw UsageError("--c must be positive");
  }
  const auto a = sequences::from_spec(args.seq, args.limit);
  const auto table = rep_series(a, cfg, static_cast<std::size_t>(args.limit));
  const auto sums = exact_c ? partial_sums(table, *exact_c) : partial_sums(table, estimate_c(table));
  const auto rep = ef_dyadic_report(sums, epsilon);

  std::string csv = "# schema: 1\nk,block_lo,block_hi,S_k,rho_k\n";
  for (const auto& b : rep.blocks)
    csv += std::to_string(b.k) + "," + std::to_string(b.lo) + "," + std::to_string(b.hi) + "," +
           format_real(b.max_abs) + "," + format_real(b.ratio) + "\n";
  write_output(args.out, csv);

  ordered_json info;
  info["schema"] = 1;
  info["config"] = format_config(cfg);
  info["limit"] = args.limit;
  info["c"] = sums.c();
  info["c_exact"] = exact_c ? ordered_json(rational_string(*exact_c)) : ordered_json(nullptr);
  info["epsilon"] = epsilon;
  info["blocks"] = rep.blocks.size();
  info["trend"] = std::string(to_string(rep.trend));
  const std::string text = info.dump(2) + "\n";
  if (summary.empty() || summary == "stderr")
    std::cerr << text;
  else
    write_output(summary, text);
  return kExitPass;
}

int run_generate(const SeriesArgs& args) {
  const auto a = sequences::from_spec(args.seq, args.limit);
  std::ostringstream out;
  sequences::write_sequence(out, a);
  write_output(args.out, out.str());
  return kExitPass;
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

int run_moments(const SeriesArgs& args, std::size_t m, double epsilon, std::optional<double> r2) {
  const auto cfg = parse_config(args.config);
  if (degree(cfg) < 2) throw UsageError("moments need configuration degree >= 2");
  if (m == 0) throw UsageError("--M must be positive");
  if (!(epsilon > 0.0 && epsilon < 0.25)) throw UsageError("--epsilon must lie in (0, 0.25)");
  if (r2 && !(*r2 >= 0.0 && *r2 < 1.0)) throw UsageError("--r2 must lie in [0, 1)");
  const CircleMomentOptions opts{m, epsilon, r2};
  const double radius2 = r2.value_or(schedule_r2(m, epsilon));
  const std::size_t needed = std::max<std::size_t>(required_order(radius2), 16);
  std::size_t order = needed;
  if (args.limit >= 0) {
    order = static_cast<std::size_t>(args.limit);
    if (order < needed)
      throw UsageError("--limit " + std::to_string(order) + " is below the order " +
                       std::to_string(needed) + " required by r^2 = " + format_real(radius2));
  }
  const auto a = sequences::from_spec(args.seq, static_cast<std::int64_t>(order));
  const auto rep = circle_moments(a, cfg, opts, order);

  ordered_json report;
  report["schema"] = 1;
  report["config"] = format_config(cfg);
  report["M"] = rep.m;
  report["r2"] = rep.r2;
  report["radius"] = rep.radius;
  report["epsilon"] = rep.epsilon;
  report["s"] = rep.s;
  report["k"] = rep.k;
  report["order"] = rep.order;
  report["c"] = rep.c;
  report["lhs_parseval"] = rep.lhs_parseval;
  report["lower_chain"] = {rep.chain_linear, rep.chain_kernel_bound};
  report["f_at_r2"] = rep.f_at_r2;
  report["hM_at_r2"] = rep.hM_at_r2;
  report["hM_lower"] = rep.hM_lower;
  report["rhs_log_term"] = rep.rhs_log_term;
  report["rhs_cs_term"] = rep.rhs_cs_term;
  report["holder_lhs"] = optional_json(rep.holder_lhs);
  report["holder_lhs_lower"] = optional_json(rep.holder_lhs_lower);
  report["holder_rhs"] = optional_json(rep.holder_rhs);
  report["holder_ok"] = rep.holder_ok ? ordered_json(*rep.holder_ok) : ordered_json(nullptr);
  report["quadrature_points"] =
      rep.quadrature_points ? ordered_json(*rep.quadrature_points) : ordered_json(nullptr);
  report["quadrature_error"] = optional_json(rep.quadrature_error);
  report["parseval_ok"] = rep.parseval_ok;
  report["kernel_ok"] = rep.kernel_ok;
  report["hM_ok"] = rep.hM_ok;
  report["slack"] = kMomentSlack;
  report["verdict"] = std::string(to_string(rep.all_ok() ? Verdict::Pass : Verdict::Fail));
  write_output(args.out, report.dump(2) + "\n");
  return rep.all_ok() ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact representation-function tables and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "repcount 1.0");

  SeriesArgs compute_args;
  auto* compute = app.add_subcommand("compute", "tabulate r(n) for n = 0..N as CSV");
  add_config_flag(compute, compute_args);
  add_seq_flags(compute, compute_args);
  compute->add_option("--out", compute_args.out, "output path or '-' for stdout");

  auto* verify = app.add_subcommand("verify", "run a congruence or tail check");
  verify->require_subcommand(1);

  SeriesArgs parity_args;
  std::uint64_t p = 0;
  auto* parity = verify->add_subcommand("parity", "r(n) mod p for the configuration 1:p");
  parity->add_option("--p", p, "prime modulus")->required();
  add_seq_flags(parity, parity_args);
  parity->add_option("--out", parity_args.out, "output path or '-' for stdout");

  SeriesArgs tail_args;
  std::optional<std::size_t> max_degree;
  std::size_t window = 0;
  auto* poly_tail = verify->add_subcommand("poly-tail", "look for a polynomial tail on [W, N]");
  add_config_flag(poly_tail, tail_args);
  add_seq_flags(poly_tail, tail_args);
  poly_tail->add_option("--max-degree", max_degree, "largest degree tried (default s-2)");
  poly_tail->add_option("--window", window, "window start W")->required();
  poly_tail->add_option("--out", tail_args.out, "output path or '-' for stdout");

  SeriesArgs ef_args;
  std::string c_text = "auto";
  double ef_epsilon = 0.05;
  std::string summary = "stderr";
  auto* ef = app.add_subcommand("ef", "dyadic fluctuation of the partial sums a_n");
  add_config_flag(ef, ef_args);
  add_seq_flags(ef, ef_args);
  ef->add_option("--c", c_text, "constant c: auto, integer, p/q or decimal");
  ef->add_option("--epsilon", ef_epsilon, "epsilon in (0, 0.25)");
  ef->add_option("--out", ef_args.out, "CSV output path or '-' for stdout");
  ef->add_option("--summary", summary, "JSON summary path (default stderr)");

  SeriesArgs gen_args;
  auto* generate = app.add_subcommand("generate", "write a sequence file");
  add_seq_flags(generate, gen_args);
  generate->add_option("--out", gen_args.out, "output path or '-' for stdout");

  SeriesArgs mom_args;
  std::size_t kernel = 16;
  double mom_epsilon = 0.05;
  std::optional<double> r2;
  auto* moments = app.add_subcommand("moments", "circle-moment inequality chain");
  add_config_flag(moments, mom_args);
  add_seq_flags(moments, mom_args, false);
  moments->add_option("--M", kernel, "kernel length M");
  moments->add_option("--epsilon", mom_epsilon, "epsilon in (0, 0.25)");
  moments->add_option("--r2", r2, "override r^2 = 1 - M^-(2+8 eps)");
  moments->add_option("--out", mom_args.out, "output path or '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) {
      write_output(compute_args.out, compute_csv(compute_args));
      return kExitPass;
    }
    if (*parity) return run_parity(parity_args, p);
    if (*poly_tail) return run_poly_tail(tail_args, max_degree, window);
    if (*ef) return run_ef(ef_args, c_text, ef_epsilon, summary);
    if (*generate) return run_generate(gen_args);
    if (*moments) return run_moments(mom_args, kernel, mom_epsilon, r2);
  } catch (const std::exception& e) {
    std::cerr << "repcount: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
