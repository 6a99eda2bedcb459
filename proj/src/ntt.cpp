// Exact convolution through number-theoretic transforms.
//
// Every transform runs modulo a prime p = c * 2^32 + 1 with 2^61 < p < 2^62,
// so any power-of-two length up to 2^32 has a root of unity. Coefficients are
// reduced into each prime field, multiplied there, and lifted back to exact
// integers by Garner's mixed-radix CRT. The number of primes is derived from a
// bound on the product's coefficients, never fixed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "repcount/series.hpp"
#include "series_detail.hpp"

namespace repcount {
using detail::effective_size;
using detail::SeriesBuilder;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

constexpr int kTwoAdicity = 32;
constexpr std::size_t kPrimeBits = 61;  // every prime exceeds 2^61

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct NttPrime {
  u64 p;
  u64 root;  // element of multiplicative order exactly 2^32
};

// Primes are found lazily, largest c first, and cached for the process.
NttPrime prime_at(std::size_t index) {
  static std::mutex mutex;
  static std::vector<NttPrime> cache;
  static u64 next_c = (u64(1) << 30) - 1;

  std::lock_guard lock(mutex);
  while (cache.size() <= index) {
    if (next_c < (u64(1) << 29)) throw std::overflow_error("exhausted NTT prime pool");
    const u64 c = next_c--;
    const u64 p = (c << kTwoAdicity) | 1;
    if (!is_prime_u64(p)) continue;
    for (u64 x = 2;; ++x) {
      const u64 y = powmod(x, c, p);
      if (powmod(y, u64(1) << (kTwoAdicity - 1), p) == p - 1) {
        cache.push_back({p, y});
        break;
      }
    }
  }
  return cache[index];
}

class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    inv_ = inv;
    const u64 r1 = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<u64>(static_cast<u128>(r1) * r1 % p);
  }

  u64 modulus() const { return p_; }

  // t < p * 2^64 -> t * 2^-64 mod p, fully reduced.
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * inv_;
    const u64 mp_hi = static_cast<u64>((static_cast<u128>(m) * p_) >> 64);
    const u64 t_hi = static_cast<u64>(t >> 64);
    return t_hi >= mp_hi ? t_hi - mp_hi : t_hi - mp_hi + p_;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 to_mont(u64 a) const { return mul(a, r2_); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }

 private:
  u64 p_;
  u64 inv_;
  u64 r2_;
};

class Transform {
 public:
  Transform(const NttPrime& prime, std::size_t n) : mg_(prime.p), n_(n), table_(n / 2) {
    const int log_n = std::countr_zero(n);
    const u64 w = powmod(prime.root, u64(1) << (kTwoAdicity - log_n), prime.p);
    u64 cur = mg_.to_mont(1);
    const u64 w_m = mg_.to_mont(w);
    for (std::size_t j = 0; j < table_.size(); ++j) {
      table_[j] = cur;
      cur = mg_.mul(cur, w_m);
    }
    n_inv_ = powmod(n % prime.p, prime.p - 2, prime.p);
  }

  const Montgomery& field() const { return mg_; }

  // Natural order in, bit-reversed order out.
  void forward(std::vector<u64>& a) const {
    for (std::size_t len = n_ / 2; len >= 1; len >>= 1) {
      const std::size_t stride = n_ / (2 * len);
      for (std::size_t i = 0; i < n_; i += 2 * len) {
        for (std::size_t j = 0; j < len; ++j) {
          const u64 u = a[i + j];
          const u64 v = a[i + j + len];
          a[i + j] = mg_.add(u, v);
          a[i + j + len] = mg_.mul(mg_.sub(u, v), table_[j * stride]);
        }
      }
    }
  }

  // Bit-reversed order in, natural order out; leaves plain residues.
  void inverse(std::vector<u64>& a) const {
    const u64 p = mg_.modulus();
    for (std::size_t len = 1; len < n_; len <<= 1) {
      const std::size_t stride = n_ / (2 * len);
      for (std::size_t i = 0; i < n_; i += 2 * len) {
        for (std::size_t j = 0; j < len; ++j) {
          const std::size_t t = j * stride;
          // w^-t = -w^(n/2 - t)
          const u64 tw = t == 0 ? table_[0] : p - table_[n_ / 2 - t];
          const u64 u = a[i + j];
          const u64 v = mg_.mul(a[i + j + len], tw);
          a[i + j] = mg_.add(u, v);
          a[i + j + len] = mg_.sub(u, v);
        }
      }
    }
    for (auto& x : a) x = mg_.mul(x, n_inv_);
  }

 private:
  Montgomery mg_;
  std::size_t n_;
  std::vector<u64> table_;
  u64 n_inv_;
};

void load_residues(const PowerSeries& f, std::size_t len, const Montgomery& mg,
                   std::vector<u64>& out) {
  const u64 p = mg.modulus();
  std::fill(out.begin(), out.end(), 0);
  if (f.is_compact()) {
    const auto c = f.compact();
    for (std::size_t i = 0; i < len; ++i) {
      const std::int64_t x = c[i];
      u64 r;
      if (x >= 0) {
        r = static_cast<u64>(x) % p;
      } else {
        const u64 m = (u64(0) - static_cast<u64>(x)) % p;
        r = m == 0 ? 0 : p - m;
      }
      out[i] = mg.to_mont(r);
    }
  } else {
    const auto c = f.wide();
    for (std::size_t i = 0; i < len; ++i)
      out[i] = mg.to_mont(mpz_fdiv_ui(c[i].get_mpz_t(), p));
  }
}

}  // namespace

PowerSeries multiply_ntt(const PowerSeries& f, const PowerSeries& g, std::size_t order) {
  const bool square = &f == &g;
  const std::size_t len_f = effective_size(f, order + 1);
  const std::size_t len_g = square ? len_f : effective_size(g, order + 1);
  if (len_f == 0 || len_g == 0) return PowerSeries::zero(order);

  // |c_n| <= min(len) * max|f| * max|g|; the prime product must exceed 2B.
  const std::size_t bound_bits =
      static_cast<std::size_t>(std::bit_width(std::min(len_f, len_g))) + f.max_bits() +
      (square ? f.max_bits() : g.max_bits());
  const std::size_t primes = (bound_bits + 2 + kPrimeBits - 1) / kPrimeBits;

  const std::size_t out_len = std::min(order + 1, len_f + len_g - 1);
  const std::size_t n = std::bit_ceil(len_f + len_g - 1);
  if (std::countr_zero(n) > kTwoAdicity) throw std::length_error("transform length too large");

  std::vector<NttPrime> ps;
  std::vector<std::vector<u64>> residues(primes);
  std::vector<u64> fa(n);
  std::vector<u64> fb(square ? 0 : n);
  for (std::size_t t = 0; t < primes; ++t) {
    ps.push_back(prime_at(t));
    const Transform tr(ps.back(), n);
    const auto& mg = tr.field();
    load_residues(f, len_f, mg, fa);
    tr.forward(fa);
    if (square) {
      for (auto& x : fa) x = mg.mul(x, x);
    } else {
      load_residues(g, len_g, mg, fb);
      tr.forward(fb);
      for (std::size_t i = 0; i < n; ++i) fa[i] = mg.mul(fa[i], fb[i]);
    }
    tr.inverse(fa);
    residues[t].assign(fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(out_len));
  }
  fa = {};
  fb = {};

  SeriesBuilder out(order + 1);
  if (primes == 1) {
    const u64 p = ps[0].p;
    for (std::size_t i = 0; i < out_len; ++i) {
      const u64 v = residues[0][i];
      out.push(v > p / 2 ? i128(v) - i128(p) : i128(v));
    }
  } else {
    // Garner: x = d_0 + d_1 p_0 + d_2 p_0 p_1 + ...
    std::vector<std::vector<u64>> prefix(primes);  // prefix[j][i] = p_0..p_{i-1} mod p_j
    std::vector<u64> prefix_inv(primes, 1);
    for (std::size_t j = 1; j < primes; ++j) {
      prefix[j].assign(j + 1, 1);
      for (std::size_t i = 1; i <= j; ++i)
        prefix[j][i] = mulmod(prefix[j][i - 1], ps[i - 1].p % ps[j].p, ps[j].p);
      prefix_inv[j] = powmod(prefix[j][j], ps[j].p - 2, ps[j].p);
    }
    Integer full(1);
    for (const auto& pr : ps) full *= static_cast<unsigned long>(pr.p);
    const Integer half = full / 2;
    const u128 full2 = static_cast<u128>(ps[0].p) * ps[1].p;

    std::vector<u64> d(primes);
    for (std::size_t i = 0; i < out_len; ++i) {
      d[0] = residues[0][i];
      for (std::size_t j = 1; j < primes; ++j) {
        const u64 pj = ps[j].p;
        u64 acc = 0;
        for (std::size_t m = 0; m < j; ++m)
          acc = (acc + mulmod(d[m] % pj, prefix[j][m], pj)) % pj;
        const u64 diff = residues[j][i] >= acc ? residues[j][i] - acc : residues[j][i] + pj - acc;
        d[j] = mulmod(diff, prefix_inv[j], pj);
      }
      if (primes == 2) {
        // p_0 p_1 < 2^124, so both signs fit in i128.
        const u128 x = d[0] + static_cast<u128>(d[1]) * ps[0].p;
        out.push(x > full2 / 2 ? -static_cast<i128>(full2 - x) : static_cast<i128>(x));
      } else {
        Integer x(static_cast<unsigned long>(d[primes - 1]));
        for (std::size_t j = primes - 1; j-- > 0;) {
          x *= static_cast<unsigned long>(ps[j].p);
          x += static_cast<unsigned long>(d[j]);
        }
        if (x > half) x -= full;
        out.push(std::move(x));
      }
    }
  }
  for (std::size_t i = out_len; i <= order; ++i) out.push(i128(0));
  return out.finish();
}

}  // namespace repcount
