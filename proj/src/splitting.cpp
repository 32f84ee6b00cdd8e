#include "qp/splitting.hpp"

#include <map>
#include <random>
#include <string>

namespace qp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::uint32_t kTrialLimit = 1'000'000;
constexpr int kBigMillerRabinRounds = 40;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool fits_u64(BigInt const& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(BigInt const& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

BigInt from_u64(u64 v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

std::vector<std::uint32_t> const& trial_primes() {
  static std::vector<std::uint32_t> const primes = primes_below(kTrialLimit + 1);
  return primes;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant of Pollard rho; m is odd, composite and not a prime power.
u64 brent_u64(u64 m) {
  if (m % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mulmod(v, v, m) + c) % m; };
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < kBatch && i < r - k; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, m);
        }
        g = gcd_u64(q, m);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == m) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, m);
      } while (g == 1);
    }
    if (g != m) return g;
  }
}

BigInt brent_big(BigInt const& m) {
  if (mpz_even_p(m.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](BigInt const& v) {
      BigInt out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
      return out;
    };
    BigInt y = 2, x = 2, ys = 2, g = 1, q = 1, diff;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < kBatch && i < r - k; ++i) {
          y = f(y);
          diff = abs(x - y);
          q = q * diff % m;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == m) {
      do {
        ys = f(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      } while (g == 1);
    }
    if (g != m) return g;
  }
}

void split_into(BigInt const& m, unsigned multiplicity, std::map<BigInt, unsigned>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    out[m] += multiplicity;
    return;
  }
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    std::size_t const bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        split_into(root, multiplicity * static_cast<unsigned>(k), out);
        return;
      }
    }
  }
  BigInt const f = fits_u64(m) ? from_u64(brent_u64(to_u64(m))) : brent_big(m);
  split_into(f, multiplicity, out);
  split_into(m / f, multiplicity, out);
}

}  // namespace

std::string_view to_string(SplitClass c) {
  switch (c) {
    case SplitClass::Inert:
      return "inert";
    case SplitClass::Ramified:
      return "ramified";
    case SplitClass::Split:
      return "split";
  }
  return "?";
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = static_cast<u64>(i) * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 dm = n - 1;
  int s = 0;
  while ((dm & 1U) == 0) {
    dm >>= 1U;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, dm, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(BigInt const& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt const n1 = n - 1;
  BigInt dm = n1;
  unsigned long const s = mpz_scan1(dm.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(dm.get_mpz_t(), dm.get_mpz_t(), s);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  BigInt const span = n - 3;
  for (int round = 0; round < kBigMillerRabinRounds; ++round) {
    BigInt a = rng.get_z_range(span) + 2;
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), dm.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

SplitClass classify_prime(Ring ring, BigInt const& p) {
  if (!is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
  int const d = ring.d();
  if (p == 2) {
    if (d == -1 || d == -2) return SplitClass::Ramified;
    if (d == -7) return SplitClass::Split;
    return SplitClass::Inert;
  }
  if (p <= -d && (-d) % p.get_ui() == 0) return SplitClass::Ramified;
  BigInt base = d;
  mpz_mod(base.get_mpz_t(), base.get_mpz_t(), p.get_mpz_t());
  BigInt const exp = (p - 1) / 2;
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  return r == 1 ? SplitClass::Split : SplitClass::Inert;
}

std::optional<BigInt> sqrt_mod(BigInt const& a_in, BigInt const& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw std::invalid_argument("sqrt_mod needs an odd prime modulus");
  }
  BigInt a = a_in;
  mpz_mod(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (a == 0) return BigInt(0);
  BigInt const p1 = p - 1;
  BigInt t;
  BigInt const half = p1 / 2;
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
  if (t != 1) return std::nullopt;

  // p - 1 = q * 2^s with q odd.
  BigInt q = p1;
  unsigned long const s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  BigInt z = 2;
  for (;; ++z) {
    mpz_powm(t.get_mpz_t(), z.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (t == p1) break;
  }
  BigInt c, r, b;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  BigInt const q1 = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), q1.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  BigInt const other = p - r;
  return other < r ? other : r;
}

std::optional<std::uint64_t> sqrt_mod(std::int64_t a, std::uint64_t p) {
  auto r = sqrt_mod(BigInt(static_cast<long>(a)), from_u64(p));
  if (!r) return std::nullopt;
  return to_u64(*r);
}

QuadInt prime_above(Ring ring, BigInt const& p) {
  SplitClass const cls = classify_prime(ring, p);
  if (cls == SplitClass::Inert) {
    throw std::invalid_argument(p.get_str() + " is inert in d=" + std::to_string(ring.d()) +
                                "; no prime of norm p exists");
  }
  BigInt const abs_d = ring.abs_d();
  std::optional<QuadInt> found;
  if (p == 2) {
    for (int y = 1; y <= 2 && !found; ++y) {
      for (int x = 4; x >= -4 && !found; --x) {
        if (!ring.valid_coordinates(x, y)) continue;
        QuadInt c = QuadInt::from_half(ring, x, y);
        if (norm(c) == 2) found = c;
      }
    }
  } else if (cls == SplitClass::Ramified) {
    found = QuadInt(ring, 0, 1);
  } else {
    // Cornacchia on a^2 + |d| b^2 = p (or 4p in the half-integral rings).
    BigInt root = *sqrt_mod(BigInt(ring.d()), p);
    BigInt const target = ring.half_integral() ? BigInt(4 * p) : p;
    BigInt a = ring.half_integral() ? BigInt(2 * p) : p;
    if (ring.half_integral() && mpz_even_p(root.get_mpz_t())) root = p - root;
    BigInt b = root;
    BigInt limit;
    mpz_sqrt(limit.get_mpz_t(), target.get_mpz_t());
    while (b > limit) {
      BigInt r = a % b;
      a = b;
      b = r;
    }
    BigInt const rest = target - b * b;
    if (rest % abs_d != 0) throw std::logic_error("Cornacchia failed for p=" + p.get_str());
    BigInt const c = rest / abs_d;
    BigInt sq;
    mpz_sqrt(sq.get_mpz_t(), c.get_mpz_t());
    if (sq * sq != c) throw std::logic_error("Cornacchia failed for p=" + p.get_str());
    found = ring.half_integral() ? QuadInt::from_half(ring, b, sq) : QuadInt(ring, b, sq);
  }
  if (!found || norm(*found) != p) {
    throw std::logic_error("failed to construct a prime above " + p.get_str());
  }
  return canonicalize(*found).rep;
}

BigInt IntegerFactorization::product() const {
  BigInt out = 1;
  for (auto const& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    out *= pe;
  }
  return out;
}

IntegerFactorization factor_integer(BigInt const& n) {
  if (n < 1) throw std::invalid_argument("factor_integer needs n >= 1, got " + n.get_str());
  IntegerFactorization out{n, {}};
  BigInt rem = n;
  bool exhausted = true;
  for (std::uint32_t p : trial_primes()) {
    if (BigInt(p) * p > rem) {
      exhausted = false;
      break;
    }
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
    out.factors.push_back({BigInt(p), e});
  }
  if (rem == 1) return out;
  if (!exhausted) {
    out.factors.push_back({rem, 1});
    return out;
  }
  std::map<BigInt, unsigned> large;
  split_into(rem, 1, large);
  for (auto& [p, e] : large) out.factors.push_back({p, e});
  return out;
}

}  // namespace qp
