#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "qp/abundancy.hpp"
#include "qp/element_text.hpp"
#include "qp/prospect.hpp"
#include "qp/records.hpp"
#include "qp/splitting.hpp"

namespace qp {

namespace {

using i64 = long long;
using u64 = std::uint64_t;
using i128 = __int128;

constexpr u64 kChunk = 1U << 16;
constexpr u64 kMinShardWidth = 1U << 20;
constexpr u64 kMaxShards = 256;
constexpr int kMaxDistinctSmall = 12;
constexpr double kScreenTolerance = 1e-9;

u64 isqrt_u64(u64 v) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

double geometric(double ratio, unsigned terms_after_one) {
  double sum = 1.0, term = 1.0;
  for (unsigned j = 0; j < terms_after_one; ++j) {
    term *= ratio;
    sum += term;
  }
  return sum;
}

struct SmallPrime {
  u64 p;
  SplitClass cls;
  i64 px = 0;  // canonical prime above p (half-coordinates), non-inert only
  i64 py = 0;
  double half_ratio;  // p^(-n/2)
  double full_ratio;  // p^(-n)
};

class Scanner {
 public:
  Scanner(Ring ring, int n, unsigned t, u64 bound) : ring_(ring), n_(n), t_(t) {
    u64 const root = isqrt_u64(bound);
    for (std::uint32_t p : primes_below(static_cast<std::uint32_t>(root + 1))) {
      SmallPrime sp{p, classify_prime(ring, p), 0, 0, std::pow(double(p), -n / 2.0),
                    std::pow(double(p), -double(n))};
      if (sp.cls != SplitClass::Inert) {
        QuadInt const pi = prime_above(ring, p);
        sp.px = pi.x().get_si();
        sp.py = pi.y().get_si();
      }
      primes_.push_back(sp);
    }
  }

  std::vector<QuadInt> scan(u64 lo, u64 hi) const {
    std::vector<QuadInt> hits;
    for (u64 a = lo; a <= hi; a += kChunk) {
      u64 const b = std::min(hi + 1, a + kChunk);
      scan_chunk(a, b, hits);
    }
    std::sort(hits.begin(), hits.end(), canonical_less);
    return hits;
  }

 private:
  struct Factors {
    std::vector<u64> rest;
    std::vector<std::uint32_t> index;
    std::vector<std::uint8_t> exponent;
    std::vector<std::uint8_t> count;
  };

  void sieve(u64 a, u64 b, Factors& f) const {
    u64 const size = b - a;
    f.rest.resize(size);
    f.index.assign(size * kMaxDistinctSmall, 0);
    f.exponent.assign(size * kMaxDistinctSmall, 0);
    f.count.assign(size, 0);
    for (u64 i = 0; i < size; ++i) f.rest[i] = a + i;
    for (std::uint32_t k = 0; k < primes_.size(); ++k) {
      u64 const p = primes_[k].p;
      if (p * p >= b) break;
      for (u64 m = (a + p - 1) / p * p; m < b; m += p) {
        u64 const i = m - a;
        std::uint8_t e = 0;
        do {
          f.rest[i] /= p;
          ++e;
        } while (f.rest[i] % p == 0);
        u64 const slot = i * kMaxDistinctSmall + f.count[i]++;
        f.index[slot] = k;
        f.exponent[slot] = e;
      }
    }
  }

  // Number of times the prime above sp divides (x + y sqrt d)/2, at most cap.
  unsigned divisions(i64 x, i64 y, SmallPrime const& sp, unsigned cap) const {
    i128 const d = ring_.d();
    auto const p = static_cast<i128>(sp.p);
    i128 cx = x, cy = y;
    unsigned k = 0;
    while (k < cap) {
      // (cx + cy s)/2 * conj(pi) / p
      i128 const nx = (cx * sp.px - d * cy * sp.py) / 2;
      i128 const ny = (cy * sp.px - cx * sp.py) / 2;
      if (nx % p != 0 || ny % p != 0) break;
      i128 const qx = nx / p, qy = ny / p;
      bool const ok = ring_.half_integral() ? ((qx - qy) % 2 == 0) : (qx % 2 == 0 && qy % 2 == 0);
      if (!ok) break;
      cx = qx;
      cy = qy;
      ++k;
    }
    return k;
  }

  double screen_index(i64 x, i64 y, Factors const& f, u64 i) const {
    double value = 1.0;
    for (unsigned j = 0; j < f.count[i]; ++j) {
      SmallPrime const& sp = primes_[f.index[i * kMaxDistinctSmall + j]];
      unsigned const e = f.exponent[i * kMaxDistinctSmall + j];
      switch (sp.cls) {
        case SplitClass::Inert:
          if (e % 2 != 0) throw InternalInconsistency("odd valuation of an inert prime in a norm");
          value *= geometric(sp.full_ratio, e / 2);
          break;
        case SplitClass::Ramified:
          value *= geometric(sp.half_ratio, e);
          break;
        case SplitClass::Split: {
          unsigned const a = e == 1 ? 1 : divisions(x, y, sp, e);
          value *= geometric(sp.half_ratio, a) * geometric(sp.half_ratio, e - a);
          break;
        }
      }
    }
    // A leftover factor exceeds the square root of the norm, so it is a prime
    // with valuation one; inert primes have even valuation, hence it is not inert.
    if (f.rest[i] > 1) value *= 1.0 + std::pow(double(f.rest[i]), -n_ / 2.0);
    return value;
  }

  void scan_chunk(u64 a, u64 b, std::vector<QuadInt>& hits) const {
    Factors f;
    sieve(a, b, f);
    u64 const abs_d = static_cast<u64>(ring_.abs_d());
    bool const half = ring_.half_integral();
    double const target = t_;
    for (u64 y = 0; abs_d * y * y < 4 * b; ++y) {
      if (!half && y % 2 != 0) continue;
      u64 const dy2 = abs_d * y * y;
      u64 const xhi = isqrt_u64(4 * b - 1 - dy2);
      u64 xlo = 0;
      if (4 * a > dy2) {
        u64 const need = 4 * a - dy2;
        xlo = isqrt_u64(need);
        if (xlo * xlo < need) ++xlo;
      }
      u64 const parity = half ? y % 2 : 0;
      if (xlo % 2 != parity) ++xlo;
      for (u64 x = xlo; x <= xhi; x += 2) {
        u64 const m = (x * x + dy2) / 4;
        if (m < a || m >= b) continue;
        for (int sign : {1, -1}) {
          if (sign < 0 && x == 0) continue;
          i64 const sx = sign * static_cast<i64>(x);
          auto const sy = static_cast<i64>(y);
          if (!ring_.in_sector(sx, sy)) continue;
          double const v = screen_index(sx, sy, f, m - a);
          if (std::abs(v - target) > kScreenTolerance * target) continue;
          QuadInt z = QuadInt::from_half(ring_, BigInt(static_cast<long>(sx)), BigInt(static_cast<long>(sy)));
          if (is_n_powerfully_t_perfect(z, n_, t_)) hits.push_back(std::move(z));
        }
      }
    }
  }

  Ring ring_;
  int n_;
  unsigned t_;
  std::vector<SmallPrime> primes_;
};

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  unsigned const hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

std::vector<std::pair<u64, u64>> plan_shards(u64 bound) {
  std::vector<std::pair<u64, u64>> out;
  if (bound == 0) return out;
  u64 const width = std::max(kMinShardWidth, (bound + kMaxShards - 1) / kMaxShards);
  for (u64 lo = 1; lo <= bound; lo += width) out.emplace_back(lo, std::min(bound, lo + width - 1));
  return out;
}

std::vector<QuadInt> merge_hits(std::vector<QuadInt> a, std::vector<QuadInt> const& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), canonical_less);
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<QuadInt> direct_scan(Ring ring, int n, unsigned t, u64 bound,
                                 SearchOptions const& options) {
  if (n < 1 || n > kMaxPower) throw std::invalid_argument("n must lie in [1, 64]");
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (bound > kMaxScanBound) {
    throw std::invalid_argument("direct scan bound exceeds " + std::to_string(kMaxScanBound));
  }
  auto const shards = plan_shards(bound);
  std::vector<std::optional<std::vector<QuadInt>>> results(shards.size());

  if (options.checkpoint) {
    std::map<std::pair<u64, u64>, std::vector<std::string> const*> done;
    auto const records = read_checkpoint(*options.checkpoint);
    for (auto const& r : records) {
      if (r.d == ring.d() && r.n == n && r.t == t) done[{r.norm_lo, r.norm_hi}] = &r.hits;
    }
    for (std::size_t i = 0; i < shards.size(); ++i) {
      auto it = done.find(shards[i]);
      if (it == done.end()) continue;
      std::vector<QuadInt> hits;
      for (auto const& s : *it->second) hits.push_back(parse_element(ring, s));
      results[i] = std::move(hits);
    }
  }

  Scanner const scanner(ring, n, t, bound);
  std::atomic<std::size_t> next{0};
  std::mutex checkpoint_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < shards.size(); i = next++) {
        if (results[i]) continue;
        auto hits = scanner.scan(shards[i].first, shards[i].second);
        if (options.checkpoint) {
          ShardRecord rec{ring.d(), n, t, shards[i].first, shards[i].second, {}};
          for (auto const& h : hits) rec.hits.push_back(format_element(h));
          std::lock_guard lock(checkpoint_mutex);
          append_checkpoint(*options.checkpoint, rec);
        }
        results[i] = std::move(hits);
      }
    } catch (...) {
      std::lock_guard lock(checkpoint_mutex);
      if (!failure) failure = std::current_exception();
      next = shards.size();
    }
  };
  unsigned const workers =
      std::min<unsigned>(resolve_workers(options.workers), static_cast<unsigned>(shards.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<QuadInt> hits;
  for (auto const& r : results) hits = merge_hits(std::move(hits), *r);
  return hits;
}

}  // namespace qp
