#include "qp/prospect.hpp"

#include <algorithm>
#include <cmath>

#include "qp/abundancy.hpp"
#include "qp/element_text.hpp"
#include "qp/splitting.hpp"

namespace qp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 isqrt_u64(u64 v) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_t(unsigned t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
}

}  // namespace

std::string to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::IntegerReduction:
      return "IntegerReduction";
    case SearchMethod::DirectScan:
      return "DirectScan";
    case SearchMethod::MersenneFilter:
      return "MersenneFilter";
  }
  return "?";
}

std::vector<QuadInt> integer_reduction(Ring ring, unsigned t, u64 bound) {
  if (bound > kMaxReductionBound) {
    throw std::invalid_argument("integer reduction bound exceeds " +
                                std::to_string(kMaxReductionBound));
  }
  u64 const limit = isqrt_u64(bound);
  // Smallest prime factor sieve over 1..limit.
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  std::vector<std::int8_t> inert(limit + 1, -1);
  auto is_inert = [&](u64 p) {
    if (inert[p] < 0) inert[p] = classify_prime(ring, BigInt(static_cast<unsigned long>(p))) == SplitClass::Inert;
    return inert[p] == 1;
  };

  std::vector<QuadInt> hits;
  for (u64 r = 1; r <= limit; ++r) {
    u128 sigma = 1;
    u64 rest = r;
    bool all_inert = true;
    while (rest > 1) {
      u64 const p = spf[rest];
      if (!is_inert(p)) {
        all_inert = false;
        break;
      }
      u128 term = 1, sum = 1;
      while (rest % p == 0) {
        rest /= p;
        term *= p;
        sum += term;
      }
      sigma *= sum;
    }
    if (!all_inert || sigma != static_cast<u128>(t) * r) continue;
    BigInt const rb(static_cast<unsigned long>(r));
    if (classical_abundancy(rb) != Rational(t)) {
      throw InternalInconsistency("sieve and exact sigma disagree at r=" + rb.get_str());
    }
    hits.emplace_back(ring, rb);
  }
  return hits;
}

SearchReport search_t_perfect(Ring ring, unsigned t, u64 bound, SearchOptions const& options) {
  check_t(t);
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  SearchReport report;
  report.d = ring.d();
  report.n = 1;
  report.t = t;
  report.bound = BigInt(static_cast<unsigned long>(bound));
  report.method = SearchMethod::IntegerReduction;
  report.hits = integer_reduction(ring, t, bound);
  for (QuadInt const& h : report.hits) {
    if (!is_n_powerfully_t_perfect(h, 1, BigInt(t))) {
      throw InternalInconsistency("reduction hit " + format_element(h) + " is not t-perfect");
    }
  }
  if (bound <= options.direct_scan_limit) {
    auto const direct = direct_scan(ring, 1, t, bound, options);
    report.cross_check = direct == report.hits ? CrossCheck::Agreed : CrossCheck::Disagreed;
  }
  return report;
}

SearchReport search_powerfully(Ring ring, int n, unsigned t, u64 bound,
                               SearchOptions const& options) {
  check_t(t);
  SearchReport report;
  report.d = ring.d();
  report.n = n;
  report.t = t;
  report.bound = BigInt(static_cast<unsigned long>(bound));
  report.method = SearchMethod::DirectScan;
  report.hits = direct_scan(ring, n, t, bound, options);
  if (n >= 3 && !report.hits.empty()) {
    throw InternalInconsistency("found an " + std::to_string(n) + "-powerfully " +
                                std::to_string(t) + "-perfect element " +
                                format_element(report.hits.front()) +
                                ", which cannot exist for n >= 3");
  }
  return report;
}

SearchReport mersenne_perfects(Ring ring, int p_max) {
  if (p_max > 127) throw std::invalid_argument("p_max must not exceed 127");
  SearchReport report;
  report.d = ring.d();
  report.n = 1;
  report.t = 2;
  report.method = SearchMethod::MersenneFilter;
  bool const two_inert = classify_prime(ring, 2) == SplitClass::Inert;
  for (int p = 2; p <= p_max; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    BigInt mersenne;
    mpz_ui_pow_ui(mersenne.get_mpz_t(), 2, static_cast<unsigned long>(p));
    mersenne -= 1;
    if (!is_prime(mersenne)) continue;
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), mersenne.get_mpz_t(), static_cast<unsigned long>(p - 1));
    report.bound = r * r;
    if (!two_inert || classify_prime(ring, mersenne) != SplitClass::Inert) continue;
    QuadInt z(ring, r);
    if (!is_n_powerfully_t_perfect(z, 1, 2)) {
      throw InternalInconsistency("2^" + std::to_string(p - 1) + "(2^" + std::to_string(p) +
                                  "-1) failed the exact perfection test");
    }
    report.hits.push_back(std::move(z));
  }
  return report;
}

}  // namespace qp
