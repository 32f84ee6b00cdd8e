#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qp/element_text.hpp"
#include "qp/factorize.hpp"
#include "qp/splitting.hpp"

using namespace qp;

namespace {

QuadInt el(int d, char const* text) { return parse_element(Ring(d), text); }

std::vector<BigInt> sorted_norms(std::vector<QuadInt> const& v) {
  std::vector<BigInt> out;
  for (auto const& w : v) out.push_back(norm(w));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_up_to_order(std::vector<QuadInt> a, std::vector<QuadInt> b) {
  std::sort(a.begin(), a.end(), canonical_less);
  std::sort(b.begin(), b.end(), canonical_less);
  return a == b;
}

unsigned valuation(BigInt n, BigInt const& q) {
  unsigned v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("factorization of 9+3i") {
  auto const f = factor_element(el(-1, "9+3i"));
  CHECK(f.expand() == el(-1, "9+3i"));
  REQUIRE(f.parts.size() == 3);
  std::vector<QuadInt> primes;
  for (auto const& p : f.parts) {
    CHECK(p.exponent == 1);
    primes.push_back(p.prime);
  }
  // 3, 1+i and 2-i up to association
  std::vector<QuadInt> expected{canonicalize(el(-1, "3")).rep, canonicalize(el(-1, "1+i")).rep,
                                canonicalize(el(-1, "2-i")).rep};
  CHECK(same_up_to_order(primes, expected));
  // ordered by norm
  CHECK(norm(f.parts[0].prime) == 2);
  CHECK(norm(f.parts[1].prime) == 5);
  CHECK(norm(f.parts[2].prime) == 9);
}

TEST_CASE("factorization of units and of 2") {
  for (int d : kUfdDiscriminants) {
    for (auto const& u : units(Ring(d))) {
      auto const f = factor_element(u);
      CHECK(f.unit == u);
      CHECK(f.parts.empty());
    }
  }
  auto const f = factor_element(el(-1, "2"));
  CHECK(f.unit == el(-1, "-i"));
  REQUIRE(f.parts.size() == 1);
  CHECK(f.parts[0].prime == el(-1, "1+i"));
  CHECK(f.parts[0].exponent == 2);
  CHECK(el(-1, "-i") * pow(el(-1, "1+i"), 2) == el(-1, "2"));
  CHECK_THROWS_AS(factor_element(QuadInt(Ring(-1), 0)), std::invalid_argument);

  // 2 splits in d = -7 into the two conjugate primes
  auto const g = factor_element(el(-7, "2"));
  REQUIRE(g.parts.size() == 2);
  CHECK(g.parts[0].prime == el(-7, "(-1+s)/2"));
  CHECK(g.parts[1].prime == el(-7, "(1+s)/2"));
}

TEST_CASE("rho") {
  CHECK(rho(el(-1, "1+i"), el(-1, "9+3i")) == 1);
  CHECK(rho(el(-1, "1+i"), el(-1, "1")) == 0);
  CHECK(rho(el(-1, "1+i"), el(-1, "8")) == 6);
  CHECK(el(-1, "-i") * el(-1, "-i") * el(-1, "-i") * pow(el(-1, "1+i"), 6) == el(-1, "8"));
  CHECK(rho(el(-1, "3"), el(-1, "9+3i")) == 1);
  CHECK(rho(el(-1, "2+i"), el(-1, "5")) == 1);
  CHECK_THROWS_AS(rho(el(-1, "2"), el(-1, "8")), std::invalid_argument);
  CHECK_THROWS_AS(rho(el(-1, "5"), el(-1, "8")), std::invalid_argument);
  CHECK_THROWS_AS(rho(el(-1, "1"), el(-1, "8")), std::invalid_argument);
  CHECK_THROWS_AS(rho(el(-1, "1+i"), el(-1, "0")), std::invalid_argument);
  CHECK(is_prime_element(el(-1, "3")));
  CHECK(is_prime_element(el(-1, "3i")));
  CHECK_FALSE(is_prime_element(el(-1, "5")));
  CHECK(is_prime_element(el(-7, "(1+s)/2")));
}

TEST_CASE("divisor listings") {
  auto const divs = divisors_up_to_associates(factor_element(el(-1, "9+3i")));
  CHECK(divs.size() == 8);
  CHECK(sorted_norms(divs) == std::vector<BigInt>{1, 2, 5, 9, 10, 18, 45, 90});
  BigInt sum = 0;
  for (auto const& w : divs) sum += norm(w);
  CHECK(sum == 180);

  auto const one = divisors_up_to_associates(factor_element(el(-3, "(1+s)/2")));
  CHECK(one == std::vector<QuadInt>{QuadInt(Ring(-3), 1)});

  auto const five = divisors_up_to_associates(factor_element(el(-1, "5")));
  std::vector<QuadInt> const expected{el(-1, "1"), canonicalize(el(-1, "2+i")).rep,
                                      canonicalize(el(-1, "2-i")).rep, el(-1, "5")};
  CHECK(same_up_to_order(five, expected));
  CHECK(five.front() == el(-1, "1"));
  CHECK(five.back() == el(-1, "5"));
}

TEST_CASE("factorization round trip, norm <= 1e8") {
  std::mt19937_64 rng(17);
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    CAPTURE(d);
    for (int i = 0; i < 10000; ++i) {
      QuadInt const z = oracle::random_bounded(ring, rng, 100'000'000);
      auto const f = factor_element(z);
      REQUIRE(f.expand() == z);
      REQUIRE(is_unit(f.unit));
      for (std::size_t j = 0; j < f.parts.size(); ++j) {
        REQUIRE(is_canonical(f.parts[j].prime));
        REQUIRE(is_prime_element(f.parts[j].prime));
        REQUIRE(f.parts[j].exponent >= 1);
        if (j > 0) REQUIRE(canonical_less(f.parts[j - 1].prime, f.parts[j].prime));
      }
      // rho recovers every exponent
      if (i % 10 == 0) {
        for (auto const& [pi, e] : f.parts) REQUIRE(rho(pi, z) == e);
      }
    }
  }
}

TEST_CASE("inert primes appear with half their norm valuation") {
  std::mt19937_64 rng(5);
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    std::vector<std::uint32_t> inert;
    for (std::uint32_t p : primes_below(60)) {
      if (classify_prime(ring, p) == SplitClass::Inert) inert.push_back(p);
    }
    REQUIRE(!inert.empty());
    for (int i = 0; i < 1000; ++i) {
      // bias towards inert factors so the law is exercised
      QuadInt z = oracle::random_bounded(ring, rng, 10000);
      z *= pow(QuadInt(ring, inert[rng() % inert.size()]), 1 + rng() % 3);
      BigInt const nz = norm(z);
      for (std::uint32_t q : inert) {
        unsigned const v = valuation(nz, q);
        REQUIRE(v % 2 == 0);
        REQUIRE(rho(QuadInt(ring, q), z) == v / 2);
      }
    }
  }
}

TEST_CASE("divisors match the brute-force lattice scan for norm <= 1e4") {
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    CAPTURE(d);
    auto const table = oracle::sector_by_norm(ring, 10000);
    for (auto const& [m, elems] : table) {
      for (auto const& z : elems) {
        auto const f = factor_element(z);
        auto const listed = divisors_up_to_associates(f);
        std::size_t count = 1;
        for (auto const& p : f.parts) count *= p.exponent + 1;
        REQUIRE(listed.size() == count);
        REQUIRE(same_up_to_order(listed, oracle::divisors(z, table)));
        REQUIRE(std::is_sorted(listed.begin(), listed.end(), canonical_less));
      }
    }
  }
}

TEST_CASE("conjugation permutes prime parts") {
  std::mt19937_64 rng(23);
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    for (int i = 0; i < 1000; ++i) {
      QuadInt const z = oracle::random_bounded(ring, rng, 1'000'000);
      auto const f = factor_element(z);
      auto const g = factor_element(conj(z));
      std::vector<QuadInt> mapped, direct;
      std::multiset<unsigned> fe, ge;
      for (auto const& [pi, e] : f.parts) {
        mapped.push_back(canonicalize(conj(pi)).rep);
        fe.insert(e);
      }
      for (auto const& [pi, e] : g.parts) {
        direct.push_back(pi);
        ge.insert(e);
      }
      REQUIRE(same_up_to_order(mapped, direct));
      REQUIRE(fe == ge);
      for (auto const& [pi, e] : f.parts) REQUIRE(rho(canonicalize(conj(pi)).rep, conj(z)) == e);
    }
  }
}
