#include "doctest.h"
#include "oracles.hpp"
#include "qp/element_text.hpp"
#include "qp/splitting.hpp"

using namespace qp;

TEST_CASE("classification examples") {
  CHECK(classify_prime(Ring(-7), 2) == SplitClass::Split);
  CHECK(classify_prime(Ring(-1), 3) == SplitClass::Inert);
  CHECK(classify_prime(Ring(-1), 2) == SplitClass::Ramified);
  CHECK(classify_prime(Ring(-2), 2) == SplitClass::Ramified);
  CHECK(classify_prime(Ring(-163), 163) == SplitClass::Ramified);
  CHECK(classify_prime(Ring(-11), 2) == SplitClass::Inert);
  CHECK(classify_prime(Ring(-3), 2) == SplitClass::Inert);
  CHECK(classify_prime(Ring(-1), 5) == SplitClass::Split);
  CHECK(to_string(SplitClass::Ramified) == "ramified");
  for (long bad : {0L, 1L, 4L, 9L, 91L, -7L}) CHECK_THROWS_AS(classify_prime(Ring(-1), bad), std::invalid_argument);
}

TEST_CASE("inert primes of d = -11 lie in {2, 6, 7, 8, 10} mod 11") {
  for (std::uint32_t p : primes_below(10000)) {
    bool const listed = p % 11 == 2 || p % 11 == 6 || p % 11 == 7 || p % 11 == 8 || p % 11 == 10;
    CHECK((classify_prime(Ring(-11), p) == SplitClass::Inert) == listed);
  }
}

TEST_CASE("Euler criterion agrees with brute-force residues") {
  for (int d : kUfdDiscriminants) {
    for (std::uint32_t p : primes_below(2000)) {
      if (p == 2) continue;
      long const dm = ((d % long(p)) + p) % p;
      bool square = false;
      for (long r = 0; r < long(p) && !square; ++r) square = r * r % p == dm;
      SplitClass const expected =
          dm == 0 ? SplitClass::Ramified : square ? SplitClass::Split : SplitClass::Inert;
      CHECK(classify_prime(Ring(d), p) == expected);
    }
  }
}

TEST_CASE("modular square roots") {
  CHECK(sqrt_mod(-1, 5) == std::optional<std::uint64_t>(2));
  CHECK_FALSE(sqrt_mod(-1, 3));
  CHECK(sqrt_mod(0, 7) == std::optional<std::uint64_t>(0));
  CHECK_THROWS_AS(sqrt_mod(3, 2), std::invalid_argument);
  CHECK(sqrt_mod(BigInt(-1), BigInt(5)) == std::optional<BigInt>(2));

  std::mt19937_64 rng(99);
  auto const primes = primes_below(1'000'000);
  std::uniform_int_distribution<std::size_t> pick(1, primes.size() - 1);
  int pairs = 0;
  while (pairs < 100) {
    int const d = kUfdDiscriminants[rng() % kUfdDiscriminants.size()];
    std::uint64_t const p = primes[pick(rng)];
    if (classify_prime(Ring(d), p) != SplitClass::Split) continue;
    ++pairs;
    auto r = sqrt_mod(d, p);
    REQUIRE(r);
    CHECK(*r <= (p - 1) / 2);
    auto const dm = static_cast<std::uint64_t>(((d % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p));
    CHECK(*r * *r % p == dm);
    auto rb = sqrt_mod(BigInt(d), BigInt(static_cast<unsigned long>(p)));
    REQUIRE(rb);
    CHECK(*rb == BigInt(static_cast<unsigned long>(*r)));
  }
  // large prime modulus: 2^127 - 1 = 3 (mod 4)
  BigInt m127;
  mpz_ui_pow_ui(m127.get_mpz_t(), 2, 127);
  m127 -= 1;
  auto big = sqrt_mod(BigInt(4), m127);
  REQUIRE(big);
  CHECK(*big == 2);
}

TEST_CASE("primes above split and ramified primes") {
  auto el = [](int d, char const* s) { return parse_element(Ring(d), s); };
  CHECK(prime_above(Ring(-1), 5) == el(-1, "2+i"));
  CHECK(prime_above(Ring(-7), 2) == el(-7, "(1+s)/2"));
  CHECK(prime_above(Ring(-11), 3) == el(-11, "(1+s)/2"));
  CHECK(prime_above(Ring(-1), 2) == el(-1, "1+i"));
  CHECK(prime_above(Ring(-2), 2) == el(-2, "s"));
  CHECK(norm(prime_above(Ring(-3), 3)) == 3);
  CHECK_THROWS_AS(prime_above(Ring(-1), 3), std::invalid_argument);
  CHECK_THROWS_AS(prime_above(Ring(-1), 15), std::invalid_argument);

  // exhaustive a^2 + 7 b^2 = 8 over |a|, |b| <= 2 gives the four elements (+-1 +- s)/2
  int solutions = 0;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) solutions += a * a + 7 * b * b == 8;
  }
  CHECK(solutions == 4);
}

TEST_CASE("splitting invariants for p < 1000") {
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    for (std::uint32_t p : primes_below(1000)) {
      SplitClass const c = classify_prime(ring, p);
      if (c == SplitClass::Inert) continue;
      QuadInt const pi = prime_above(ring, p);
      CHECK(norm(pi) == p);
      CHECK(is_canonical(pi));
      CHECK(is_associated(pi, conj(pi)) == (c == SplitClass::Ramified));
    }
  }
}

TEST_CASE("primality") {
  auto const sieve = primes_below(100000);
  std::vector<bool> prime(100000, false);
  for (auto p : sieve) prime[p] = true;
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == prime[n]);
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
  CHECK_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2,3,5,7
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, 127);
  CHECK(is_prime(BigInt(m - 1)));
  CHECK_FALSE(is_prime(BigInt(m + 1)));
  mpz_ui_pow_ui(m.get_mpz_t(), 2, 89);
  BigInt const m89 = m - 1;
  CHECK(is_prime(m89));
  CHECK_FALSE(is_prime(BigInt(m89 * m89)));
  CHECK_FALSE(is_prime(BigInt(-7)));
}

TEST_CASE("integer factorization examples") {
  auto f = factor_integer(90);
  CHECK(f.factors == std::vector<PrimePower>{{2, 1}, {3, 2}, {5, 1}});
  CHECK(factor_integer(1).factors.empty());
  CHECK(factor_integer(131071).factors == std::vector<PrimePower>{{131071, 1}});
  CHECK_THROWS_AS(factor_integer(0), std::invalid_argument);
  CHECK_THROWS_AS(factor_integer(-6), std::invalid_argument);

  BigInt m61, m31, m89;
  mpz_ui_pow_ui(m61.get_mpz_t(), 2, 61);
  mpz_ui_pow_ui(m31.get_mpz_t(), 2, 31);
  mpz_ui_pow_ui(m89.get_mpz_t(), 2, 89);
  m61 -= 1;
  m31 -= 1;
  m89 -= 1;
  auto g = factor_integer(m61 * m31 * m31);
  CHECK(g.factors == std::vector<PrimePower>{{m31, 2}, {m61, 1}});
  auto h = factor_integer(m89 * m89 * m89);
  CHECK(h.factors == std::vector<PrimePower>{{m89, 3}});
  // two primes just above the trial-division limit
  BigInt const a = 1000003, b = 1000033;
  CHECK(factor_integer(a * b * 8).factors == std::vector<PrimePower>{{2, 3}, {a, 1}, {b, 1}});
  // norm of 2^16 (2^17 - 1)
  BigInt r = BigInt(65536) * 131071;
  CHECK(factor_integer(r * r).factors == std::vector<PrimePower>{{2, 32}, {131071, 2}});
}

TEST_CASE("factorization round trip on random integers below 1e12") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> dist(1, 999'999'999'999ULL);
  for (int i = 0; i < 1000; ++i) {
    BigInt const n(static_cast<unsigned long>(dist(rng)));
    auto const f = factor_integer(n);
    REQUIRE(f.product() == n);
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      REQUIRE(oracle::is_prime_trial(f.factors[j].p.get_ui()));
      REQUIRE(f.factors[j].e >= 1);
      if (j > 0) REQUIRE(f.factors[j - 1].p < f.factors[j].p);
    }
  }
}
