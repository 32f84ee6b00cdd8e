#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qp/ring.hpp"

namespace qp {

enum class SplitClass { Inert, Ramified, Split };

std::string_view to_string(SplitClass c);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Deterministic below 2^64; 40 random-base Miller-Rabin rounds above.
bool is_prime(BigInt const& n);

/// Behaviour of the integer prime p in the ring. Odd p uses the Euler criterion,
/// p = 2 the fixed table. Throws std::invalid_argument when p is not prime.
SplitClass classify_prime(Ring ring, BigInt const& p);

/// r with r^2 = a (mod p) and 0 <= r <= (p-1)/2, or nullopt for a nonresidue.
/// p must be an odd prime (Tonelli-Shanks).
std::optional<std::uint64_t> sqrt_mod(std::int64_t a, std::uint64_t p);
std::optional<BigInt> sqrt_mod(BigInt const& a, BigInt const& p);

/// Canonical prime pi in A(d) with norm(pi) == p, for p ramified or split.
/// Throws std::invalid_argument for inert or composite p.
QuadInt prime_above(Ring ring, BigInt const& p);

struct PrimePower {
  BigInt p;
  unsigned e;
  bool operator==(PrimePower const&) const = default;
};

struct IntegerFactorization {
  BigInt n;
  std::vector<PrimePower> factors;  // strictly increasing p

  BigInt product() const;
};

/// Trial division to 1e6, then Brent's Pollard rho with perfect-power detection.
IntegerFactorization factor_integer(BigInt const& n);

/// Sorted primes below `limit`.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

}  // namespace qp
