#pragma once

#include <vector>

#include "qp/ring.hpp"

namespace qp {

struct PrimePart {
  QuadInt prime;  // canonical, in A(d)
  unsigned exponent;
};

/// z = unit * prod(prime^exponent), parts ordered by (norm, x, y).
struct ElementFactorization {
  QuadInt unit;
  std::vector<PrimePart> parts;

  Ring ring() const { return unit.ring(); }
  QuadInt expand() const;
};

ElementFactorization factor_element(QuadInt const& z);

/// True when pi is prime in its ring: norm(pi) is a ramified or split integer
/// prime, or norm(pi) = q^2 with q inert and pi associated to q.
bool is_prime_element(QuadInt const& pi);

/// Largest k with pi^k | z. Throws when pi is not prime or z == 0.
unsigned rho(QuadInt const& pi, QuadInt const& z);

/// Canonical representatives of all divisors, ordered by (norm, x, y).
std::vector<QuadInt> divisors_up_to_associates(ElementFactorization const& f);

}  // namespace qp
