#pragma once

#include "qp/factorize.hpp"
#include "qp/surd.hpp"

namespace qp {

/// Largest |n| accepted by delta_n and index_n.
inline constexpr int kMaxPower = 64;

/// Sum of |x|^n over the divisors x of z taken up to association.
/// Evaluated multiplicatively from the prime factorization; n may be negative.
SurdSum delta_n(QuadInt const& z, int n);
SurdSum delta_n(ElementFactorization const& f, int n);

/// Exact abundancy index delta_n(z) / |z|^n.
struct Index {
  SurdSum value;
  int n;
  BigInt z_norm;
};

/// Computes delta_n(z) / |z|^n, rationalizing sqrt(norm) for odd n.
Index index_n(QuadInt const& z, int n);
Index index_n(ElementFactorization const& f, int n);

/// The same index evaluated as delta_{-n}(z).
SurdSum index_via_reciprocal_sum(QuadInt const& z, int n);

bool is_n_powerfully_t_perfect(QuadInt const& z, int n, BigInt const& t);

/// sigma_k(m) = sum of c^k over positive divisors c of m; k == 0 counts divisors.
Rational classical_sigma(BigInt const& m, int k);

/// sigma_1(m) / m.
Rational classical_abundancy(BigInt const& m);

}  // namespace qp
