#include "qp/abundancy.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "qp/splitting.hpp"

namespace qp {

namespace {

void check_power(int n) {
  if (std::abs(n) > kMaxPower) {
    throw std::invalid_argument("|n| must not exceed " + std::to_string(kMaxPower));
  }
}

// Local factor sum_{j=0}^{e} |pi|^(j n).
SurdSum local_factor(QuadInt const& pi, unsigned e, int n) {
  BigInt const np = norm(pi);
  SurdSum sum = 1;
  if (mpz_perfect_square_p(np.get_mpz_t())) {
    // Inert prime: |pi| = q is rational.
    BigInt q;
    mpz_sqrt(q.get_mpz_t(), np.get_mpz_t());
    BigInt step_pow;
    mpz_pow_ui(step_pow.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(std::abs(n)));
    Rational const ratio = n >= 0 ? Rational(step_pow) : Rational(BigInt(1), step_pow);
    Rational term = 1, acc = 1;
    for (unsigned j = 1; j <= e; ++j) {
      term *= ratio;
      acc += term;
    }
    acc.canonicalize();
    return SurdSum(acc);
  }
  for (unsigned j = 1; j <= e; ++j) sum += SurdSum::sqrt_power(np, static_cast<long>(j) * n);
  return sum;
}

}  // namespace

SurdSum delta_n(ElementFactorization const& f, int n) {
  check_power(n);
  SurdSum out = 1;
  for (auto const& [pi, e] : f.parts) out = out * local_factor(pi, e, n);
  return out;
}

SurdSum delta_n(QuadInt const& z, int n) {
  check_power(n);
  return delta_n(factor_element(z), n);
}

Index index_n(ElementFactorization const& f, int n) {
  if (n < 1) throw std::invalid_argument("index_n needs n >= 1");
  check_power(n);
  BigInt const z_norm = norm(f.expand());
  SurdSum value = delta_n(f, n);
  // |z|^n = norm^(n/2); for odd n multiply through by sqrt(norm).
  BigInt denom;
  if (n % 2 == 0) {
    mpz_pow_ui(denom.get_mpz_t(), z_norm.get_mpz_t(), static_cast<unsigned long>(n / 2));
  } else {
    mpz_pow_ui(denom.get_mpz_t(), z_norm.get_mpz_t(), static_cast<unsigned long>((n + 1) / 2));
    // norm(z) = prod p^v over integer primes; sqrt(norm) = outside * sqrt(radical).
    std::map<BigInt, unsigned long> valuation;
    for (auto const& [pi, e] : f.parts) {
      BigInt const np = norm(pi);
      if (mpz_perfect_square_p(np.get_mpz_t())) {
        BigInt q;
        mpz_sqrt(q.get_mpz_t(), np.get_mpz_t());
        valuation[q] += 2UL * e;
      } else {
        valuation[np] += e;
      }
    }
    BigInt outside = 1, radical = 1;
    for (auto const& [p, v] : valuation) {
      BigInt pv;
      mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v / 2);
      outside *= pv;
      if (v % 2 != 0) radical *= p;
    }
    value = value * SurdSum::term(Rational(outside), radical);
  }
  value *= Rational(BigInt(1), denom);
  return {std::move(value), n, z_norm};
}

Index index_n(QuadInt const& z, int n) {
  if (z.is_zero()) throw std::invalid_argument("index_n is undefined at zero");
  return index_n(factor_element(z), n);
}

SurdSum index_via_reciprocal_sum(QuadInt const& z, int n) {
  if (n < 1) throw std::invalid_argument("index needs n >= 1");
  return delta_n(z, -n);
}

bool is_n_powerfully_t_perfect(QuadInt const& z, int n, BigInt const& t) {
  auto const r = index_n(z, n).value.as_rational();
  return r && *r == Rational(t);
}

Rational classical_sigma(BigInt const& m, int k) {
  if (m < 1) throw std::invalid_argument("classical_sigma needs m >= 1");
  Rational out = 1;
  for (auto const& [p, e] : factor_integer(m).factors) {
    if (k == 0) {
      out *= e + 1;
      continue;
    }
    // (p^(k(e+1)) - 1) / (p^k - 1)
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(k)));
    Rational const base = k > 0 ? Rational(pk) : Rational(BigInt(1), pk);
    Rational power = 1;
    for (unsigned j = 0; j <= e; ++j) power *= base;
    Rational factor = (power - 1) / (base - 1);
    factor.canonicalize();
    out *= factor;
  }
  out.canonicalize();
  return out;
}

Rational classical_abundancy(BigInt const& m) {
  Rational out = classical_sigma(m, 1) / Rational(m);
  out.canonicalize();
  return out;
}

}  // namespace qp
