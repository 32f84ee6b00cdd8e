#include "qp/factorize.hpp"

#include <algorithm>

#include "qp/splitting.hpp"

namespace qp {

QuadInt ElementFactorization::expand() const {
  QuadInt out = unit;
  for (auto const& [pi, e] : parts) out *= pow(pi, e);
  return out;
}

ElementFactorization factor_element(QuadInt const& z) {
  if (z.is_zero()) throw std::invalid_argument("cannot factor zero");
  Ring const ring = z.ring();
  ElementFactorization out{QuadInt(ring, 1), {}};
  QuadInt rest = z;
  for (auto const& [p, e] : factor_integer(norm(z)).factors) {
    switch (classify_prime(ring, p)) {
      case SplitClass::Inert: {
        if (e % 2 != 0) throw std::logic_error("odd valuation of an inert prime in a norm");
        QuadInt const q(ring, p);
        out.parts.push_back({q, e / 2});
        rest = *try_div(rest, pow(q, e / 2));
        break;
      }
      case SplitClass::Ramified: {
        QuadInt const pi = prime_above(ring, p);
        out.parts.push_back({pi, e});
        rest = *try_div(rest, pow(pi, e));
        break;
      }
      case SplitClass::Split: {
        QuadInt const pi = prime_above(ring, p);
        unsigned a = 0;
        while (a < e) {
          auto q = try_div(rest, pi);
          if (!q) break;
          rest = std::move(*q);
          ++a;
        }
        unsigned const b = e - a;
        if (a > 0) out.parts.push_back({pi, a});
        if (b > 0) {
          QuadInt const other = canonicalize(conj(pi)).rep;
          out.parts.push_back({other, b});
          rest = *try_div(rest, pow(other, b));
        }
        break;
      }
    }
  }
  if (!is_unit(rest)) throw std::logic_error("factorization left a non-unit cofactor");
  out.unit = rest;
  std::sort(out.parts.begin(), out.parts.end(),
            [](PrimePart const& a, PrimePart const& b) { return canonical_less(a.prime, b.prime); });
  return out;
}

bool is_prime_element(QuadInt const& pi) {
  if (pi.is_zero()) return false;
  Ring const ring = pi.ring();
  BigInt const n = norm(pi);
  if (is_prime(n)) return classify_prime(ring, n) != SplitClass::Inert;
  BigInt q;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
  return is_prime(q) && classify_prime(ring, q) == SplitClass::Inert &&
         is_associated(pi, QuadInt(ring, q));
}

unsigned rho(QuadInt const& pi, QuadInt const& z) {
  if (z.is_zero()) throw std::invalid_argument("rho is undefined at zero");
  if (!is_prime_element(pi)) throw std::invalid_argument("rho needs a prime element");
  unsigned k = 0;
  QuadInt rest = z;
  while (auto q = try_div(rest, pi)) {
    rest = std::move(*q);
    ++k;
  }
  return k;
}

std::vector<QuadInt> divisors_up_to_associates(ElementFactorization const& f) {
  Ring const ring = f.ring();
  std::vector<QuadInt> out{QuadInt(ring, 1)};
  for (auto const& [pi, e] : f.parts) {
    std::vector<QuadInt> next;
    next.reserve(out.size() * (e + 1));
    for (QuadInt const& base : out) {
      QuadInt acc = base;
      next.push_back(acc);
      for (unsigned j = 1; j <= e; ++j) {
        acc *= pi;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  for (QuadInt& w : out) w = canonicalize(w).rep;
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace qp
