#include "qp/surd.hpp"

#include <cmath>
#include <stdexcept>

#include "qp/splitting.hpp"

namespace qp {

SurdSum::SurdSum(Rational c) {
  c.canonicalize();
  if (c != 0) terms_.emplace(BigInt(1), std::move(c));
}

SurdSum SurdSum::term(Rational c, BigInt radical) {
  if (radical < 1) throw std::invalid_argument("radical must be positive");
  SurdSum out;
  out.add_term(radical, c);
  return out;
}

SurdSum SurdSum::sqrt(BigInt const& m) {
  if (m < 0) throw std::invalid_argument("sqrt of a negative integer");
  if (m == 0) return {};
  BigInt outside = 1, radical = 1;
  for (auto const& [p, e] : factor_integer(m).factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
    outside *= pe;
    if (e % 2 != 0) radical *= p;
  }
  return term(Rational(outside), radical);
}

SurdSum SurdSum::sqrt_power(BigInt const& p, long k) {
  // sqrt(p)^k = p^floor(k/2) * sqrt(p)^(k mod 2)
  long const odd = ((k % 2) + 2) % 2;
  long const whole = (k - odd) / 2;
  BigInt pw;
  mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(whole < 0 ? -whole : whole));
  Rational c = whole < 0 ? Rational(BigInt(1), pw) : Rational(pw);
  c.canonicalize();
  return odd != 0 ? term(c, p) : SurdSum(c);
}

void SurdSum::add_term(BigInt const& radical, Rational const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(radical, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SurdSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> SurdSum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

double SurdSum::to_double() const {
  double sum = 0.0;
  for (auto const& [r, c] : terms_) sum += c.get_d() * std::sqrt(r.get_d());
  return sum;
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [r, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (r == 1) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "sqrt(" + r.get_str() + ")";
    }
  }
  return out;
}

SurdSum& SurdSum::operator+=(SurdSum const& b) {
  for (auto const& [r, c] : b.terms_) add_term(r, c);
  return *this;
}

SurdSum& SurdSum::operator-=(SurdSum const& b) {
  for (auto const& [r, c] : b.terms_) add_term(r, -c);
  return *this;
}

SurdSum& SurdSum::operator*=(Rational const& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, coeff] : terms_) coeff *= c;
  return *this;
}

SurdSum operator*(SurdSum const& a, SurdSum const& b) {
  SurdSum out;
  BigInt g, ra, rb;
  for (auto const& [r1, c1] : a.terms_) {
    for (auto const& [r2, c2] : b.terms_) {
      // sqrt(r1) sqrt(r2) = g sqrt((r1/g)(r2/g)) for squarefree r1, r2 and g = gcd.
      mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), r2.get_mpz_t());
      mpz_divexact(ra.get_mpz_t(), r1.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(rb.get_mpz_t(), r2.get_mpz_t(), g.get_mpz_t());
      out.add_term(ra * rb, c1 * c2 * Rational(g));
    }
  }
  return out;
}

}  // namespace qp
