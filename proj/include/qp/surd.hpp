#pragma once

#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace qp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact finite sum of c_r * sqrt(r) over distinct squarefree r >= 1 with
/// rational c_r. Zero coefficients are never stored, so structural equality is
/// value equality (square roots of distinct squarefree integers are linearly
/// independent over Q).
class SurdSum {
 public:
  using Terms = std::map<BigInt, Rational>;

  SurdSum() = default;
  SurdSum(Rational c);  // NOLINT(google-explicit-constructor)
  SurdSum(long c) : SurdSum(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * sqrt(radical); radical must be positive and squarefree (the latter is
  /// the caller's promise, use sqrt() for arbitrary integers).
  static SurdSum term(Rational c, BigInt radical);
  /// sqrt(m) for m >= 0, square part extracted.
  static SurdSum sqrt(BigInt const& m);
  /// sqrt(p)^k for squarefree p and any integer k.
  static SurdSum sqrt_power(BigInt const& p, long k);

  Terms const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  double to_double() const;

  /// "3/2 + 1/2*sqrt(2)" style rendering.
  std::string str() const;

  SurdSum& operator+=(SurdSum const& b);
  SurdSum& operator-=(SurdSum const& b);
  SurdSum& operator*=(Rational const& c);

  friend SurdSum operator+(SurdSum a, SurdSum const& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, SurdSum const& b) { return a -= b; }
  friend SurdSum operator*(SurdSum const& a, SurdSum const& b);
  friend SurdSum operator*(SurdSum a, Rational const& c) { return a *= c; }
  friend bool operator==(SurdSum const& a, SurdSum const& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(BigInt const& radical, Rational const& c);

  Terms terms_;
};

}  // namespace qp
