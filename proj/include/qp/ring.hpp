#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qp {

using BigInt = mpz_class;

/// The nine negative squarefree d for which the ring of integers of Q(sqrt d)
/// is a unique factorization domain.
inline constexpr std::array<int, 9> kUfdDiscriminants = {-163, -67, -43, -19, -11, -7, -3, -2, -1};

/// Descriptor of the ring of integers of Q(sqrt d) for d in kUfdDiscriminants.
class Ring {
 public:
  /// Throws std::invalid_argument when d is not one of kUfdDiscriminants.
  explicit Ring(long d);

  static bool supported(long d);

  int d() const { return d_; }
  /// |d|, handy for norm forms.
  int abs_d() const { return -d_; }
  /// d mod 4, in {1, 2, 3}.
  int residue_mod_4() const { return ((d_ % 4) + 4) % 4; }
  /// True when the ring is Z[(1+sqrt d)/2] and half-integral coordinates occur.
  bool half_integral() const { return residue_mod_4() == 1; }
  int unit_count() const { return d_ == -1 ? 4 : d_ == -3 ? 6 : 2; }

  /// Exact test of the half-open sector A(d) on half-coordinates (x + y sqrt d)/2.
  bool in_sector(BigInt const& x, BigInt const& y) const;
  bool in_sector(long long x, long long y) const;

  /// Coordinate parity invariant for half-coordinates.
  bool valid_coordinates(BigInt const& x, BigInt const& y) const;

  bool operator==(Ring const&) const = default;

 private:
  int d_;
};

/// Element (x + y sqrt d)/2 of a Ring. Both coordinates are doubled so that
/// Z[sqrt d] and Z[(1+sqrt d)/2] share one representation.
class QuadInt {
 public:
  /// a + b sqrt(d) with integer a, b.
  QuadInt(Ring ring, BigInt a, BigInt b = 0);

  /// (x + y sqrt d)/2; throws std::invalid_argument if the parity invariant fails.
  static QuadInt from_half(Ring ring, BigInt x, BigInt y);

  Ring ring() const { return Ring(d_); }
  int d() const { return d_; }
  BigInt const& x() const { return x_; }
  BigInt const& y() const { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  friend QuadInt operator+(QuadInt const& a, QuadInt const& b);
  friend QuadInt operator-(QuadInt const& a, QuadInt const& b);
  friend QuadInt operator*(QuadInt const& a, QuadInt const& b);
  friend QuadInt operator-(QuadInt const& a);
  QuadInt& operator*=(QuadInt const& b) { return *this = *this * b; }

  friend bool operator==(QuadInt const& a, QuadInt const& b) {
    return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  struct Unchecked {};
  QuadInt(Unchecked, int d, BigInt x, BigInt y) : d_(d), x_(std::move(x)), y_(std::move(y)) {}

  int d_;
  BigInt x_;
  BigInt y_;
};

QuadInt conj(QuadInt const& z);

/// (x^2 - d y^2) / 4.
BigInt norm(QuadInt const& z);

QuadInt pow(QuadInt base, unsigned exponent);

/// q with q * w == z, or nullopt when w does not divide z. Throws on w == 0.
std::optional<QuadInt> try_div(QuadInt const& z, QuadInt const& w);

std::vector<QuadInt> units(Ring ring);
bool is_unit(QuadInt const& z);

struct Associate {
  QuadInt unit;
  QuadInt rep;
};

/// Splits z != 0 as unit * rep with rep in the sector A(d).
Associate canonicalize(QuadInt const& z);

bool is_canonical(QuadInt const& z);
bool is_associated(QuadInt const& z, QuadInt const& w);

/// Ordering by (norm, x, y) used for deterministic listings.
bool canonical_less(QuadInt const& a, QuadInt const& b);

}  // namespace qp
