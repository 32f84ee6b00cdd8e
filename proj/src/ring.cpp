#include "qp/ring.hpp"

#include <algorithm>
#include <string>

namespace qp {

namespace {

void require_same_ring(QuadInt const& a, QuadInt const& b) {
  if (a.d() != b.d()) {
    throw std::invalid_argument("operands belong to different rings (d=" + std::to_string(a.d()) +
                                " vs d=" + std::to_string(b.d()) + ")");
  }
}

template <typename Int>
bool sector_test(int d, Int const& x, Int const& y) {
  switch (d) {
    case -1:
      return x > 0 && y >= 0;
    case -3:
      return x > 0 && y >= 0 && y < x;
    default:
      return y > 0 || (y == 0 && x > 0);
  }
}

}  // namespace

Ring::Ring(long d) : d_(static_cast<int>(d)) {
  if (!supported(d)) {
    throw std::invalid_argument("d=" + std::to_string(d) +
                                " is not an imaginary quadratic UFD discriminant "
                                "(expected one of -1,-2,-3,-7,-11,-19,-43,-67,-163)");
  }
}

bool Ring::supported(long d) {
  return std::find(kUfdDiscriminants.begin(), kUfdDiscriminants.end(), d) !=
         kUfdDiscriminants.end();
}

bool Ring::in_sector(BigInt const& x, BigInt const& y) const { return sector_test(d_, x, y); }
bool Ring::in_sector(long long x, long long y) const { return sector_test(d_, x, y); }

bool Ring::valid_coordinates(BigInt const& x, BigInt const& y) const {
  if (half_integral()) {
    return mpz_even_p(x.get_mpz_t()) == mpz_even_p(y.get_mpz_t());
  }
  return mpz_even_p(x.get_mpz_t()) && mpz_even_p(y.get_mpz_t());
}

QuadInt::QuadInt(Ring ring, BigInt a, BigInt b) : d_(ring.d()), x_(2 * a), y_(2 * b) {}

QuadInt QuadInt::from_half(Ring ring, BigInt x, BigInt y) {
  if (!ring.valid_coordinates(x, y)) {
    throw std::invalid_argument("coordinates (" + x.get_str() + " + " + y.get_str() +
                                "*sqrt(" + std::to_string(ring.d()) +
                                "))/2 do not describe a ring element");
  }
  return QuadInt(Unchecked{}, ring.d(), std::move(x), std::move(y));
}

QuadInt operator+(QuadInt const& a, QuadInt const& b) {
  require_same_ring(a, b);
  return QuadInt(QuadInt::Unchecked{}, a.d_, a.x_ + b.x_, a.y_ + b.y_);
}

QuadInt operator-(QuadInt const& a, QuadInt const& b) {
  require_same_ring(a, b);
  return QuadInt(QuadInt::Unchecked{}, a.d_, a.x_ - b.x_, a.y_ - b.y_);
}

QuadInt operator-(QuadInt const& a) { return QuadInt(QuadInt::Unchecked{}, a.d_, -a.x_, -a.y_); }

QuadInt operator*(QuadInt const& a, QuadInt const& b) {
  require_same_ring(a, b);
  // ((x1 x2 + d y1 y2) + (x1 y2 + x2 y1) sqrt d) / 4, halved back into half-coordinates.
  BigInt x = a.x_ * b.x_ + a.d_ * (a.y_ * b.y_);
  BigInt y = a.x_ * b.y_ + a.y_ * b.x_;
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
  mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), 2);
  return QuadInt(QuadInt::Unchecked{}, a.d_, std::move(x), std::move(y));
}

QuadInt conj(QuadInt const& z) { return QuadInt::from_half(z.ring(), z.x(), -z.y()); }

BigInt norm(QuadInt const& z) {
  BigInt n = z.x() * z.x() - z.d() * (z.y() * z.y());
  mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
  return n;
}

QuadInt pow(QuadInt base, unsigned exponent) {
  QuadInt result(base.ring(), 1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<QuadInt> try_div(QuadInt const& z, QuadInt const& w) {
  require_same_ring(z, w);
  if (w.is_zero()) throw std::domain_error("division by zero");
  BigInt const n = norm(w);
  QuadInt const num = z * conj(w);
  if (!mpz_divisible_p(num.x().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.y().get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt x = num.x() / n;
  BigInt y = num.y() / n;
  Ring const ring = z.ring();
  if (!ring.valid_coordinates(x, y)) return std::nullopt;
  return QuadInt::from_half(ring, std::move(x), std::move(y));
}

std::vector<QuadInt> units(Ring ring) {
  std::vector<QuadInt> out{QuadInt(ring, 1), QuadInt(ring, -1)};
  if (ring.d() == -1) {
    out.emplace_back(ring, 0, 1);
    out.emplace_back(ring, 0, -1);
  } else if (ring.d() == -3) {
    for (int sx : {1, -1}) {
      for (int sy : {1, -1}) out.push_back(QuadInt::from_half(ring, sx, sy));
    }
  }
  return out;
}

bool is_unit(QuadInt const& z) { return norm(z) == 1; }

Associate canonicalize(QuadInt const& z) {
  if (z.is_zero()) throw std::invalid_argument("zero has no canonical associate");
  Ring const ring = z.ring();
  for (QuadInt const& u : units(ring)) {
    QuadInt c = u * z;
    if (ring.in_sector(c.x(), c.y())) return {conj(u), std::move(c)};
  }
  throw std::logic_error("no associate of the element lies in the sector");
}

bool is_canonical(QuadInt const& z) { return !z.is_zero() && z.ring().in_sector(z.x(), z.y()); }

bool is_associated(QuadInt const& z, QuadInt const& w) {
  require_same_ring(z, w);
  return canonicalize(z).rep == canonicalize(w).rep;
}

bool canonical_less(QuadInt const& a, QuadInt const& b) {
  int const c = cmp(norm(a), norm(b));
  if (c != 0) return c < 0;
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

}  // namespace qp
