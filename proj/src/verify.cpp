#include <cmath>
#include <numbers>
#include <sstream>

#include "qp/abundancy.hpp"
#include "qp/element_text.hpp"
#include "qp/prospect.hpp"
#include "qp/splitting.hpp"

namespace qp {

namespace {

std::string fmt(double v, int precision = 12) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

// sum_{l=0}^{count-1} base^l (mod 8)
unsigned geometric_mod8(std::uint64_t base, std::uint64_t count) {
  unsigned sum = 0, term = 1;
  for (std::uint64_t l = 0; l < count; ++l) {
    sum = (sum + term) % 8;
    term = static_cast<unsigned>((term * (base % 8)) % 8);
  }
  return sum;
}

}  // namespace

bool VerificationReport::passed() const {
  for (auto const& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

ZetaValue zeta(double s, double tolerance) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta needs s > 1");
  // Tail sum_{k>N} k^-s lies in [(N+1)^(1-s), N^(1-s)] / (s-1).
  auto width = [s](double n) { return (std::pow(n, 1 - s) - std::pow(n + 1, 1 - s)) / (s - 1); };
  double terms = std::ceil(std::pow(2 * tolerance, -1.0 / s));
  while (width(terms) / 2 > tolerance / 2) terms *= 1.25;
  auto const count = static_cast<std::uint64_t>(terms);
  long double sum = 0.0L;
  for (std::uint64_t k = count; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -s);
  double const lower = std::pow(double(count) + 1, 1 - s) / (s - 1);
  double const upper = std::pow(double(count), 1 - s) / (s - 1);
  double const rounding = 1e-15 * std::log2(double(count) + 2.0);
  return {static_cast<double>(sum) + (lower + upper) / 2, (upper - lower) / 2 + rounding};
}

VerificationReport verify_bounds(int n, std::span<QuadInt const> samples) {
  if (n < 3) throw std::invalid_argument("the zeta bound needs n >= 3");
  VerificationReport report;
  ZetaValue const zn = zeta(n / 2.0);
  double const bound = zn.value * zn.value;
  std::size_t violations = 0;
  std::string first_violation;
  double largest = 0.0;
  for (QuadInt const& z : samples) {
    double const v = index_n(z, n).value.to_double();
    largest = std::max(largest, v);
    if (!(v < bound)) {
      if (violations++ == 0) {
        first_violation = "d=" + std::to_string(z.d()) + " z=" + format_element(z) + " I=" + fmt(v);
      }
    }
  }
  report.add("I_" + std::to_string(n) + "(z) < zeta(" + fmt(n / 2.0, 3) + ")^2 = " + fmt(bound) +
                 " over " + std::to_string(samples.size()) + " samples",
             violations == 0,
             violations == 0 ? "max I = " + fmt(largest) : first_violation);

  double constexpr kPi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi;
  ZetaValue const z52 = zeta(2.5);
  double const z52sq = z52.value * z52.value;
  report.add("zeta(5/2)^2 in (1.79, 1.81)", z52sq > 1.79 && z52sq < 1.81 && z52.error < 1e-10,
             "zeta(5/2)^2 = " + fmt(z52sq));
  report.add("zeta(5/2)^2 < 2", z52sq < 2.0, fmt(z52sq));
  ZetaValue const z3 = zeta(3.0);
  report.add("zeta(3) < 2", z3.value + z3.error < 2.0, "zeta(3) = " + fmt(z3.value));

  // n = 4 bounds, each rebuilt from a summed zeta(2) and compared to its closed form.
  ZetaValue const z2 = zeta(2.0);
  double const z2sq = z2.value * z2.value;
  auto geo = [](double ratio) { return 1.0 / (1.0 - ratio); };
  struct Constant {
    char const* name;
    double series;
    double closed;
  };
  Constant const constants[] = {
      {"pi^4/60 (2 inert)", z2sq / (geo(0.25) * geo(0.25)) * geo(1.0 / 16), kPi4 / 60},
      {"pi^4/60 (d=-1)", z2sq / geo(0.25) / (geo(1.0 / 9) * geo(1.0 / 9)) * geo(1.0 / 81),
       kPi4 / 60},
      {"pi^4/52 (d=-2)", z2sq / geo(0.25) / (geo(1.0 / 25) * geo(1.0 / 25)) * geo(1.0 / 625),
       kPi4 / 52},
      {"4pi^4/195 (d=-7)",
       geo(1.0 / 81) * geo(1.0 / 625) * z2sq / (geo(1.0 / 9) * geo(1.0 / 9)) /
           (geo(1.0 / 25) * geo(1.0 / 25)),
       4 * kPi4 / 195},
  };
  for (auto const& c : constants) {
    bool const ok = std::abs(c.series - c.closed) < 1e-9 && c.closed < 2.0;
    report.add(std::string(c.name) + " < 2", ok,
               "closed form " + fmt(c.closed) + ", from summed zeta(2) " + fmt(c.series));
  }
  return report;
}

unsigned inert_modulus(Ring ring) {
  return ring.half_integral() ? static_cast<unsigned>(ring.abs_d())
                              : 4U * static_cast<unsigned>(ring.abs_d());
}

std::set<unsigned> inert_residues(Ring ring, unsigned modulus, std::uint32_t scan_limit) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<bool> inert(modulus, false), other(modulus, false);
  for (std::uint32_t p : primes_below(scan_limit)) {
    unsigned const r = p % modulus;
    if (classify_prime(ring, BigInt(p)) == SplitClass::Inert) {
      inert[r] = true;
    } else {
      other[r] = true;
    }
  }
  std::set<unsigned> out;
  std::string mixed;
  for (unsigned r = 0; r < modulus; ++r) {
    if (inert[r] && other[r]) mixed += (mixed.empty() ? "" : ",") + std::to_string(r);
    if (inert[r] && !other[r]) out.insert(r);
  }
  if (!mixed.empty()) {
    throw ModulusTooSmall("modulus " + std::to_string(modulus) + " does not separate inert primes in d=" +
                          std::to_string(ring.d()) + " (mixed classes: " + mixed + ")");
  }
  return out;
}

unsigned EulerianShape::odd_exponent_count() const {
  unsigned count = 0;
  for (auto const& [q, alpha] : m1) count += alpha % 2;
  return count;
}

std::string to_string(ParityPrediction p) {
  switch (p) {
    case ParityPrediction::OddL:
      return "OddL";
    case ParityPrediction::EvenL:
      return "EvenL";
    case ParityPrediction::Unconstrained:
      return "Unconstrained";
  }
  return "?";
}

ParityPrediction eulerian_parity(EulerianShape const& shape) {
  if (!is_prime(shape.p) || shape.p % 4 != 1) {
    throw std::invalid_argument("p must be a prime congruent to 1 mod 4");
  }
  if (shape.k % 4 != 1) throw std::invalid_argument("k must be congruent to 1 mod 4");
  for (auto const& [q, alpha] : shape.m1) {
    if (!is_prime(q) || q % 8 != 5 || alpha == 0) {
      throw std::invalid_argument("m1 must consist of primes congruent to 5 mod 8");
    }
  }
  if (shape.m2 < 1) throw std::invalid_argument("m2 must be positive");
  for (auto const& [q, e] : factor_integer(BigInt(static_cast<unsigned long>(shape.m2))).factors) {
    if (q % 8 != 7) throw std::invalid_argument("m2 must consist of primes congruent to 7 mod 8");
  }
  switch (shape.k % 8) {
    case 1:
      return ParityPrediction::OddL;
    case 5:
      return ParityPrediction::EvenL;
    default:
      return ParityPrediction::Unconstrained;
  }
}

VerificationReport congruence_identities() {
  VerificationReport report;
  auto const primes = primes_below(1000);

  std::size_t cases = 0, failures = 0;
  for (std::uint32_t q : primes) {
    if (q % 8 != 5) continue;
    for (unsigned alpha = 1; alpha <= 20; ++alpha, ++cases) {
      if (geometric_mod8(q, 2 * alpha + 1) != (6 * alpha + 1) % 8) ++failures;
    }
  }
  report.add("sigma(q^(2a)) = 6a+1 (mod 8) for primes q = 5 (mod 8), q < 1000, a <= 20",
             failures == 0, std::to_string(cases) + " cases");

  cases = failures = 0;
  for (std::uint32_t p : primes) {
    if (p % 8 != 5) continue;
    for (unsigned k = 1; k < 200; k += 4, ++cases) {
      unsigned const expected = k % 8 == 1 ? 6 : 2;
      if (geometric_mod8(p, k + 1) != expected) ++failures;
    }
  }
  report.add("sum p^l (l <= k) = 6 (mod 8) for k = 1, = 2 for k = 5 (mod 8), p = 5 (mod 8)",
             failures == 0, std::to_string(cases) + " cases");

  cases = failures = 0;
  for (std::uint32_t q : primes) {
    if (q % 8 != 7) continue;
    for (unsigned alpha = 1; alpha <= 20; ++alpha, ++cases) {
      if (geometric_mod8(q, 2 * alpha + 1) != 1) ++failures;
    }
  }
  report.add("sigma(q^(2a)) = 1 (mod 8) for primes q = 7 (mod 8), q < 1000, a <= 20",
             failures == 0, std::to_string(cases) + " cases");

  cases = failures = 0;
  for (std::uint32_t p : primes) {
    unsigned pow2 = 1;
    for (std::uint32_t j = 0; j < p; ++j) pow2 = pow2 * 2 % 11;
    unsigned const r = (pow2 + 10) % 11;
    ++cases;
    if (r == 2 || r == 8 || r == 10) ++failures;
  }
  report.add("2^p - 1 mod 11 avoids {2, 8, 10} for primes p < 1000", failures == 0,
             std::to_string(cases) + " primes");
  return report;
}

VerificationReport verify_absence(std::uint64_t bound, SearchOptions const& options) {
  VerificationReport report;
  for (int d : {-1, -3}) {
    SearchReport const r = search_t_perfect(Ring(d), 2, bound, options);
    std::string detail = std::to_string(r.hits.size()) + " hits, cross-check ";
    detail += r.cross_check == CrossCheck::Agreed     ? "agreed"
              : r.cross_check == CrossCheck::NotRun   ? "not run"
                                                      : "DISAGREED";
    report.add("no perfect numbers in d=" + std::to_string(d) + " up to norm " +
                   std::to_string(bound),
               r.hits.empty() && r.cross_check != CrossCheck::Disagreed, detail);
  }
  return report;
}

}  // namespace qp
