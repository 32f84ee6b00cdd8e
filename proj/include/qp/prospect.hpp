#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qp/ring.hpp"

namespace qp {

/// Raised when a search contradicts a proven property, e.g. an n >= 3 hit.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

enum class SearchMethod { IntegerReduction, DirectScan, MersenneFilter };
enum class CrossCheck { NotRun, Agreed, Disagreed };

std::string to_string(SearchMethod m);

struct SearchReport {
  int d = 0;
  int n = 1;
  unsigned t = 2;
  BigInt bound = 0;            // largest norm covered
  std::vector<QuadInt> hits;   // canonical, ordered by (norm, x, y)
  SearchMethod method = SearchMethod::DirectScan;
  CrossCheck cross_check = CrossCheck::NotRun;

  bool cross_checked() const { return cross_check == CrossCheck::Agreed; }
};

struct SearchOptions {
  /// Worker threads for sharded scans; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Completed shards are appended here and skipped on the next run.
  std::optional<std::filesystem::path> checkpoint;
  /// search_t_perfect cross-checks with a direct scan up to this norm.
  std::uint64_t direct_scan_limit = 100'000'000;
};

/// Largest bound accepted by direct_scan.
inline constexpr std::uint64_t kMaxScanBound = 1'000'000'000'000ULL;
/// Largest bound accepted by integer_reduction.
inline constexpr std::uint64_t kMaxReductionBound = 100'000'000'000'000ULL;

/// Norm ranges [lo, hi] covering 1..bound; a function of bound only, so
/// checkpoints from an interrupted run line up with the resumed one.
std::vector<std::pair<std::uint64_t, std::uint64_t>> plan_shards(std::uint64_t bound);

/// Sorted union of two canonical hit lists (associative and commutative).
std::vector<QuadInt> merge_hits(std::vector<QuadInt> a, std::vector<QuadInt> const& b);

/// All canonical z with norm(z) <= bound and I_n(z) == t, by enumerating
/// every lattice point of the sector. Candidates are screened in double
/// precision and certified with the exact index.
std::vector<QuadInt> direct_scan(Ring ring, int n, unsigned t, std::uint64_t bound,
                                 SearchOptions const& options = {});

/// Positive integers r with r^2 <= bound, sigma(r) == t r and every prime
/// factor of r inert in the ring.
std::vector<QuadInt> integer_reduction(Ring ring, unsigned t, std::uint64_t bound);

/// t-perfect elements (n = 1) via integer reduction, cross-checked against a
/// direct scan when bound <= options.direct_scan_limit.
SearchReport search_t_perfect(Ring ring, unsigned t, std::uint64_t bound,
                              SearchOptions const& options = {});

/// n-powerfully t-perfect elements by direct scan. Throws InternalInconsistency
/// when n >= 3 yields a hit.
SearchReport search_powerfully(Ring ring, int n, unsigned t, std::uint64_t bound,
                               SearchOptions const& options = {});

/// Even perfect integers 2^(p-1)(2^p-1), p <= p_max <= 127, whose prime
/// factors 2 and 2^p-1 are both inert in the ring.
SearchReport mersenne_perfects(Ring ring, int p_max);

// ---------------------------------------------------------------------------
// Verification suites

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Riemann zeta for real s > 1 by direct summation, bracketing the tail
/// between the integrals of x^-s. `error` bounds |value - zeta(s)|.
struct ZetaValue {
  double value;
  double error;
};
ZetaValue zeta(double s, double tolerance = 1e-10);

/// Checks I_n(z) < zeta(n/2)^2 for every sample (n >= 3) and the closed-form
/// constants that bound I_3, I_4 and I_n for n >= 5 below 2.
VerificationReport verify_bounds(int n, std::span<QuadInt const> samples);

/// Natural modulus for describing inert primes: |d| when d = 1 (mod 4), else 4|d|.
unsigned inert_modulus(Ring ring);

/// Thrown by inert_residues when some residue class mixes inert and non-inert primes.
struct ModulusTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Residue classes mod `modulus` whose primes (below scan_limit) are all inert.
std::set<unsigned> inert_residues(Ring ring, unsigned modulus, std::uint32_t scan_limit = 100'000);

/// Shape p^k m1^2 m2^2 of a hypothetical odd perfect number, m1 built from
/// primes = 5 (mod 8) and m2 from primes = 7 (mod 8).
struct EulerianShape {
  std::uint64_t p;
  std::uint64_t k;
  std::vector<std::pair<std::uint64_t, unsigned>> m1;  // (q_j, alpha_j)
  std::uint64_t m2;

  /// Number of odd alpha_j.
  unsigned odd_exponent_count() const;
};

enum class ParityPrediction { OddL, EvenL, Unconstrained };
std::string to_string(ParityPrediction p);

/// k = 1 (mod 8) forces an odd count of odd alpha_j, k = 5 (mod 8) an even one.
/// Throws std::invalid_argument when the shape breaks its congruence conditions.
ParityPrediction eulerian_parity(EulerianShape const& shape);

/// Exhaustive check of the mod-8 sigma identities and of 2^p - 1 (mod 11).
VerificationReport congruence_identities();

/// t = 2 searches for d = -1 and d = -3 must come back empty.
VerificationReport verify_absence(std::uint64_t bound, SearchOptions const& options = {});

}  // namespace qp
