// qp: command-line front end for abundancy indices in the nine imaginary
// quadratic unique factorization domains.
//
// Exit codes: 0 success (including empty searches), 1 a verification
// assertion failed, 2 invalid input, 3 ledger or checkpoint I/O failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qp/abundancy.hpp"
#include "qp/element_text.hpp"
#include "qp/factorize.hpp"
#include "qp/prospect.hpp"
#include "qp/records.hpp"
#include "qp/splitting.hpp"

namespace {

using nlohmann::json;
using qp::BigInt;
using qp::QuadInt;
using qp::Ring;

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Ring make_ring(long d) {
  if (!Ring::supported(d)) throw UsageError(std::to_string(d) + " not in K (expected one of -1,-2,-3,-7,-11,-19,-43,-67,-163)");
  return Ring(d);
}

unsigned workers_from_env() {
  char const* raw = std::getenv("QP_WORKERS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  long const v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("QP_WORKERS must be a positive integer");
  return static_cast<unsigned>(v);
}

std::int64_t now_utc() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

json element_json(QuadInt const& z) {
  return {{"element", qp::format_element(z)}, {"norm", qp::norm(z).get_str()}};
}

int cmd_classify(long d, std::string const& p_text) {
  Ring const ring = make_ring(d);
  BigInt p;
  if (p.set_str(p_text, 10) != 0 || p < 2) throw UsageError("'" + p_text + "' is not an integer >= 2");
  qp::SplitClass const cls = qp::classify_prime(ring, p);
  std::cout << qp::to_string(cls);
  if (cls != qp::SplitClass::Inert) std::cout << ' ' << qp::format_element(qp::prime_above(ring, p));
  std::cout << '\n';
  return 0;
}

int cmd_factor(long d, std::string const& text, bool as_json) {
  Ring const ring = make_ring(d);
  QuadInt const z = qp::parse_element(ring, text);
  if (z.is_zero()) throw UsageError("cannot factor zero");
  auto const f = qp::factor_element(z);
  if (as_json) {
    json parts = json::array();
    for (auto const& [pi, e] : f.parts) {
      parts.push_back({{"prime", qp::format_element(pi)}, {"norm", qp::norm(pi).get_str()}, {"exponent", e}});
    }
    json out = {{"d", d}, {"element", qp::format_element(z)}, {"norm", qp::norm(z).get_str()},
                {"unit", qp::format_element(f.unit)}, {"parts", parts}};
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "unit=" << qp::format_element(f.unit);
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    auto const& [pi, e] = f.parts[i];
    std::string const s = qp::format_element(pi);
    bool const half = s.front() == '(';
    bool const compound = s.find_first_of("+-", 1) != std::string::npos;
    bool const wrap = half ? e > 1 : compound;
    std::cout << (i == 0 ? "; " : " * ") << (wrap ? "(" + s + ")" : s);
    if (e > 1) std::cout << '^' << e;
  }
  std::cout << '\n';
  return 0;
}

int cmd_divisors(long d, std::string const& text, bool as_json) {
  Ring const ring = make_ring(d);
  QuadInt const z = qp::parse_element(ring, text);
  if (z.is_zero()) throw UsageError("zero has infinitely many divisors");
  auto const divs = qp::divisors_up_to_associates(qp::factor_element(z));
  if (as_json) {
    json arr = json::array();
    for (auto const& w : divs) arr.push_back(element_json(w));
    std::cout << json{{"d", d}, {"element", qp::format_element(z)}, {"divisors", arr}}.dump() << '\n';
    return 0;
  }
  for (auto const& w : divs) std::cout << qp::format_element(w) << "  norm=" << qp::norm(w) << '\n';
  std::cout << divs.size() << " divisors\n";
  return 0;
}

int cmd_index(long d, std::string const& text, int n, bool delta, bool as_json) {
  Ring const ring = make_ring(d);
  QuadInt const z = qp::parse_element(ring, text);
  if (z.is_zero()) throw UsageError("the index is undefined at zero");
  if (n == 0) throw UsageError("n must be nonzero");
  if (!delta && n < 0) throw UsageError("the index needs n >= 1");
  qp::SurdSum const value = delta ? qp::delta_n(z, n) : qp::index_n(z, n).value;
  if (as_json) {
    json terms = json::object();
    for (auto const& [r, c] : value.terms()) terms[r.get_str()] = c.get_str();
    std::cout << json{{"d", d}, {"element", qp::format_element(z)}, {"n", n},
                      {"quantity", delta ? "delta" : "index"}, {"exact", value.str()},
                      {"terms", terms}, {"approx", value.to_double()}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << value.str() << '\n';
  std::cout.precision(15);
  std::cout << "approx " << value.to_double() << '\n';
  return 0;
}

void print_report(qp::SearchReport const& r, bool as_json) {
  if (as_json) {
    json hits = json::array();
    for (auto const& h : r.hits) hits.push_back(element_json(h));
    std::cout << json{{"d", r.d}, {"n", r.n}, {"t", r.t}, {"bound", r.bound.get_str()},
                      {"method", qp::to_string(r.method)}, {"cross_checked", r.cross_checked()},
                      {"hits", hits}}
                     .dump()
              << '\n';
    return;
  }
  std::cout << "d=" << r.d << " n=" << r.n << " t=" << r.t << " bound=" << r.bound
            << " method=" << qp::to_string(r.method) << " cross_checked=" << (r.cross_checked() ? "yes" : "no")
            << '\n';
  std::cout << r.hits.size() << (r.hits.size() == 1 ? " hit" : " hits") << '\n';
  for (auto const& h : r.hits) std::cout << qp::format_element(h) << "  norm=" << qp::norm(h) << '\n';
}

void append_hits(std::optional<std::string> const& ledger, qp::SearchReport const& r, std::string const& kind) {
  if (!ledger) return;
  for (auto const& h : r.hits) {
    qp::LedgerRecord rec{now_utc(), r.d, kind, r.n, std::to_string(r.t), qp::format_element(h), qp::norm(h).get_str()};
    qp::append_ledger(*ledger, rec);
  }
}

int cmd_search(long d, int n, long t, long long bound, std::optional<std::string> const& ledger,
               std::optional<std::string> const& checkpoint, bool as_json) {
  Ring const ring = make_ring(d);
  if (n < 1 || n > qp::kMaxPower) throw UsageError("--n must lie in [1, 64]");
  if (t < 2) throw UsageError("--t must be at least 2");
  if (bound < 1) throw UsageError("--bound must be at least 1");
  qp::SearchOptions options;
  options.workers = workers_from_env();
  if (checkpoint) options.checkpoint = *checkpoint;
  auto const ubound = static_cast<std::uint64_t>(bound);
  auto const ut = static_cast<unsigned>(t);
  qp::SearchReport const report = n == 1 ? qp::search_t_perfect(ring, ut, ubound, options)
                                         : qp::search_powerfully(ring, n, ut, ubound, options);
  print_report(report, as_json);
  append_hits(ledger, report, n == 1 ? "t-perfect" : "n-powerful");
  return report.cross_check == qp::CrossCheck::Disagreed ? kExitFalsified : 0;
}

int cmd_mersenne(long d, int p_max, std::optional<std::string> const& ledger, bool as_json) {
  Ring const ring = make_ring(d);
  if (p_max < 2 || p_max > 127) throw UsageError("--p-max must lie in [2, 127]");
  qp::SearchReport const report = qp::mersenne_perfects(ring, p_max);
  print_report(report, as_json);
  append_hits(ledger, report, "mersenne");
  return 0;
}

std::vector<QuadInt> bound_samples() {
  std::vector<QuadInt> out;
  for (int d : qp::kUfdDiscriminants) {
    Ring const ring(d);
    for (long y = 0; y <= 40; ++y) {
      for (long x = -40; x <= 40; ++x) {
        if (!ring.valid_coordinates(x, y) || !ring.in_sector(x, y)) continue;
        out.push_back(QuadInt::from_half(ring, x, y));
      }
    }
    // Highly composite rational integers stress the inert factors.
    for (long r : {720720L, 232792560L, 5040L, 30L}) out.emplace_back(ring, r);
  }
  return out;
}

int print_verification(qp::VerificationReport const& report) {
  for (auto const& c : report.checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << '\n';
  }
  return report.passed() ? 0 : kExitFalsified;
}

int cmd_verify(std::string const& suite, long long bound) {
  if (suite == "bounds") {
    auto const samples = bound_samples();
    qp::VerificationReport all;
    for (int n : {3, 4, 5, 6}) {
      auto const r = qp::verify_bounds(n, samples);
      if (n == 3) {
        all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
      } else {
        all.checks.push_back(r.checks.front());
      }
    }
    std::cout.precision(6);
    auto const z = qp::zeta(2.5);
    std::cout << "zeta(5/2)^2 ~ " << z.value * z.value << '\n';
    return print_verification(all);
  }
  if (suite == "congruences") return print_verification(qp::congruence_identities());
  if (suite == "residues") {
    for (int d : qp::kUfdDiscriminants) {
      Ring const ring(d);
      unsigned const m = qp::inert_modulus(ring);
      auto const residues = qp::inert_residues(ring, m);
      std::cout << "d=" << d << ": {";
      bool first = true;
      for (unsigned r : residues) {
        std::cout << (first ? "" : ",") << r;
        first = false;
      }
      std::cout << "} mod " << m << '\n';
    }
    return 0;
  }
  if (suite == "absence") {
    if (bound < 1) throw UsageError("--bound must be at least 1");
    qp::SearchOptions options;
    options.workers = workers_from_env();
    return print_verification(qp::verify_absence(static_cast<std::uint64_t>(bound), options));
  }
  throw UsageError("unknown verification suite '" + suite + "' (bounds, congruences, residues, absence)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abundancy indices and perfect-number searches in imaginary quadratic UFDs"};
  app.require_subcommand(1);

  long d = 0;
  int n = 1;
  long t = 2;
  long long bound = 0;
  int p_max = 17;
  bool as_json = false;
  bool delta = false;
  std::string elem;
  std::string prime;
  std::string suite;
  std::optional<std::string> ledger;
  std::optional<std::string> checkpoint;

  auto* classify = app.add_subcommand("classify", "Classify an integer prime as inert, ramified or split");
  classify->add_option("--d", d, "Ring parameter d")->required();
  classify->add_option("p", prime, "Integer prime")->required();

  auto* factor = app.add_subcommand("factor", "Factor an element into canonical primes");
  factor->add_option("--d", d)->required();
  factor->add_option("elem", elem)->required();
  factor->add_flag("--json", as_json);

  auto* divisors = app.add_subcommand("divisors", "List divisors up to association");
  divisors->add_option("--d", d)->required();
  divisors->add_option("elem", elem)->required();
  divisors->add_flag("--json", as_json);

  auto* index = app.add_subcommand("index", "Exact abundancy index I_n (or delta_n with --delta)");
  index->add_option("--d", d)->required();
  index->add_option("elem", elem)->required();
  index->add_option("--n", n)->required();
  index->add_flag("--delta", delta);
  index->add_flag("--json", as_json);

  auto* search = app.add_subcommand("search", "Search for n-powerfully t-perfect elements by norm");
  search->add_option("--d", d)->required();
  search->add_option("--n", n)->required();
  search->add_option("--t", t)->required();
  search->add_option("--bound", bound)->required();
  search->add_option("--ledger", ledger, "Append hits to this ledger file");
  search->add_option("--checkpoint", checkpoint, "Record completed shards and resume from them");
  search->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "bounds | congruences | residues | absence")->required();
  long long verify_bound = 1'000'000;
  verify->add_option("--bound", verify_bound, "Norm bound for the absence suite");

  auto* mersenne = app.add_subcommand("mersenne", "Even perfect integers that stay perfect in the ring");
  mersenne->add_option("--d", d)->required();
  mersenne->add_option("--p-max", p_max, "Largest Mersenne exponent (<= 127)");
  mersenne->add_option("--ledger", ledger);
  mersenne->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(d, prime);
    if (factor->parsed()) return cmd_factor(d, elem, as_json);
    if (divisors->parsed()) return cmd_divisors(d, elem, as_json);
    if (index->parsed()) return cmd_index(d, elem, n, delta, as_json);
    if (search->parsed()) return cmd_search(d, n, t, bound, ledger, checkpoint, as_json);
    if (verify->parsed()) return cmd_verify(suite, verify_bound);
    if (mersenne->parsed()) return cmd_mersenne(d, p_max, ledger, as_json);
  } catch (qp::InternalInconsistency const& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return kExitFalsified;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::domain_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::runtime_error const& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
