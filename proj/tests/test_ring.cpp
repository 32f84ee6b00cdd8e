#include "doctest.h"
#include "oracles.hpp"
#include "qp/element_text.hpp"
#include "qp/ring.hpp"

using namespace qp;

namespace {

QuadInt el(int d, char const* text) { return parse_element(Ring(d), text); }

}  // namespace

TEST_CASE("only the nine UFD rings are accepted") {
  for (int d : kUfdDiscriminants) CHECK(Ring::supported(d));
  for (long d : {-5L, -6L, -10L, 0L, 1L, 2L, -4L, -164L}) {
    CHECK_FALSE(Ring::supported(d));
    CHECK_THROWS_AS(Ring{d}, std::invalid_argument);
  }
  CHECK(Ring(-1).unit_count() == 4);
  CHECK(Ring(-3).unit_count() == 6);
  CHECK(Ring(-163).unit_count() == 2);
  CHECK(Ring(-2).residue_mod_4() == 2);
  CHECK(Ring(-1).residue_mod_4() == 3);
  CHECK(Ring(-7).half_integral());
  CHECK_FALSE(Ring(-2).half_integral());
}

TEST_CASE("arithmetic examples") {
  CHECK(el(-1, "1+i") * el(-1, "2-i") == el(-1, "3+i"));
  CHECK(el(-1, "3") * el(-1, "3+i") == el(-1, "9+3i"));
  CHECK(el(-1, "3") * el(-1, "1+i") * el(-1, "2-i") == el(-1, "9+3i"));
  QuadInt const z = el(-7, "(3+5s)/2");
  CHECK(z + QuadInt(Ring(-7), 0) == z);
  CHECK(z * QuadInt(Ring(-7), 1) == z);
  CHECK(-z + z == QuadInt(Ring(-7), 0));
  // ((1+s)/2)^2 = (-3+s)/2 in d = -7
  CHECK(pow(el(-7, "(1+s)/2"), 2) == el(-7, "(-3+s)/2"));
  CHECK(pow(z, 0) == QuadInt(Ring(-7), 1));
}

TEST_CASE("mixed rings and bad coordinates are rejected") {
  CHECK_THROWS_AS(el(-1, "1+i") * el(-2, "1+s"), std::invalid_argument);
  CHECK_THROWS_AS(el(-1, "1+i") + el(-2, "1+s"), std::invalid_argument);
  CHECK_THROWS_AS(try_div(el(-1, "2"), el(-3, "2")), std::invalid_argument);
  CHECK_THROWS_AS(QuadInt::from_half(Ring(-1), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(QuadInt::from_half(Ring(-7), 1, 2), std::invalid_argument);
  CHECK_NOTHROW(QuadInt::from_half(Ring(-7), 1, 3));
}

TEST_CASE("conjugate and norm examples") {
  CHECK(conj(el(-1, "2+i")) == el(-1, "2-i"));
  QuadInt const w = el(-7, "(1+s)/2");
  CHECK(conj(w) == el(-7, "(1-s)/2"));
  CHECK(w * conj(w) == QuadInt(Ring(-7), 2));
  CHECK(norm(el(-1, "9+3i")) == 90);
  CHECK(norm(QuadInt(Ring(-43), 1)) == 1);
  CHECK(norm(el(-11, "(1+s)/2")) == 3);
  CHECK(norm(QuadInt(Ring(-2), 0)) == 0);
}

TEST_CASE("division examples") {
  auto q = try_div(el(-1, "1+3i"), el(-1, "1+i"));
  REQUIRE(q);
  CHECK(*q == el(-1, "2+i"));
  CHECK_FALSE(try_div(el(-1, "3+i"), el(-1, "2")));
  QuadInt const z = el(-19, "(7-3s)/2");
  CHECK(*try_div(z, QuadInt(Ring(-19), 1)) == z);
  CHECK_THROWS_AS(try_div(z, QuadInt(Ring(-19), 0)), std::domain_error);
  // (1+s)/2 divides 2 in d = -7 but not in the non-half rings
  CHECK(try_div(QuadInt(Ring(-7), 2), el(-7, "(1+s)/2")));
}

TEST_CASE("unit groups") {
  auto const u1 = units(Ring(-1));
  CHECK(u1.size() == 4);
  for (char const* s : {"1", "-1", "i", "-i"}) {
    CHECK(std::count(u1.begin(), u1.end(), el(-1, s)) == 1);
  }
  auto const u3 = units(Ring(-3));
  CHECK(u3.size() == 6);
  CHECK(std::count(u3.begin(), u3.end(), el(-3, "(1+s)/2")) == 1);
  CHECK(std::count(u3.begin(), u3.end(), el(-3, "(-1-s)/2")) == 1);
  auto const u43 = units(Ring(-43));
  CHECK(u43 == std::vector<QuadInt>{QuadInt(Ring(-43), 1), QuadInt(Ring(-43), -1)});
  for (int d : kUfdDiscriminants) {
    for (auto const& u : units(Ring(d))) {
      CHECK(norm(u) == 1);
      CHECK(is_unit(u));
    }
  }
  CHECK_FALSE(is_unit(el(-1, "1+i")));
}

TEST_CASE("canonical associates") {
  auto a = canonicalize(el(-1, "-3-3i"));
  CHECK(a.unit == el(-1, "-1"));
  CHECK(a.rep == el(-1, "3+3i"));

  auto b = canonicalize(el(-3, "s"));
  CHECK(b.rep == el(-3, "(3+s)/2"));
  CHECK(b.unit * b.rep == el(-3, "s"));

  QuadInt const r = el(-3, "(3+s)/2");
  CHECK(canonicalize(r).unit == QuadInt(Ring(-3), 1));
  CHECK(canonicalize(r).rep == r);
  CHECK_THROWS_AS(canonicalize(QuadInt(Ring(-3), 0)), std::invalid_argument);

  CHECK_FALSE(is_associated(el(-1, "2+i"), el(-1, "2-i")));
  CHECK(is_associated(el(-67, "(5+s)/2"), el(-67, "(-5-s)/2")));
  // (1+s)/2 is a unit in d = -3, so 1+s = 2 * (1+s)/2 is an associate of 2
  int hits = 0;
  for (auto const& u : units(Ring(-3))) hits += u * el(-3, "2") == el(-3, "1+s");
  CHECK(hits == 1);
  CHECK(is_associated(el(-3, "2"), el(-3, "1+s")));
  CHECK_FALSE(is_associated(el(-3, "2"), el(-3, "s")));
  CHECK_THROWS(is_associated(el(-3, "2"), QuadInt(Ring(-3), 0)));

  // sector boundaries
  CHECK(is_canonical(el(-1, "3")));
  CHECK_FALSE(is_canonical(el(-1, "3i")));
  CHECK(is_canonical(el(-2, "-3+s")));
  CHECK_FALSE(is_canonical(el(-2, "-3")));
  CHECK(is_canonical(el(-3, "2")));
  CHECK_FALSE(is_canonical(el(-3, "1+s")));  // y == x is excluded
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(101);
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    auto const us = units(ring);
    CAPTURE(d);
    for (int i = 0; i < 10000; ++i) {
      QuadInt const z = oracle::random_element(ring, rng, 2000);
      QuadInt const w = oracle::random_element(ring, rng, 2000);
      QuadInt const v = oracle::random_element(ring, rng, 50);
      QuadInt const prod = z * w;
      REQUIRE(ring.valid_coordinates(prod.x(), prod.y()));
      REQUIRE(ring.valid_coordinates((z + w).x(), (z + w).y()));
      REQUIRE(ring.valid_coordinates((z - w).x(), (z - w).y()));
      REQUIRE(prod == w * z);
      REQUIRE((z * w) * v == z * (w * v));
      REQUIRE(z * (w + v) == z * w + z * v);
      REQUIRE(norm(prod) == norm(z) * norm(w));
      REQUIRE(norm(z) == (z.x() * z.x() - d * z.y() * z.y()) / 4);
      REQUIRE(conj(conj(z)) == z);
      REQUIRE(conj(z + w) == conj(z) + conj(w));
      REQUIRE(conj(prod) == conj(z) * conj(w));
      REQUIRE(z * conj(z) == QuadInt(ring, norm(z)));
      auto q = try_div(prod, w);
      REQUIRE(q);
      REQUIRE(*q == z);

      auto const c = canonicalize(z);
      REQUIRE(c.unit * c.rep == z);
      REQUIRE(is_unit(c.unit));
      std::size_t in_sector = 0;
      for (auto const& u : us) {
        QuadInt const a = u * z;
        if (ring.in_sector(a.x(), a.y())) ++in_sector;
        REQUIRE(canonicalize(a).rep == c.rep);
      }
      REQUIRE(in_sector == 1);
      REQUIRE(is_associated(z, -z));
    }
  }
}

TEST_CASE("try_div agrees with the lattice divisibility test") {
  std::mt19937_64 rng(7);
  for (int d : kUfdDiscriminants) {
    Ring const ring(d);
    std::map<long, std::vector<QuadInt>> table;
    for (int i = 0; i < 2000; ++i) {
      QuadInt const z = oracle::random_element(ring, rng, 300);
      QuadInt const w = canonicalize(oracle::random_element(ring, rng, 12)).rep;
      table.clear();
      table[norm(w).get_si()] = {w};
      bool const expected = !oracle::divisors(z, table).empty();
      auto q = try_div(z, w);
      REQUIRE(q.has_value() == expected);
      if (q) REQUIRE(*q * w == z);
    }
  }
}
