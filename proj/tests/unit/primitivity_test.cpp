#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using test::set;

namespace {

  bool contains(std::vector<khr::HyperIdeal> const& v, khr::HyperIdeal const& a) {
    return std::find(v.begin(), v.end(), a) != v.end();
  }

}  // namespace

TEST_CASE("annihilator of R/m", "[primitivity]") {
  auto const l = khr::build_lattice(test::z(4));
  auto const m = khr::HyperIdeal::make(l.ring, set(4, {0, 2}), khr::Side::right);
  auto const c = khr::prim_from_maximal_right(m, l);
  REQUIRE(c);
  CHECK(c->ideal.members() == set(4, {0, 2}));
  CHECK(c->by_formula == set(4, {0, 2}));
  CHECK(c->module_is_simple);
  CHECK(c->cross_check);

  auto const lz = khr::build_lattice(test::z2_zero());
  REQUIRE(lz.maximal_right.size() == 1);
  CHECK_FALSE(khr::prim_from_maximal_right(lz.maximal_right[0], lz));
}

TEST_CASE("Prim of the small examples", "[primitivity]") {
  CHECK(test::members(khr::prim_set(khr::build_lattice(test::z(4)))) == std::vector{set(4, {0, 2})});
  CHECK(test::members(khr::prim_set(khr::build_lattice(test::z(6))))
        == std::vector{set(6, {0, 3}), set(6, {0, 2, 4})});
  CHECK(test::members(khr::prim_set(khr::build_lattice(test::krasner()))) == std::vector{set(2, {0})});
  CHECK(khr::prim_set(khr::build_lattice(test::z2_zero())).empty());
}

TEST_CASE("primitive rings", "[primitivity]") {
  CHECK(khr::is_primitive_ring(test::krasner()));
  CHECK_FALSE(khr::is_primitive_ring(test::z(4)));
  CHECK(khr::is_primitive_ring(test::z(2)));
  CHECK(khr::is_primitive_ring(test::z(5)));
}

TEST_CASE("Prim(Z_n) is the set of pZ_n for primes p dividing n", "[primitivity][oracle]") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<khr::ElementSet> want;
    for (std::size_t p = 2; p <= n; ++p) {
      bool prime = true;
      for (std::size_t d = 2; d * d <= p; ++d) {
        prime = prime && p % d != 0;
      }
      if (prime && n % p == 0) {
        khr::ElementSet s(n);
        for (std::size_t k = 0; k < n; k += p) {
          s.insert(static_cast<khr::Elem>(k));
        }
        want.push_back(s);
      }
    }
    auto got = test::members(khr::prim_set(khr::build_lattice(test::z(n))));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    INFO("n = " << n);
    CHECK(got == want);
  }
}

TEST_CASE("quotient primitivity", "[primitivity]") {
  auto const l = khr::build_lattice(test::z(4));
  auto const a = khr::HyperIdeal::make(l.ring, set(4, {0, 2}), khr::Side::two_sided);
  auto const q = khr::check_primitive_iff_quotient_primitive(a, l);
  CHECK(q.in_prim);
  CHECK(q.quotient_primitive);
  auto const z = khr::check_primitive_iff_quotient_primitive(khr::HyperIdeal::zero(l.ring), l);
  CHECK_FALSE(z.in_prim);
  CHECK_FALSE(z.quotient_primitive);
  CHECK(z.holds());
}

TEST_CASE("Prim agrees with brute force over the corpus", "[primitivity][oracle]") {
  for (auto const& r : test::corpus(4).rings) {
    auto got = test::members(khr::prim_set(khr::build_lattice(r)));
    std::vector<oracle::Set> have;
    for (auto const& s : got) {
      have.emplace_back(s.begin(), s.end());
    }
    std::sort(have.begin(), have.end());
    INFO(r.name());
    CHECK(have == oracle::prim(oracle::from_raw(r.raw())));
  }
}

TEST_CASE("primitivity implications over the corpus", "[primitivity][property]") {
  for (auto const& r : test::corpus(4).rings) {
    auto const l    = khr::build_lattice(r);
    auto const prim = khr::prim_set(l);
    INFO(r.name());
    for (auto const& c : khr::prim_certificates(l)) {
      CHECK(c.cross_check);
      CHECK(c.module_is_simple);
    }
    for (auto const& p : prim) {
      CHECK(khr::is_prime(p, l));
    }
    if (r.is_unital()) {
      for (auto const& m : l.maximal) {
        CHECK(contains(prim, m));
      }
    }
    for (auto const& p : l.two_sided) {
      if (p.proper()) {
        CHECK(khr::check_primitive_iff_quotient_primitive(p, l).holds());
      }
    }
  }
}

TEST_CASE("simple modules of order two", "[primitivity]") {
  auto const l = khr::build_lattice(test::z(4));
  auto const found = khr::simple_modules_bruteforce(l.ring, khr::prim_set(l), 2);
  REQUIRE_FALSE(found.empty());
  for (auto const& f : found) {
    CHECK(khr::is_simple(f.module));
    CHECK(f.in_prim);
    CHECK(f.annihilator.members() == set(4, {0, 2}));
  }
}
