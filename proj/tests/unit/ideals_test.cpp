#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using test::set;

namespace {

  std::vector<oracle::Set> as_oracle(std::vector<khr::HyperIdeal> const& v) {
    std::vector<oracle::Set> out;
    for (auto const& i : v) {
      out.emplace_back(i.members().begin(), i.members().end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<oracle::Set> sorted(std::vector<oracle::Set> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

}  // namespace

TEST_CASE("is_hyperideal", "[ideals]") {
  auto const z4 = test::z(4);
  CHECK(khr::is_hyperideal(set(4, {0}), z4));
  CHECK(khr::is_hyperideal(set(4, {0, 2}), z4));
  auto const bad = khr::is_hyperideal(set(4, {0, 1}), z4);
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.reason.empty());
  CHECK_FALSE(khr::is_hyperideal(set(4, {}), z4));
}

TEST_CASE("ideal lattices of the small examples", "[ideals]") {
  CHECK(test::members(khr::build_lattice(test::z(4)).two_sided)
        == std::vector{set(4, {0}), set(4, {0, 2}), set(4, {0, 1, 2, 3})});
  CHECK(test::members(khr::build_lattice(test::krasner()).two_sided)
        == std::vector{set(2, {0}), set(2, {0, 1})});
  auto const z6 = test::members(khr::build_lattice(test::z(6)).two_sided);
  CHECK(z6.size() == 4);
  for (auto const& s : {set(6, {0}), set(6, {0, 3}), set(6, {0, 2, 4}), set(6, {0, 1, 2, 3, 4, 5})}) {
    CHECK(std::find(z6.begin(), z6.end(), s) != z6.end());
  }
}

TEST_CASE("intersection, sum and product", "[ideals]") {
  auto const z4 = test::z(4);
  auto const z6 = test::z(6);
  auto const a  = khr::HyperIdeal::make(z4, set(4, {0, 2}), khr::Side::two_sided);
  auto const w4 = khr::HyperIdeal::whole(z4);
  auto const p  = khr::HyperIdeal::make(z6, set(6, {0, 3}), khr::Side::two_sided);
  auto const q  = khr::HyperIdeal::make(z6, set(6, {0, 2, 4}), khr::Side::two_sided);

  CHECK(khr::ideal_intersection(a, w4) == a);
  CHECK(khr::ideal_intersection(p, q).members() == set(6, {0}));
  CHECK(khr::ideal_sum(p, q).members() == z6.full_set());
  CHECK(khr::ideal_sum(a, a) == a);
  CHECK(khr::ideal_sum(khr::HyperIdeal::zero(z4), a) == a);
  CHECK(khr::ideal_product(a, a).members() == set(4, {0}));
  CHECK(khr::ideal_product(p, q).members() == set(6, {0}));
  CHECK(khr::ideal_product(a, w4).members().subset_of(a.members()));
}

TEST_CASE("generated hyperideals", "[ideals]") {
  auto const z4 = test::z(4);
  CHECK(khr::generated_ideal(set(4, {}), z4).members() == set(4, {0}));
  CHECK(khr::generated_ideal(set(4, {2}), z4).members() == set(4, {0, 2}));
  CHECK(khr::generated_ideal(set(4, {1}), z4).members() == z4.full_set());
}

TEST_CASE("maximal and prime hyperideals", "[ideals]") {
  auto const l4 = khr::build_lattice(test::z(4));
  auto const lk = khr::build_lattice(test::krasner());
  auto const z4 = l4.ring;
  auto const a  = khr::HyperIdeal::make(z4, set(4, {0, 2}), khr::Side::two_sided);
  auto const o  = khr::HyperIdeal::zero(z4);
  CHECK(khr::is_maximal(a, l4));
  CHECK_FALSE(khr::is_maximal(o, l4));
  CHECK(khr::is_maximal(khr::HyperIdeal::zero(lk.ring), lk));
  CHECK(khr::is_prime(a, l4));
  auto const zp = khr::is_prime(o, l4);
  CHECK_FALSE(zp);
  REQUIRE(zp.witness);
  CHECK(zp.witness->first == set(4, {0, 2}));
  CHECK(zp.witness->second == set(4, {0, 2}));
  CHECK(khr::is_prime(khr::HyperIdeal::zero(lk.ring), lk));
}

TEST_CASE("maximal_above", "[ideals]") {
  auto const l4 = khr::build_lattice(test::z(4));
  auto const l6 = khr::build_lattice(test::z(6));
  CHECK(khr::maximal_above(khr::HyperIdeal::zero(l4.ring), l4).members() == set(4, {0, 2}));
  auto const a = khr::HyperIdeal::make(l4.ring, set(4, {0, 2}), khr::Side::two_sided);
  CHECK(khr::maximal_above(a, l4) == a);
  CHECK(khr::maximal_above(khr::HyperIdeal::zero(l6.ring), l6).members() == set(6, {0, 3}));
  CHECK_THROWS_AS(khr::maximal_above(khr::HyperIdeal::whole(l4.ring), l4), khr::InvalidInput);
}

TEST_CASE("quotient hyperrings", "[ideals]") {
  auto const z4 = test::z(4);
  auto const q  = khr::quotient_ring(z4, khr::HyperIdeal::make(z4, set(4, {0, 2}), khr::Side::two_sided));
  CHECK(q.ring.order() == 2);
  CHECK(khr::isomorphic(q.ring.raw(), khr::cyclic_ring(2)));
  CHECK(q.cosets == std::vector{set(4, {0, 2}), set(4, {1, 3})});

  auto const z6 = test::z(6);
  auto const same = khr::quotient_ring(z6, khr::HyperIdeal::zero(z6));
  CHECK(khr::isomorphic(same.ring.raw(), z6.raw()));
  CHECK(khr::quotient_ring(z6, khr::HyperIdeal::whole(z6)).ring.order() == 1);
}

TEST_CASE("nil radical", "[ideals]") {
  CHECK(khr::nil_radical(khr::build_lattice(test::z(4))).members() == set(4, {0, 2}));
  CHECK(khr::nil_radical(khr::build_lattice(test::z(6))).members() == set(6, {0}));
  CHECK(khr::nil_radical(khr::build_lattice(test::krasner())).members() == set(2, {0}));
}

TEST_CASE("lattices agree with brute force over the corpus", "[ideals][oracle]") {
  for (auto const& r : test::corpus(4).rings) {
    auto const l = khr::build_lattice(r);
    auto const o = oracle::from_raw(r.raw());
    auto const id = oracle::ideals(o);
    INFO(r.name());
    CHECK(as_oracle(l.two_sided) == sorted(id));
    CHECK(as_oracle(l.right) == sorted(oracle::right_ideals(o)));
    CHECK(as_oracle(l.maximal) == sorted(oracle::maximal_among(id, o.n)));
    CHECK(as_oracle(l.maximal_right)
          == sorted(oracle::maximal_among(oracle::right_ideals(o), o.n)));
    if (r.order() <= 3) {
      CHECK(as_oracle(l.prime) == sorted(oracle::primes(o)));
    }
  }
}

TEST_CASE("closure properties of the lattice", "[ideals][property]") {
  for (auto const& r : test::corpus(4).rings) {
    auto const l = khr::build_lattice(r);
    for (auto const& a : l.two_sided) {
      for (auto const& b : l.two_sided) {
        CHECK(khr::is_hyperideal(khr::ideal_intersection(a, b).members(), r));
        CHECK(khr::is_hyperideal(khr::ideal_sum(a, b).members(), r));
        CHECK(khr::is_hyperideal(khr::ideal_product(a, b).members(), r));
        CHECK(khr::ideal_product(a, b).members().subset_of(
            khr::ideal_intersection(a, b).members()));
      }
    }
  }
}

TEST_CASE("generated ideal routes coincide", "[ideals][property]") {
  for (auto const& r : test::corpus(3).rings) {
    auto const l = khr::build_lattice(r);
    for (std::uint64_t bits = 0; bits < (1U << r.order()); ++bits) {
      auto const x = khr::ElementSet::from_bits(r.order(), bits);
      CHECK(khr::generated_ideal_by_closure(x, r)
            == khr::generated_ideal_by_intersection(x, l));
    }
  }
}
