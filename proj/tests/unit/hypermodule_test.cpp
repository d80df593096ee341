#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using test::set;

namespace {

  khr::HyperModule z4_mod_2() {
    auto const z4 = test::z(4);
    return khr::quotient_module(khr::regular_module(z4), set(4, {0, 2})).module;
  }

  // Subsets closed under a - b and the action, by brute force.
  std::vector<khr::ElementSet> oracle_submodules(khr::HyperModule const& m) {
    std::vector<khr::ElementSet> out;
    for (std::uint64_t bits = 1; bits < (1U << m.order()); bits += 2) {
      auto const s  = khr::ElementSet::from_bits(m.order(), bits);
      bool       ok = true;
      for (auto a : s) {
        for (auto b : s) {
          ok = ok && m.sum(a, m.neg(b)).subset_of(s);
        }
        for (khr::Elem r = 0; r < m.ring().order(); ++r) {
          ok = ok && s.contains(m.act(a, r));
        }
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

  khr::ElementSet oracle_annihilator(khr::HyperModule const& m) {
    khr::ElementSet out(m.ring().order());
    for (khr::Elem r = 0; r < m.ring().order(); ++r) {
      bool kills = true;
      for (khr::Elem x = 0; x < m.order(); ++x) {
        kills = kills && m.act(x, r) == 0;
      }
      if (kills) {
        out.insert(r);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("module axioms", "[modules]") {
  auto const z4 = test::z(4);
  CHECK(khr::verify_hypermodule(khr::regular_module(z4).raw()).ok());
  CHECK(khr::verify_hypermodule(z4_mod_2().raw()).ok());

  auto raw = khr::regular_module(z4).raw();
  raw.act[1 * 4 + 0] = 1;
  auto const rep = khr::verify_hypermodule(raw);
  CHECK_FALSE(rep.passed("act_zero"));
  CHECK_FALSE(khr::HyperModule::validate(raw));
}

TEST_CASE("regular modules", "[modules]") {
  auto const m4 = khr::regular_module(test::z(4));
  CHECK(m4.order() == 4);
  CHECK(m4.additive() == test::z(4).additive());
  CHECK(khr::regular_module(test::krasner()).order() == 2);
  CHECK(khr::regular_module(test::ring(khr::zero_ring())).order() == 1);
}

TEST_CASE("subhypermodules", "[modules]") {
  auto const m4 = khr::regular_module(test::z(4));
  CHECK(khr::enumerate_subhypermodules(m4) == std::vector{set(4, {0}), set(4, {0, 2}), m4.full_set()});
  auto const s = z4_mod_2();
  CHECK(khr::enumerate_subhypermodules(s) == std::vector{s.zero_set(), s.full_set()});
  auto const zero = khr::regular_module(test::ring(khr::zero_ring()));
  CHECK(khr::enumerate_subhypermodules(zero) == std::vector{zero.zero_set()});
}

TEST_CASE("simplicity", "[modules]") {
  CHECK(khr::is_simple(z4_mod_2()));
  CHECK_FALSE(khr::is_simple(khr::regular_module(test::z(4))));
  CHECK_FALSE(khr::is_simple(khr::regular_module(test::ring(khr::zero_ring()))));
  CHECK_FALSE(khr::is_simple(khr::regular_module(test::z2_zero())));
}

TEST_CASE("cyclic submodules and M a", "[modules]") {
  auto const m4 = khr::regular_module(test::z(4));
  CHECK(khr::cyclic_submodule(m4, 0) == set(4, {0}));
  CHECK(khr::cyclic_submodule(m4, 2) == set(4, {0, 2}));
  auto const s = z4_mod_2();
  CHECK(khr::cyclic_submodule(s, 1) == s.full_set());

  auto const z4 = m4.ring();
  CHECK(khr::module_ideal_product(m4, khr::HyperIdeal::zero(z4)) == set(4, {0}));
  CHECK(khr::module_ideal_product(
            m4, khr::HyperIdeal::make(z4, set(4, {0, 2}), khr::Side::two_sided))
        == set(4, {0, 2}));
  CHECK(khr::module_ideal_product(s, khr::HyperIdeal::whole(z4)) == s.full_set());
}

TEST_CASE("annihilators", "[modules]") {
  auto const z4 = test::z(4);
  CHECK(khr::annihilator(khr::regular_module(z4)).members() == set(4, {0}));
  CHECK(khr::annihilator(z4_mod_2()).members() == set(4, {0, 2}));
  auto const zero = khr::quotient_module(khr::regular_module(z4), z4.full_set()).module;
  CHECK(khr::annihilator(zero).members() == z4.full_set());
}

TEST_CASE("quotient modules", "[modules]") {
  auto const m4 = khr::regular_module(test::z(4));
  auto const same = khr::quotient_module(m4, m4.zero_set());
  CHECK(khr::find_isomorphism(same.module, m4));
  CHECK(khr::quotient_module(m4, m4.full_set()).module.order() == 1);
  auto const q = khr::quotient_module(m4, set(4, {0, 2}));
  CHECK(q.module.order() == 2);
  CHECK(khr::is_simple(q.module));
  CHECK(khr::kernel(q.projection) == set(4, {0, 2}));
  CHECK_THROWS_AS(khr::quotient_module(m4, set(4, {0, 1})), khr::InvalidInput);
}

TEST_CASE("module homomorphisms", "[modules]") {
  auto const m4 = khr::regular_module(test::z(4));
  auto const id = khr::identity_hom(m4);
  CHECK(khr::hom_check(id).ok());
  CHECK(khr::kernel(id) == set(4, {0}));
  CHECK(khr::image(id) == m4.full_set());
  khr::ModuleHom const zero{m4, m4, {0, 0, 0, 0}};
  CHECK(khr::hom_check(zero).ok());
  CHECK(khr::kernel(zero) == m4.full_set());
  CHECK(khr::image(zero) == set(4, {0}));
  CHECK(khr::find_isomorphism(m4, m4));
  CHECK_FALSE(khr::find_isomorphism(m4, z4_mod_2()));
}

TEST_CASE("module facts over the corpus", "[modules][property]") {
  for (auto const& r : test::corpus(3).rings) {
    auto const l       = khr::build_lattice(r);
    auto const regular = khr::regular_module(r);
    std::vector<khr::HyperModule> family{regular};
    for (auto const& k : l.right) {
      family.push_back(khr::quotient_module(regular, k.members()).module);
    }
    for (auto const& m : family) {
      INFO(r.name() << " " << m.name());
      CHECK(khr::verify_hypermodule(m.raw()).ok());
      CHECK(khr::check_negation_compatibility(m).passed);
      CHECK(khr::enumerate_subhypermodules(m) == oracle_submodules(m));
      CHECK(khr::annihilator(m).members() == oracle_annihilator(m));
      CHECK(khr::is_hyperideal(khr::annihilator(m).members(), r));
      for (auto const& a : l.two_sided) {
        CHECK(khr::is_subhypermodule(khr::module_ideal_product(m, a), m));
      }
      bool cyclic = !khr::has_zero_action(m);
      for (khr::Elem e = 1; e < m.order(); ++e) {
        cyclic = cyclic && khr::cyclic_submodule(m, e) == m.full_set();
      }
      CHECK(static_cast<bool>(khr::is_simple(m)) == cyclic);
    }
    for (auto const& a : family) {
      for (auto const& b : family) {
        for (auto const& mu : khr::enumerate_module_homs(a, b)) {
          CHECK(khr::hom_check(mu).ok());
          CHECK(khr::check_first_isomorphism(mu).passed);
        }
      }
    }
  }
}
