#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using test::set;

namespace {

  khr::SpectrumSpace space(khr::HyperRing const& r) {
    return khr::SpectrumSpace::build(khr::build_lattice(r));
  }

}  // namespace

TEST_CASE("kernels of point sets", "[spectrum]") {
  auto const x = space(test::z(6));
  REQUIRE(x.size() == 2);
  CHECK(x.kernel_of(x.all()).members() == set(6, {0}));
  CHECK(x.kernel_of(x.single(0)) == x.points()[0]);
  CHECK(x.kernel_of(x.none()).members() == x.ring().full_set());
}

TEST_CASE("closure on the small examples", "[spectrum]") {
  auto const x = space(test::z(6));
  CHECK(x.closure(x.none()).empty());
  auto const i = x.index_of(set(6, {0, 3}));
  REQUIRE(i);
  CHECK(x.closure(x.single(*i)) == x.single(*i));
  CHECK(x.closure(x.all()) == x.all());
  CHECK(x.closed_sets().size() == 4);
  CHECK(x.open_sets().size() == 4);
}

TEST_CASE("closure agrees with brute force", "[spectrum][oracle]") {
  for (auto const& r : test::corpus(4).rings) {
    auto const               x = space(r);
    std::vector<oracle::Set> points;
    for (auto const& p : x.points()) {
      points.emplace_back(p.members().begin(), p.members().end());
    }
    for (std::uint64_t bits = 0; bits < (1U << x.size()); ++bits) {
      auto const   s = khr::PointSet::from_bits(x.size(), bits);
      auto const   c = x.closure(s);
      std::set<int> got(c.begin(), c.end());
      CHECK(got == oracle::closure(points, std::set<int>(s.begin(), s.end())));
    }
  }
}

TEST_CASE("Kuratowski laws", "[spectrum]") {
  auto const x = space(test::z(6));
  auto const k = khr::verify_kuratowski(x);
  CHECK(k.report.ok());
  CHECK_FALSE(k.sampled);
  CHECK(k.pairs == 16);
  CHECK(khr::verify_kuratowski(space(test::z(2))).report.ok());

  auto const                    l = khr::build_lattice(test::z(6));
  std::vector<khr::HyperIdeal> many;
  while (many.size() <= khr::kExhaustivePairBound) {
    many.insert(many.end(), l.two_sided.begin(), l.two_sided.end());
  }
  khr::SpectrumSpace const big(l.ring, many);
  CHECK_FALSE(big.materialized());
  CHECK_THROWS_AS(big.closed_sets(), khr::BoundExceeded);
  auto const s = khr::verify_kuratowski(big, 2000);
  CHECK(s.sampled);
  CHECK(s.pairs == 2000);
  CHECK(s.report.ok());
}

TEST_CASE("separation axioms", "[spectrum]") {
  auto const l = khr::build_lattice(test::z(6));
  auto const x = khr::SpectrumSpace::build(l);
  CHECK(khr::is_T0(x));
  CHECK(khr::is_T1(x));
  CHECK(khr::points_equal_maximal(x, l));
  CHECK(khr::t1_characterization(x, l).agrees());

  // Points {0} and {0,2} in Z4: T0 but not T1.
  auto const l4 = khr::build_lattice(test::z(4));
  khr::SpectrumSpace const chain(l4.ring, {l4.two_sided[0], l4.two_sided[1]});
  CHECK(khr::is_T0(chain));
  CHECK_FALSE(khr::is_T1(chain));
}

TEST_CASE("compactness mechanism", "[spectrum]") {
  auto const x = space(test::z(6));
  auto const c = khr::compactness_witness(x);
  CHECK(c.compact);
  CHECK(c.mechanism_checked);
  CHECK(c.violations.empty());
  CHECK(c.minimal_families >= 1);
  CHECK(khr::ideal_sum(x.points()[0], x.points()[1]).members() == x.ring().full_set());
  CHECK_FALSE(khr::compactness_witness(space(test::z2_zero())).mechanism_checked);
}

TEST_CASE("irreducible sets, components and minimal points", "[spectrum]") {
  auto const x   = space(test::z(6));
  auto const irr = khr::irreducible_closed_sets(x);
  REQUIRE(irr.size() == 2);
  for (auto const& s : irr) {
    CHECK(s.points.size() == 1);
    REQUIRE(s.generic_points.size() == 1);
    CHECK(s.points.contains(static_cast<khr::Elem>(s.generic_points[0])));
  }
  CHECK(khr::irreducible_components(x).size() == 2);
  CHECK(khr::minimal_points(x) == std::vector<std::size_t>{0, 1});
  CHECK(khr::check_irreducible_closed_sets(x).ok());
  CHECK(khr::check_components_match_minimal_points(x).passed);

  auto const one = space(test::z(2));
  CHECK(khr::irreducible_closed_sets(one).size() == 1);
  CHECK(khr::irreducible_components(one) == std::vector{one.all()});

  auto const empty = space(test::z2_zero());
  CHECK(empty.size() == 0);
  CHECK(khr::is_noetherian_space(empty));
  CHECK(khr::irreducible_components(empty).empty());

  auto const         l4 = khr::build_lattice(test::z(4));
  khr::SpectrumSpace chain(l4.ring, {l4.two_sided[0], l4.two_sided[1]});
  CHECK(khr::irreducible_components(chain) == std::vector{chain.all()});
  CHECK(khr::minimal_points(chain) == std::vector<std::size_t>{0});
  std::size_t longest = 0;
  CHECK(khr::is_noetherian_space(chain, &longest));
  CHECK(longest == 3);
}

TEST_CASE("spectrum export", "[spectrum]") {
  auto const l = khr::build_lattice(test::z(4));
  auto const x = khr::SpectrumSpace::build(l);
  CHECK(khr::to_dot(x) == "digraph \"Prim(Z4)\" {\n  p0 [label=\"{0,2}\"];\n}\n");
  auto const j = khr::to_json(x, &l);
  CHECK(j["ring"] == "Z4");
  CHECK(j["points"][0]["members"] == nlohmann::json::array({0, 2}));
  CHECK(j["points"][0]["maximal"] == true);
  CHECK(j["T1"] == true);

  auto const         l6 = khr::build_lattice(test::z(6));
  khr::SpectrumSpace chain(l6.ring, {l6.two_sided[0], l6.two_sided[1]});
  CHECK(khr::specialization_edges(chain)
        == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("topology over the corpus", "[spectrum][property]") {
  std::size_t t1_disagree_unital = 0, t1_disagree = 0;
  for (auto const& r : test::corpus(4).rings) {
    auto const l = khr::build_lattice(r);
    auto const x = khr::SpectrumSpace::build(l);
    INFO(r.name());
    CHECK(khr::verify_kuratowski(x).report.ok());
    CHECK(khr::is_T0(x));
    CHECK(khr::check_irreducible_closed_sets(x).ok());
    CHECK(khr::check_components_match_minimal_points(x).passed);
    CHECK(khr::is_noetherian_space(x));
    if (r.is_unital()) {
      CHECK(khr::compactness_witness(x).violations.empty());
    }
    if (!khr::t1_characterization(x, l).agrees()) {
      ++t1_disagree;
      t1_disagree_unital += r.is_unital() ? 1 : 0;
    }
  }
  CHECK(t1_disagree_unital == 0);
  CHECK(t1_disagree == 525);
}

TEST_CASE("T1 and Prim = Max part ways on a non-unital ring", "[spectrum]") {
  auto const& rings = test::corpus(4).rings;
  auto const  it    = std::find_if(rings.begin(), rings.end(),
                                   [](auto const& r) { return r.name() == "H4.22"; });
  REQUIRE(it != rings.end());
  auto const l = khr::build_lattice(*it);
  auto const x = khr::SpectrumSpace::build(l);
  CHECK_FALSE(it->is_unital());
  CHECK(test::members(x.points()) == std::vector{set(4, {0, 1})});
  CHECK(test::members(l.maximal) == std::vector{set(4, {0, 1}), set(4, {0, 2})});
  CHECK(khr::is_T1(x));
  CHECK_FALSE(khr::points_equal_maximal(x, l));
}
