#include <catch2/catch_amalgamated.hpp>


#include "support.hpp"


namespace {

  std::string sample(std::string const& name) {
    return test::samples_dir() + "/" + name;
  }

  khr::SourceFile parse_ok(std::string const& text) {
    auto f = khr::parse(text);
    INFO(f.diagnostics_text());
    REQUIRE(f.ok());
    return f;
  }

  std::string const kZ2 = R"(ring Z2
order 2
add 0 0 : 0
add 0 1 : 1
add 1 0 : 1
add 1 1 : 0
neg 0 : 0
neg 1 : 1
mul 0 0 : 0
mul 0 1 : 0
mul 1 0 : 0
mul 1 1 : 1
end
)";

}  // namespace

TEST_CASE("parse a ring", "[frontend]") {
  auto const f = parse_ok(kZ2);
  REQUIRE(f.rings.size() == 1);
  CHECK(f.rings[0].raw.additive == khr::cyclic_group_table(2));
  CHECK(f.rings[0].raw.mul == khr::cyclic_ring(2).mul);
  CHECK_FALSE(f.rings[0].raw.unit);
  CHECK(f.rings[0].line == 1);

  auto const z4 = khr::parse_file(sample("z4.khr"));
  REQUIRE(z4.ok());
  REQUIRE(z4.rings.size() == 1);
  CHECK(z4.rings[0].raw == khr::cyclic_ring(4));
}

TEST_CASE("the symmetric directive mirrors sums", "[frontend]") {
  auto const f = khr::parse_file(sample("z2_symmetric.khr"));
  REQUIRE(f.ok());
  auto raw = f.rings[0].raw;
  CHECK(raw.additive == khr::cyclic_group_table(2));
}

TEST_CASE("parse errors carry positions", "[frontend]") {
  auto replace = [](std::string s, std::string const& from, std::string const& to) {
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  auto first = [](khr::SourceFile const& f) {
    REQUIRE_FALSE(f.ok());
    return f.diagnostics.front();
  };

  auto const empty = first(khr::parse(replace(kZ2, "add 1 1 : 0", "add 1 1 :")));
  CHECK(empty.message == "hypersum must be nonempty");
  CHECK(empty.line == 6);

  auto const multi = first(khr::parse(replace(kZ2, "mul 1 1 : 1", "mul 1 1 : 0 1")));
  CHECK(multi.message == "multiplication must be single-valued");
  CHECK(multi.line == 12);

  auto const dup = first(khr::parse(replace(kZ2, "mul 1 0 : 0", "mul 0 0 : 0")));
  CHECK(dup.message.find("duplicate entry") != std::string::npos);

  auto const missing = first(khr::parse(replace(kZ2, "mul 1 0 : 0\n", "")));
  CHECK(missing.message.find("missing entry") != std::string::npos);

  auto const range = first(khr::parse(replace(kZ2, "neg 1 : 1", "neg 1 : 5")));
  CHECK(range.line == 8);

  CHECK(first(khr::parse(replace(kZ2, "end\n", ""))).message.find("missing 'end'")
        != std::string::npos);
  CHECK(first(khr::parse("frobnicate\n")).message.starts_with("unknown declaration"));
  CHECK(khr::parse("# comment only\n\n").ok());
  CHECK_THROWS_AS(khr::parse_file(sample("does_not_exist.khr")), khr::InvalidInput);

  for (auto const& [file, message] :
       std::vector<std::pair<std::string, std::string>>{
           {"empty_sum.khr", "hypersum must be nonempty"},
           {"multi_mul.khr", "multiplication must be single-valued"},
           {"unknown_key.khr", "unknown key 'negate'"},
           {"duplicate_entry.khr", "duplicate entry"}}) {
    auto const f = khr::parse_file(sample("malformed/" + file));
    INFO(file);
    REQUIRE_FALSE(f.ok());
    CHECK(f.diagnostics.front().message.find(message) != std::string::npos);
  }
}

TEST_CASE("resolve modules and homomorphisms", "[frontend]") {
  auto const homs = khr::resolve(khr::parse_file(sample("homs.khr")));
  CHECK(homs.all_valid());
  CHECK(homs.homs.size() == 4);
  CHECK(homs.homs[0].first.map == std::vector<khr::Elem>{0, 1, 0, 1});

  auto const mods = khr::resolve(khr::parse_file(sample("modules.khr")));
  CHECK(mods.all_valid());
  REQUIRE(mods.modules.size() == 2);
  CHECK(khr::is_simple(mods.modules[1].first));
}

TEST_CASE("sabotaged samples fail the axioms", "[frontend]") {
  std::map<std::string, std::string> const expected{
      {"z4_mul_2_2.khr", "mul_associativity"}, {"krasner_add_1_1.khr", "negation"},
      {"z4_noncomm.khr", "commutativity"},     {"z6_mul_5_5.khr", "mul_associativity"},
      {"z2_unit_0.khr", "unit"},               {"z4_add_1_1.khr", "associativity"}};
  for (auto const& [file, check] : expected) {
    auto const f = khr::parse_file(sample("sabotaged/" + file));
    INFO(file);
    REQUIRE(f.ok());
    auto const res = khr::resolve(f);
    CHECK_FALSE(res.all_valid());
    CHECK(res.ring_reports[0].second.first_failure()->id == check);
  }
  for (auto const& file : {"z2.khr", "z4.khr", "z6.khr", "krasner.khr"}) {
    CHECK(khr::resolve(khr::parse_file(sample(file))).all_valid());
  }
}

TEST_CASE("emit then parse is a fixpoint", "[frontend][property]") {
  for (auto const& r : test::corpus(4).rings) {
    auto const text = khr::emit(r.raw());
    auto const f    = khr::parse(text);
    REQUIRE(f.ok());
    REQUIRE(f.rings.size() == 1);
    CHECK(f.rings[0].raw == r.raw());
    CHECK(f.rings[0].raw.name == r.name());
    CHECK(khr::emit(f.rings[0].raw) == text);
  }
  auto const mods = khr::resolve(khr::parse_file(sample("modules.khr")));
  auto const homs = khr::resolve(khr::parse_file(sample("homs.khr")));
  std::string text = khr::emit(mods.rings.at("Z4").raw());
  for (auto const& [m, rep] : mods.modules) {
    text += khr::emit(m);
  }
  auto const again = khr::resolve(khr::parse(text));
  REQUIRE(again.modules.size() == mods.modules.size());
  for (std::size_t i = 0; i < again.modules.size(); ++i) {
    CHECK(again.modules[i].first.raw().act == mods.modules[i].first.raw().act);
  }
  std::string htext;
  for (auto const& name : homs.ring_order) {
    htext += khr::emit(homs.rings.at(name).raw());
  }
  for (auto const& [phi, rep] : homs.homs) {
    htext += khr::emit(phi);
  }
  auto const hagain = khr::resolve(khr::parse(htext));
  REQUIRE(hagain.homs.size() == homs.homs.size());
  for (std::size_t i = 0; i < homs.homs.size(); ++i) {
    CHECK(hagain.homs[i].first.map == homs.homs[i].first.map);
    CHECK(hagain.homs[i].first.unit_preserving == homs.homs[i].first.unit_preserving);
  }
}

TEST_CASE("corpus generation", "[frontend]") {
  auto const iso = khr::generate_corpus({4, khr::Dedupe::isomorphism, 2});
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    counts.push_back(iso.of_order(n).size());
  }
  CHECK(counts == std::vector<std::size_t>{1, 4, 19, 139});
  CHECK(test::corpus(4).rings.size() == 1 + 4 + 33 + 597);

  auto const two = khr::generate_corpus({2, khr::Dedupe::none, 1});
  CHECK(two.rings.size() == khr::generate_corpus({2, khr::Dedupe::isomorphism, 1}).rings.size());
  bool has_z2 = false, has_k = false;
  for (auto const& r : two.of_order(2)) {
    has_z2 = has_z2 || khr::isomorphic(r.raw(), khr::cyclic_ring(2));
    has_k  = has_k || khr::isomorphic(r.raw(), khr::krasner_hyperfield());
  }
  CHECK(has_z2);
  CHECK(has_k);
  CHECK(khr::generate_corpus({1, khr::Dedupe::none, 1}).rings.size() == 1);
  CHECK_THROWS_AS(khr::generate_corpus({5, khr::Dedupe::none, 1}), khr::BoundExceeded);
}

TEST_CASE("the corpus does not depend on the thread count", "[frontend][property]") {
  auto const a = khr::generate_corpus({4, khr::Dedupe::none, 1});
  auto const b = khr::generate_corpus({4, khr::Dedupe::none, 8});
  CHECK(a.fingerprint == b.fingerprint);
  CHECK(a.fingerprint == test::corpus(4).fingerprint);
  CHECK(a.fingerprint.size() == 64);
  CHECK(khr::sha256_hex("abc")
        == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("theorem suite on single rings", "[frontend]") {
  auto const z4 = khr::check_ring(khr::cyclic_ring(4));
  CHECK(z4.valid);
  CHECK(z4.ok());
  CHECK(z4.checks.size() == std::size(khr::kRingChecks));

  auto bad = khr::cyclic_ring(4);
  bad.mul[2 * 4 + 2] = 1;
  auto const gated = khr::check_ring(bad);
  CHECK_FALSE(gated.valid);
  CHECK(gated.find("axioms")->status == khr::Status::fail);
  for (auto const& c : gated.checks) {
    if (c.id != "axioms") {
      CHECK(c.status == khr::Status::skip);
    }
  }
}

TEST_CASE("suite reports are byte-identical across thread counts", "[frontend][property]") {
  auto const c3 = khr::generate_corpus({3, khr::Dedupe::none, 1});
  khr::SuiteOptions one, many;
  many.threads = 6;
  auto const a = khr::to_json(khr::run_theorem_suite(c3, one), "T").dump(2);
  auto const b = khr::to_json(khr::run_theorem_suite(c3, many), "T").dump(2);
  CHECK(a == b);
}

TEST_CASE("counterexample search", "[frontend]") {
  auto const& rings = test::corpus(3).rings;
  CHECK(khr::counterexample_search("prime-not-primitive", rings).findings.empty());
  CHECK(khr::counterexample_search("primitive-not-maximal", rings).findings.empty());
  auto const t1 = khr::counterexample_search("t1-not-max", rings);
  CHECK(t1.examined == rings.size());
  CHECK(t1.findings.size() == 21);
  auto const again = khr::counterexample_search("t1-not-max", rings, {4, 2, 6});
  REQUIRE(again.findings.size() == t1.findings.size());
  for (std::size_t i = 0; i < t1.findings.size(); ++i) {
    CHECK(again.findings[i].subject == t1.findings[i].subject);
    CHECK(again.findings[i].detail == t1.findings[i].detail);
  }
  auto const pull = khr::counterexample_search("nonsurjective-pullback", rings);
  CHECK(pull.examined == 1642);
  CHECK(pull.findings.size() == 636);
  CHECK(khr::counterexample_search("density-mismatch", rings).findings.empty());
  CHECK_THROWS_AS(khr::counterexample_search("no-such-property", rings), khr::InvalidInput);
}
