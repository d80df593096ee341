#ifndef KHR_THEOREM_SUITE_HPP_
#define KHR_THEOREM_SUITE_HPP_

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "corpus.hpp"
#include "error.hpp"
#include "hypermodule.hpp"
#include "hyperring.hpp"
#include "ideals.hpp"
#include "morphisms.hpp"
#include "parallel.hpp"
#include "primitivity.hpp"
#include "spectrum.hpp"

namespace khr {

  inline constexpr std::string_view kReportSchema = "khr-report/1";

  enum class Status { pass, fail, skip };

  inline std::string_view to_string(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::skip:
        return "skip";
    }
    return "?";
  }

  struct CheckSpec {
    std::string_view id;
    std::string_view anchor;
  };

  // Every named check with the statement it tests.
  inline constexpr CheckSpec kRingChecks[] = {
      {"axioms", "Krasner hyperring axioms hold exhaustively"},
      {"ideal_lattice_closure",
       "Intersections, sums and products of hyperideals are hyperideals"},
      {"generated_ideal_routes",
       "The generated hyperideal is both a closure and an intersection"},
      {"annihilator_formula",
       "Ann(R/m) = {r : Rr within m} and R/m is simple for maximal right m "
       "with R^2 not inside m"},
      {"primitive_is_prime", "Every primitive hyperideal is prime"},
      {"maximal_is_primitive",
       "Every maximal hyperideal of a unital hyperring is primitive"},
      {"quotient_primitivity", "p is primitive iff R/p is a primitive hyperring"},
      {"kuratowski", "The closure operator on Prim(R) satisfies the Kuratowski laws"},
      {"t0", "Prim(R) is a T0 space"},
      {"t1_iff_prim_is_max", "Prim(R) is T1 iff Prim(R) = Max(R)"},
      {"irreducible_closed_sets",
       "Irreducible closed sets are point closures with a unique generic point"},
      {"components_are_minimal",
       "Irreducible components are closures of minimal primitive hyperideals"},
      {"noetherian", "Prim(R) is a Noetherian space"},
      {"compactness_mechanism",
       "Closed families with empty intersection have kernels summing to R"},
      {"radical_homeomorphism",
       "Prim(R) is homeomorphic to Prim(R/nil radical)"},
      {"module_negation", "(-m)r = -(mr) = m(-r) in every hypermodule"},
      {"annihilator_is_ideal", "The annihilator of a hypermodule is a two-sided hyperideal"},
      {"module_ideal_product", "M a is a subhypermodule"},
      {"simple_iff_cyclic", "M is simple iff its action is nonzero and every m != 0 generates M"},
      {"first_isomorphism", "M/ker(mu) is isomorphic to im(mu)"},
  };

  inline constexpr CheckSpec kHomChecks[] = {
      {"hom_pullback_in_prim", "phi^{-1}(p) is primitive for every primitive p of the target"},
      {"hom_continuous", "phi* is continuous"},
      {"hom_closed_embedding",
       "For surjective phi, phi* is a homeomorphism onto the closed set Cl(ker phi)"},
      {"hom_density", "The image of phi* is dense iff ker phi lies in the nil radical"},
      {"hom_functoriality", "(psi phi)* = phi* psi*"},
  };

  inline std::string_view anchor_of(std::string_view id) {
    for (auto const& c : kRingChecks) {
      if (c.id == id) {
        return c.anchor;
      }
    }
    for (auto const& c : kHomChecks) {
      if (c.id == id) {
        return c.anchor;
      }
    }
    return {};
  }

  struct SuiteCheck {
    std::string id;
    Status      status = Status::pass;
    std::string witness;
    std::string detail;
  };

  struct RingReport {
    std::string             name;
    std::size_t             order  = 0;
    bool                    unital = false;
    bool                    valid  = false;
    VerificationReport      axioms;
    std::vector<SuiteCheck> checks;

    SuiteCheck const* find(std::string_view id) const {
      for (auto const& c : checks) {
        if (c.id == id) {
          return &c;
        }
      }
      return nullptr;
    }

    bool ok() const {
      for (auto const& c : checks) {
        if (c.status == Status::fail) {
          return false;
        }
      }
      return true;
    }
  };

  // Outcome of one hom-sweep check over many homomorphisms.
  struct AggregateCheck {
    std::string id;
    std::size_t passed  = 0;
    std::size_t failed  = 0;
    std::size_t skipped = 0;
    std::string first_witness;
    std::string note;

    void record(Status s, std::string const& witness = {}) {
      switch (s) {
        case Status::pass:
          ++passed;
          break;
        case Status::fail:
          if (failed++ == 0) {
            first_witness = witness;
          }
          break;
        case Status::skip:
          ++skipped;
          break;
      }
    }

    void merge(AggregateCheck const& that) {
      if (failed == 0 && that.failed != 0) {
        first_witness = that.first_witness;
      }
      passed += that.passed;
      failed += that.failed;
      skipped += that.skipped;
    }
  };

  struct HomSweep {
    std::size_t                 pairs = 0;
    std::size_t                 homs  = 0;
    std::size_t                 surjective = 0;
    std::size_t                 density_needs_surjectivity = 0;
    std::vector<AggregateCheck> checks;

    AggregateCheck const* find(std::string_view id) const {
      for (auto const& c : checks) {
        if (c.id == id) {
          return &c;
        }
      }
      return nullptr;
    }

    bool ok() const {
      for (auto const& c : checks) {
        if (c.failed != 0) {
          return false;
        }
      }
      return true;
    }
  };

  struct SuiteOptions {
    std::size_t threads        = 1;
    bool        hom_sweep      = true;
    std::size_t hom_pair_bound = 6;
    std::size_t module_family  = 8;
  };

  struct SuiteReport {
    std::optional<std::string> corpus_fingerprint;
    std::size_t                order_bound = 0;
    std::vector<RingReport>    rings;
    std::optional<HomSweep>    homs;

    bool ok() const {
      for (auto const& r : rings) {
        if (!r.ok()) {
          return false;
        }
      }
      return !homs || homs->ok();
    }

    std::size_t invalid_rings() const {
      return static_cast<std::size_t>(
          std::count_if(rings.begin(), rings.end(), [](auto const& r) { return !r.valid; }));
    }
  };

  namespace detail {
    inline std::string set_list(std::vector<HyperIdeal> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + v[i].members().to_string();
      }
      return out + "]";
    }

    // Runs f, turning theorem violations into failures and bound overruns
    // into skips.
    template <typename F>
    SuiteCheck run_check(std::string id, F&& f) {
      SuiteCheck c{std::move(id), Status::pass, {}, {}};
      try {
        f(c);
      } catch (TheoremViolation const& e) {
        c.status = Status::fail;
        c.detail = e.check() + ": " + e.what();
      } catch (BoundExceeded const& e) {
        c.status = Status::skip;
        c.detail = e.what();
      }
      return c;
    }

    inline void fail_check(SuiteCheck& c, std::string witness, std::string detail = {}) {
      if (c.status == Status::fail) {
        return;
      }
      c.status  = Status::fail;
      c.witness = std::move(witness);
      c.detail  = std::move(detail);
    }

    inline std::vector<HyperModule> module_family(IdealLattice const& l, std::size_t limit) {
      auto const               regular = regular_module(l.ring);
      std::vector<HyperModule> out{regular};
      for (auto const& k : l.right) {
        if (out.size() >= limit) {
          break;
        }
        if (k.members() != l.ring.zero_set()) {
          out.push_back(quotient_module(regular, k.members()).module);
        }
      }
      return out;
    }
  }  // namespace detail

  // Every ring check on one validated ring.
  inline std::vector<SuiteCheck> ring_checks(HyperRing const& r, SuiteOptions const& options) {
    using detail::fail_check;
    using detail::run_check;
    std::vector<SuiteCheck> out;
    auto const              l    = build_lattice(r);
    auto const              n    = r.order();

    out.push_back(run_check("ideal_lattice_closure", [&](SuiteCheck& c) {
      std::size_t count = 0;
      for (auto const* fam : {&l.two_sided, &l.right}) {
        for (auto const& a : *fam) {
          for (auto const& b : *fam) {
            auto const i = ideal_intersection(a, b);
            auto const s = ideal_sum(a, b);
            for (auto const* x : {&i, &s}) {
              if (auto chk = is_hyperideal(x->members(), r, a.side()); !chk) {
                fail_check(c, a.members().to_string() + "," + b.members().to_string(),
                           chk.reason);
              }
            }
            if (a.side() == Side::two_sided) {
              auto const p = ideal_product(a, b);
              if (auto chk = is_hyperideal(p.members(), r, Side::two_sided); !chk) {
                fail_check(c, a.members().to_string() + "*" + b.members().to_string(),
                           chk.reason);
              }
            }
            ++count;
          }
        }
      }
      c.detail = std::to_string(count) + " pairs";
    }));

    out.push_back(run_check("generated_ideal_routes", [&](SuiteCheck& c) {
      if (n > kDefaultSubsetBound) {
        throw BoundExceeded("ring too large for the subset sweep");
      }
      for_each_subset(r.full_set(), [&](ElementSet const& x) { generated_ideal(x, l); });
      c.detail = std::to_string(std::uint64_t{1} << n) + " subsets";
    }));

    std::vector<HyperIdeal> prim;
    out.push_back(run_check("annihilator_formula", [&](SuiteCheck& c) {
      auto const certs = prim_certificates(l);
      c.detail         = std::to_string(certs.size()) + " certificates";
    }));
    bool const prim_ok = out.back().status == Status::pass;
    if (prim_ok) {
      prim = prim_set(l);
    }

    auto needs_prim = [&](std::string id, auto&& f) {
      if (!prim_ok) {
        out.push_back({std::move(id), Status::skip, {}, "Prim(R) unavailable"});
        return;
      }
      out.push_back(run_check(std::move(id), f));
    };

    needs_prim("primitive_is_prime", [&](SuiteCheck& c) {
      for (auto const& p : prim) {
        if (std::find(l.prime.begin(), l.prime.end(), p) == l.prime.end()) {
          fail_check(c, p.members().to_string(), "primitive but not prime");
        }
      }
    });

    needs_prim("maximal_is_primitive", [&](SuiteCheck& c) {
      if (!r.is_unital()) {
        c.status = Status::skip;
        c.detail = "ring not unital";
        return;
      }
      for (auto const& m : l.maximal) {
        if (std::find(prim.begin(), prim.end(), m) == prim.end()) {
          fail_check(c, m.members().to_string(), "maximal but not primitive");
        }
      }
    });

    needs_prim("quotient_primitivity", [&](SuiteCheck& c) {
      for (auto const& p : l.two_sided) {
        if (!p.proper()) {
          continue;
        }
        auto const q = check_primitive_iff_quotient_primitive(p, l);
        if (!q.holds()) {
          fail_check(c, p.members().to_string(),
                     q.in_prim ? "primitive but R/p not primitive"
                               : "R/p primitive but p not primitive");
        }
      }
    });

    std::optional<SpectrumSpace> x;
    if (prim_ok) {
      x.emplace(r, prim);
    }
    auto needs_space = [&](std::string id, auto&& f) {
      if (!x) {
        out.push_back({std::move(id), Status::skip, {}, "Prim(R) unavailable"});
        return;
      }
      out.push_back(run_check(std::move(id), f));
    };

    needs_space("kuratowski", [&](SuiteCheck& c) {
      auto const k = verify_kuratowski(*x);
      if (auto const* f = k.report.first_failure()) {
        fail_check(c, f->id, f->detail);
      }
      c.detail = std::to_string(k.pairs) + (k.sampled ? " sampled pairs" : " pairs");
    });
    needs_space("t0", [&](SuiteCheck& c) {
      if (!is_T0(*x)) {
        fail_check(c, "", "two points share a closure");
      }
    });
    needs_space("t1_iff_prim_is_max", [&](SuiteCheck& c) {
      auto const t = t1_characterization(*x, l);
      if (!t.agrees()) {
        fail_check(c,
                   "Prim=" + detail::set_list(x->points()) + " Max="
                       + detail::set_list(l.maximal),
                   std::string(t.t1 ? "T1" : "not T1") + " but Prim "
                       + (t.points_equal_max ? "=" : "!=") + " Max");
      }
    });
    needs_space("irreducible_closed_sets", [&](SuiteCheck& c) {
      auto const rep = check_irreducible_closed_sets(*x);
      if (auto const* f = rep.first_failure()) {
        fail_check(c, f->id, f->detail);
      }
    });
    needs_space("components_are_minimal", [&](SuiteCheck& c) {
      auto const res = check_components_match_minimal_points(*x);
      if (!res.passed) {
        fail_check(c, "", res.detail);
      }
    });
    needs_space("noetherian", [&](SuiteCheck& c) {
      std::size_t chain = 0;
      if (!is_noetherian_space(*x, &chain)) {
        fail_check(c, "", "descending chain does not stabilize");
      }
      c.detail = "longest chain " + std::to_string(chain) + ", "
                 + std::to_string(minimal_points(*x).size()) + " minimal points";
    });
    needs_space("compactness_mechanism", [&](SuiteCheck& c) {
      auto const rep = compactness_witness(*x);
      if (!rep.mechanism_checked) {
        c.status = Status::skip;
        c.detail = rep.note;
        return;
      }
      if (!rep.violations.empty()) {
        std::string w;
        for (auto const& s : rep.violations.front()) {
          w += s.to_string();
        }
        fail_check(c, w, "kernel sum is not R");
      }
      c.detail = std::to_string(rep.families) + " families, "
                 + std::to_string(rep.minimal_families) + " minimal";
    });
    needs_space("radical_homeomorphism", [&](SuiteCheck& c) {
      auto const rep = check_radical_homeomorphism(l);
      if (auto const* f = rep.first_failure()) {
        fail_check(c, f->id, f->detail);
      }
    });

    std::vector<HyperModule> family;
    try {
      family = detail::module_family(l, options.module_family);
    } catch (TheoremViolation const&) {
    }
    out.push_back(run_check("module_negation", [&](SuiteCheck& c) {
      for (auto const& m : family) {
        if (auto res = check_negation_compatibility(m); !res.passed) {
          fail_check(c, m.name(), res.detail);
        }
      }
    }));
    out.push_back(run_check("annihilator_is_ideal", [&](SuiteCheck& c) {
      for (auto const& m : family) {
        annihilator(m);
      }
      c.detail = std::to_string(family.size()) + " modules";
    }));
    out.push_back(run_check("module_ideal_product", [&](SuiteCheck&) {
      for (auto const& m : family) {
        for (auto const& a : l.two_sided) {
          module_ideal_product(m, a);
        }
      }
    }));
    out.push_back(run_check("simple_iff_cyclic", [&](SuiteCheck& c) {
      for (auto const& m : family) {
        bool cyclic = !has_zero_action(m);
        for (Elem e = 1; e < m.order() && cyclic; ++e) {
          cyclic = cyclic_submodule(m, e) == m.full_set();
        }
        if (static_cast<bool>(is_simple(m)) != cyclic) {
          fail_check(c, m.name(), cyclic ? "cyclic but not simple" : "simple but not cyclic");
        }
      }
    }));
    out.push_back(run_check("first_isomorphism", [&](SuiteCheck& c) {
      std::size_t count = 0;
      for (auto const& a : family) {
        for (auto const& b : family) {
          for (auto const& mu : enumerate_module_homs(a, b)) {
            ++count;
            if (auto res = check_first_isomorphism(mu); !res.passed) {
              std::string w = a.name() + "->" + b.name() + " [";
              for (std::size_t i = 0; i < mu.map.size(); ++i) {
                w += (i ? "," : "") + std::to_string(mu.map[i]);
              }
              fail_check(c, w + "]", res.detail);
            }
          }
        }
      }
      c.detail = std::to_string(count) + " homomorphisms";
    }));
    return out;
  }

  inline RingReport check_ring(RawHyperRing const& raw, SuiteOptions const& options = {}) {
    RingReport rep;
    rep.name  = raw.name;
    rep.order = raw.order();
    auto ring = HyperRing::validate(raw, &rep.axioms);
    rep.valid = ring.has_value();
    SuiteCheck axioms{"axioms", Status::pass, {}, {}};
    if (auto const* f = rep.axioms.first_failure()) {
      axioms.status = Status::fail;
      axioms.witness = "(";
      for (std::size_t i = 0; i < f->witness.size(); ++i) {
        axioms.witness += (i ? "," : "") + std::to_string(f->witness[i]);
      }
      axioms.witness += ")";
      axioms.detail = f->id + ": " + f->detail;
    }
    rep.checks.push_back(axioms);
    if (!ring) {
      for (auto const& entry : kRingChecks) {
        if (entry.id != "axioms") {
          rep.checks.push_back({std::string(entry.id), Status::skip, {}, "axioms failed"});
        }
      }
      return rep;
    }
    rep.unital = ring->is_unital();
    auto more  = ring_checks(*ring, options);
    rep.checks.insert(rep.checks.end(), more.begin(), more.end());
    return rep;
  }

  namespace detail {
    struct RingData {
      HyperRing     ring;
      IdealLattice  lattice;
      SpectrumSpace space;
    };
  }  // namespace detail

  // Every strong homomorphism between rings whose orders add up to at most
  // pair_bound, with phi*, continuity, the closed embedding (surjections),
  // density and functoriality checked on each.
  inline HomSweep run_hom_sweep(std::vector<HyperRing> const& rings,
                                SuiteOptions const&           options = {}) {
    std::vector<std::optional<detail::RingData>> data(rings.size());
    auto built = parallel_map(rings.size(), options.threads, [&](std::size_t i) {
      std::optional<detail::RingData> d;
      if (rings[i].order() > options.hom_pair_bound) {
        return d;
      }
      try {
        auto l = build_lattice(rings[i]);
        auto x = SpectrumSpace::build(l);
        d.emplace(detail::RingData{rings[i], std::move(l), std::move(x)});
      } catch (TheoremViolation const&) {
      }
      return d;
    });
    data = std::move(built);

    auto make_checks = [] {
      std::vector<AggregateCheck> v;
      for (auto const& c : kHomChecks) {
        v.push_back({std::string(c.id), 0, 0, 0, {}, {}});
      }
      return v;
    };
    struct Partial {
      std::size_t                 pairs = 0, homs = 0, surjective = 0, needs = 0;
      std::vector<AggregateCheck> checks;
    };

    auto partials = parallel_map(rings.size(), options.threads, [&](std::size_t i) {
      Partial p;
      p.checks = make_checks();
      if (!data[i]) {
        return p;
      }
      auto const& src = *data[i];
      for (std::size_t j = 0; j < rings.size(); ++j) {
        if (!data[j] || rings[i].order() + rings[j].order() > options.hom_pair_bound) {
          continue;
        }
        auto const& tgt = *data[j];
        ++p.pairs;
        auto const homs = enumerate_homs(src.ring, tgt.ring);
        auto const endo = enumerate_homs(tgt.ring, tgt.ring);
        for (auto const& phi : homs) {
          ++p.homs;
          auto const label = hom_label(phi);
          auto const star  = induced_map(phi, src.space, tgt.space);
          if (star.lands_in_prim) {
            p.checks[0].record(Status::pass);
          } else {
            p.checks[0].record(Status::fail,
                               label + " pulls "
                                   + tgt.space.points()[*star.outside].members().to_string()
                                   + " back to "
                                   + star.preimages[*star.outside].members().to_string());
          }
          if (!star.continuous) {
            p.checks[1].record(Status::skip);
          } else {
            p.checks[1].record(*star.continuous ? Status::pass : Status::fail, label);
          }
          if (phi.is_surjective()) {
            ++p.surjective;
            auto const rep = check_closed_embedding(phi, src.space, tgt.space);
            auto const* f  = rep.first_failure();
            p.checks[2].record(f ? Status::fail : Status::pass,
                               f ? label + " " + f->id : std::string{});
          } else {
            p.checks[2].record(Status::skip);
          }
          auto const d = check_density(phi, src.lattice, src.space, tgt.space);
          if (d.status == DensityStatus::violated) {
            p.checks[3].record(Status::fail,
                               label + (d.dense ? " dense" : " not dense")
                                   + (d.kernel_in_nilradical ? ", ker in nil radical"
                                                             : ", ker not in nil radical"));
          } else if (d.status == DensityStatus::needs_surjectivity) {
            ++p.needs;
            p.checks[3].record(Status::skip);
          } else {
            p.checks[3].record(Status::pass);
          }
          for (auto const& psi : endo) {
            auto const res = check_functoriality(phi, psi, tgt.space);
            p.checks[4].record(res.passed ? Status::pass : Status::fail,
                               label + " then " + hom_label(psi));
          }
        }
      }
      return p;
    });

    HomSweep out;
    out.checks = make_checks();
    for (auto const& p : partials) {
      out.pairs += p.pairs;
      out.homs += p.homs;
      out.surjective += p.surjective;
      out.density_needs_surjectivity += p.needs;
      for (std::size_t k = 0; k < out.checks.size(); ++k) {
        out.checks[k].merge(p.checks[k]);
      }
    }
    if (out.density_needs_surjectivity != 0) {
      out.checks[3].note = std::to_string(out.density_needs_surjectivity)
                           + " non-surjective homomorphisms where density and the "
                             "kernel condition disagree (needs surjectivity)";
    }
    return out;
  }

  inline SuiteReport run_theorem_suite(std::vector<RawHyperRing> const& raws,
                                       SuiteOptions const&              options = {}) {
    SuiteReport out;
    out.rings = parallel_map(raws.size(), options.threads, [&](std::size_t i) {
      return check_ring(raws[i], options);
    });
    if (options.hom_sweep) {
      std::vector<HyperRing> valid;
      for (auto const& raw : raws) {
        if (auto r = HyperRing::validate(raw)) {
          valid.push_back(*r);
        }
      }
      out.homs = run_hom_sweep(valid, options);
    }
    return out;
  }

  inline SuiteReport run_theorem_suite(Corpus const& corpus, SuiteOptions const& options = {}) {
    std::vector<RawHyperRing> raws;
    for (auto const& r : corpus.rings) {
      raws.push_back(r.raw());
    }
    auto out               = run_theorem_suite(raws, options);
    out.corpus_fingerprint = corpus.fingerprint;
    out.order_bound        = corpus.order_bound;
    return out;
  }

  inline std::string utc_timestamp() {
    auto const  now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm     tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  // Machine-readable report. Key order and array order are fixed, so two
  // runs differ only in "generated_at".
  inline nlohmann::ordered_json to_json(SuiteReport const& rep,
                                        std::string const& generated_at = utc_timestamp()) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"]       = kReportSchema;
    j["generated_at"] = generated_at;
    if (rep.corpus_fingerprint) {
      j["corpus"] = {{"order_bound", rep.order_bound},
                     {"fingerprint", *rep.corpus_fingerprint},
                     {"rings", rep.rings.size()}};
    }
    std::map<std::string, std::array<std::size_t, 3>> totals;
    ordered_json rings = ordered_json::array();
    for (auto const& r : rep.rings) {
      ordered_json checks = ordered_json::array();
      for (auto const& c : r.checks) {
        ordered_json e{{"id", c.id},
                       {"anchor", anchor_of(c.id)},
                       {"status", to_string(c.status)}};
        if (!c.witness.empty()) {
          e["witness"] = c.witness;
        }
        if (!c.detail.empty()) {
          e["detail"] = c.detail;
        }
        checks.push_back(std::move(e));
        totals[c.id][static_cast<std::size_t>(c.status)]++;
      }
      rings.push_back({{"name", r.name},
                       {"order", r.order},
                       {"valid", r.valid},
                       {"unital", r.unital},
                       {"checks", std::move(checks)}});
    }
    j["rings"] = std::move(rings);
    if (rep.homs) {
      ordered_json checks = ordered_json::array();
      for (auto const& c : rep.homs->checks) {
        ordered_json e{{"id", c.id},
                       {"anchor", anchor_of(c.id)},
                       {"passed", c.passed},
                       {"failed", c.failed},
                       {"skipped", c.skipped}};
        if (!c.first_witness.empty()) {
          e["first_witness"] = c.first_witness;
        }
        if (!c.note.empty()) {
          e["note"] = c.note;
        }
        checks.push_back(std::move(e));
      }
      j["homs"] = {{"pairs", rep.homs->pairs},
                   {"homomorphisms", rep.homs->homs},
                   {"surjective", rep.homs->surjective},
                   {"checks", std::move(checks)}};
    }
    ordered_json summary = ordered_json::array();
    for (auto const& entry : kRingChecks) {
      auto const& t = totals[std::string(entry.id)];
      summary.push_back(
          {{"id", entry.id}, {"passed", t[0]}, {"failed", t[1]}, {"skipped", t[2]}});
    }
    j["summary"] = {{"rings", rep.rings.size()},
                    {"invalid_rings", rep.invalid_rings()},
                    {"ok", rep.ok()},
                    {"checks", std::move(summary)}};
    return j;
  }

  inline std::string to_text(SuiteReport const& rep) {
    std::string out;
    if (rep.corpus_fingerprint) {
      out += "corpus order<=" + std::to_string(rep.order_bound) + " rings="
             + std::to_string(rep.rings.size()) + " fingerprint=" + *rep.corpus_fingerprint
             + "\n";
    }
    for (auto const& r : rep.rings) {
      std::size_t pass = 0, fail = 0, skip = 0;
      for (auto const& c : r.checks) {
        (c.status == Status::pass ? pass : c.status == Status::fail ? fail : skip)++;
      }
      out += r.name + " (order " + std::to_string(r.order) + (r.unital ? ", unital" : "")
             + "): " + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, "
             + std::to_string(skip) + " skip\n";
      for (auto const& c : r.checks) {
        if (c.status == Status::fail) {
          out += "  FAIL " + c.id + " " + c.witness + (c.detail.empty() ? "" : " (" + c.detail + ")")
                 + "\n";
        }
      }
    }
    if (rep.homs) {
      out += "homomorphisms: " + std::to_string(rep.homs->homs) + " over "
             + std::to_string(rep.homs->pairs) + " ring pairs ("
             + std::to_string(rep.homs->surjective) + " surjective)\n";
      for (auto const& c : rep.homs->checks) {
        out += "  " + c.id + ": " + std::to_string(c.passed) + " pass, "
               + std::to_string(c.failed) + " fail, " + std::to_string(c.skipped) + " skip";
        if (c.failed != 0) {
          out += " first: " + c.first_witness;
        }
        out += "\n";
        if (!c.note.empty()) {
          out += "    note: " + c.note + "\n";
        }
      }
    }
    out += rep.ok() ? "result: all checks passed\n" : "result: theorem violations found\n";
    return out;
  }

}  // namespace khr

#endif  // KHR_THEOREM_SUITE_HPP_
