#ifndef KHR_SEARCH_HPP_
#define KHR_SEARCH_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "ideals.hpp"
#include "morphisms.hpp"
#include "parallel.hpp"
#include "primitivity.hpp"
#include "spectrum.hpp"

namespace khr {

  struct SearchProperty {
    std::string_view id;
    std::string_view description;
  };

  inline constexpr SearchProperty kSearchProperties[] = {
      {"prime-not-primitive", "prime hyperideals that are not primitive"},
      {"primitive-not-maximal", "primitive hyperideals that are not maximal"},
      {"maximal-not-primitive", "maximal hyperideals that are not primitive"},
      {"t1-failure", "rings whose Prim(R) is not T1"},
      {"t1-not-max", "rings where T1 and Prim(R) = Max(R) disagree"},
      {"nilradical-mismatch",
       "rings whose prime radical differs from the set of nilpotent elements"},
      {"simple-module-outside-prim",
       "small simple hypermodules whose annihilator is not in Prim(R)"},
      {"nonsurjective-pullback",
       "homomorphisms pulling a primitive hyperideal back outside Prim"},
      {"density-mismatch",
       "homomorphisms where density and ker within the nil radical disagree"},
  };

  struct Finding {
    std::string subject;
    std::string detail;
  };

  struct SearchResult {
    std::string          id;
    std::size_t          examined = 0;
    std::vector<Finding> findings;
  };

  struct SearchOptions {
    std::size_t threads          = 1;
    std::size_t module_order     = 2;
    std::size_t hom_pair_bound   = 6;
  };

  inline bool known_property(std::string_view id) {
    return std::any_of(std::begin(kSearchProperties), std::end(kSearchProperties),
                       [&](auto const& p) { return p.id == id; });
  }

  namespace detail {
    inline std::string members_of(std::vector<HyperIdeal> const& v) {
      std::string out;
      for (auto const& a : v) {
        out += (out.empty() ? "" : " ") + a.members().to_string();
      }
      return out;
    }

    inline bool in(std::vector<HyperIdeal> const& v, HyperIdeal const& a) {
      return std::find(v.begin(), v.end(), a) != v.end();
    }

    inline std::vector<Finding> ring_findings(std::string_view   id,
                                              HyperRing const&   r,
                                              SearchOptions const& options) {
      std::vector<Finding> out;
      auto const           l    = build_lattice(r);
      auto const           prim = prim_set(l);
      auto                 add  = [&](std::string detail) {
        out.push_back({r.name(), std::move(detail)});
      };
      if (id == "prime-not-primitive") {
        for (auto const& p : l.prime) {
          if (!in(prim, p)) {
            add(p.members().to_string() + " is prime, Prim = [" + members_of(prim) + "]");
          }
        }
      } else if (id == "primitive-not-maximal") {
        for (auto const& p : prim) {
          if (!in(l.maximal, p)) {
            add(p.members().to_string() + " is primitive, Max = [" + members_of(l.maximal)
                + "]");
          }
        }
      } else if (id == "maximal-not-primitive") {
        for (auto const& m : l.maximal) {
          if (!in(prim, m)) {
            add(m.members().to_string() + " is maximal"
                + std::string(r.is_unital() ? "" : " (ring not unital)"));
          }
        }
      } else if (id == "t1-failure" || id == "t1-not-max") {
        SpectrumSpace const x(r, prim);
        auto const          t = t1_characterization(x, l);
        if (id == "t1-failure" ? !t.t1 : !t.agrees()) {
          add(std::string(t.t1 ? "T1" : "not T1") + ", Prim = [" + members_of(prim)
              + "], Max = [" + members_of(l.maximal) + "]"
              + (r.is_unital() ? "" : " (ring not unital)"));
        }
      } else if (id == "nilradical-mismatch") {
        auto const nil  = nil_radical(l).members();
        auto const nilp = nilpotent_elements(r);
        if (nil != nilp) {
          add("prime radical " + nil.to_string() + ", nilpotents " + nilp.to_string());
        }
      } else if (id == "simple-module-outside-prim") {
        for (auto const& f : simple_modules_bruteforce(r, prim, options.module_order)) {
          if (!f.in_prim) {
            add("simple module of order " + std::to_string(f.module.order())
                + " with annihilator " + f.annihilator.members().to_string());
          }
        }
      }
      return out;
    }
  }  // namespace detail

  inline SearchResult counterexample_search(std::string_view              id,
                                            std::vector<HyperRing> const& rings,
                                            SearchOptions const&          options = {}) {
    if (!known_property(id)) {
      throw InvalidInput("unknown property '" + std::string(id) + "'");
    }
    SearchResult out{std::string(id), 0, {}};
    if (id == "nonsurjective-pullback" || id == "density-mismatch") {
      std::vector<std::optional<std::pair<IdealLattice, SpectrumSpace>>> data;
      for (auto const& r : rings) {
        if (r.order() > options.hom_pair_bound) {
          data.emplace_back();
          continue;
        }
        auto l = build_lattice(r);
        auto x = SpectrumSpace::build(l);
        data.emplace_back(std::make_pair(std::move(l), std::move(x)));
      }
      auto per_source = parallel_map(rings.size(), options.threads, [&](std::size_t i) {
        std::pair<std::size_t, std::vector<Finding>> acc;
        if (!data[i]) {
          return acc;
        }
        for (std::size_t j = 0; j < rings.size(); ++j) {
          if (!data[j] || rings[i].order() + rings[j].order() > options.hom_pair_bound) {
            continue;
          }
          for (auto const& phi : enumerate_homs(rings[i], rings[j])) {
            ++acc.first;
            auto const label = hom_label(phi);
            if (id == "nonsurjective-pullback") {
              auto const star = induced_map(phi, data[i]->second, data[j]->second);
              if (!star.lands_in_prim) {
                acc.second.push_back(
                    {label, data[j]->second.points()[*star.outside].members().to_string()
                                + " pulls back to "
                                + star.preimages[*star.outside].members().to_string()
                                + (phi.is_surjective() ? " (surjective)" : "")});
              }
            } else {
              auto const d = check_density(phi, data[i]->first, data[i]->second,
                                           data[j]->second);
              if (!d.agrees()) {
                acc.second.push_back(
                    {label, std::string(d.dense ? "dense" : "not dense")
                                + (d.kernel_in_nilradical ? ", ker in nil radical"
                                                          : ", ker not in nil radical")
                                + ", " + std::string(to_string(d.status))});
              }
            }
          }
        }
        return acc;
      });
      for (auto& [n, f] : per_source) {
        out.examined += n;
        out.findings.insert(out.findings.end(), f.begin(), f.end());
      }
      return out;
    }
    auto per_ring = parallel_map(rings.size(), options.threads, [&](std::size_t i) {
      return detail::ring_findings(id, rings[i], options);
    });
    out.examined = rings.size();
    for (auto& f : per_ring) {
      out.findings.insert(out.findings.end(), f.begin(), f.end());
    }
    return out;
  }

}  // namespace khr

#endif  // KHR_SEARCH_HPP_
