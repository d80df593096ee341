#ifndef KHR_PRIMITIVITY_HPP_
#define KHR_PRIMITIVITY_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "hypergroup.hpp"
#include "hypermodule.hpp"
#include "hyperring.hpp"
#include "ideals.hpp"

namespace khr {

  // {r : sr in m for every s}.
  inline ElementSet ideal_core(HyperRing const& r, ElementSet const& m) {
    ElementSet out(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
      bool inside = true;
      for (Elem s = 0; s < r.order() && inside; ++s) {
        inside = m.contains(r.mul(s, a));
      }
      if (inside) {
        out.insert(a);
      }
    }
    return out;
  }

  // Evidence that `ideal` is primitive: it annihilates the simple module
  // R/m, and equals {r : Rr within m} computed independently.
  struct PrimitiveCertificate {
    HyperIdeal  ideal;
    HyperIdeal  maximal_right;
    HyperModule module;
    ElementSet  by_formula;
    bool        module_is_simple = false;
    bool        cross_check      = false;
  };

  // Certificate for the annihilator of R/m, or nothing when R^2 lies inside
  // m (then R/m carries the zero action and is not simple).
  inline std::optional<PrimitiveCertificate> prim_from_maximal_right(
      HyperIdeal const&   m,
      IdealLattice const& l) {
    auto const& r = l.ring;
    if (!m.ring().same_as(r)) {
      throw CarrierMismatch("maximal right hyperideal of another ring");
    }
    if (!is_hyperideal(m.members(), r, Side::right)
        || !detail::maximal_in(m, l.right)) {
      throw InvalidInput(m.members().to_string()
                         + " is not a maximal right hyperideal");
    }
    auto const square = ideal_product(r.full_set(), r.full_set(), r);
    if (square.subset_of(m.members())) {
      return std::nullopt;
    }
    auto       quotient = quotient_module(regular_module(r), m.members());
    auto const simple   = is_simple(quotient.module);
    auto const ann      = annihilator(quotient.module);
    auto const formula  = ideal_core(r, m.members());
    return PrimitiveCertificate{ann,
                                m,
                                quotient.module,
                                formula,
                                simple.value,
                                ann.members() == formula};
  }

  // One certificate per maximal right hyperideal m with R^2 not inside m.
  // A certificate whose module is not simple, or whose two computations
  // disagree, is a theorem violation.
  inline std::vector<PrimitiveCertificate> prim_certificates(IdealLattice const& l) {
    std::vector<PrimitiveCertificate> out;
    for (auto const& m : l.maximal_right) {
      auto cert = prim_from_maximal_right(m, l);
      if (!cert) {
        continue;
      }
      if (!cert->module_is_simple) {
        throw TheoremViolation("quotient_by_maximal_right_is_simple",
                               "R/" + m.members().to_string()
                                   + " is not simple");
      }
      if (!cert->cross_check) {
        throw TheoremViolation("annihilator_matches_core",
                               "Ann(R/m) = " + cert->ideal.members().to_string()
                                   + " but {r : Rr in m} = "
                                   + cert->by_formula.to_string());
      }
      out.push_back(std::move(*cert));
    }
    return out;
  }

  // Prim(R), deduplicated and in canonical order.
  inline std::vector<HyperIdeal> prim_set(IdealLattice const& l) {
    std::vector<HyperIdeal> out;
    for (auto const& cert : prim_certificates(l)) {
      if (std::find(out.begin(), out.end(), cert.ideal) == out.end()) {
        out.push_back(cert.ideal);
      }
    }
    sort_canonically(out);
    return out;
  }

  inline bool is_primitive_ring(IdealLattice const& l) {
    auto const prim = prim_set(l);
    return std::find(prim.begin(), prim.end(), HyperIdeal::zero(l.ring))
           != prim.end();
  }

  inline bool is_primitive_ring(HyperRing const& r) {
    return is_primitive_ring(build_lattice(r));
  }

  struct QuotientPrimitivity {
    bool in_prim            = false;
    bool quotient_primitive = false;

    bool holds() const noexcept {
      return in_prim == quotient_primitive;
    }
  };

  // Compares "p is primitive in R" with "R/p is a primitive hyperring".
  inline QuotientPrimitivity check_primitive_iff_quotient_primitive(
      HyperIdeal const&   p,
      IdealLattice const& l) {
    if (p.side() != Side::two_sided || !p.proper()) {
      throw InvalidInput("expected a proper two-sided hyperideal");
    }
    auto const prim = prim_set(l);
    auto const q    = quotient_ring(l.ring, p);
    return {std::find(prim.begin(), prim.end(), p) != prim.end(),
            is_primitive_ring(q.ring)};
  }

  struct SimpleModuleFinding {
    HyperModule module;
    HyperIdeal  annihilator;
    bool        in_prim = false;
  };

  // Brute-force search for simple R-modules with at most `max_order`
  // elements, over every canonical hypergroup of that size and every action
  // table. Each simple module found is reported with its annihilator and
  // whether that annihilator lies in `prim`.
  inline std::vector<SimpleModuleFinding> simple_modules_bruteforce(
      HyperRing const&               r,
      std::vector<HyperIdeal> const& prim,
      std::size_t                    max_order,
      std::size_t                    max_tables = 2'000'000) {
    std::vector<SimpleModuleFinding> out;
    auto const                       rk = r.order();
    for (std::size_t k = 2; k <= max_order; ++k) {
      double const tables
          = std::pow(static_cast<double>(k), static_cast<double>((k - 1) * (rk - 1)));
      if (tables > static_cast<double>(max_tables)) {
        throw BoundExceeded("simple module search space too large");
      }
      for (auto const& group : enumerate_canonical_hypergroups(k)) {
        RawHyperModule raw{"S", r, group, std::vector<Elem>(k * rk, 0), false};
        std::vector<std::size_t> cells;
        for (Elem m = 1; m < k; ++m) {
          for (Elem a = 1; a < rk; ++a) {
            cells.push_back(m * rk + a);
          }
        }
        auto search = [&](auto&& self, std::size_t i) -> void {
          if (i == cells.size()) {
            auto module = HyperModule::validate(raw);
            if (!module || !is_simple(*module)) {
              return;
            }
            auto ann = annihilator(*module);
            bool in  = std::find(prim.begin(), prim.end(), ann) != prim.end();
            out.push_back({*module, ann, in});
            return;
          }
          for (Elem v = 0; v < k; ++v) {
            raw.act[cells[i]] = v;
            self(self, i + 1);
          }
          raw.act[cells[i]] = 0;
        };
        search(search, 0);
      }
    }
    return out;
  }

}  // namespace khr

#endif  // KHR_PRIMITIVITY_HPP_
