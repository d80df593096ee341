#ifndef KHR_RING_HOM_HPP_
#define KHR_RING_HOM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "hyperring.hpp"
#include "report.hpp"

namespace khr {

  // An element map between two validated hyperrings. Whether it is a strong
  // homomorphism is decided by verify_strong_hom.
  struct RingHom {
    HyperRing         source;
    HyperRing         target;
    std::vector<Elem> map;
    bool              unit_preserving = false;
    std::string       name;

    Elem operator()(Elem a) const {
      return map[a];
    }

    ElementSet image_of(ElementSet const& s) const {
      ElementSet out(target.order());
      for (auto a : s) {
        out.insert(map[a]);
      }
      return out;
    }

    ElementSet preimage_of(ElementSet const& s) const {
      if (s.universe() != target.order()) {
        throw CarrierMismatch("preimage of a set outside the target ring");
      }
      ElementSet out(source.order());
      for (Elem a = 0; a < source.order(); ++a) {
        if (s.contains(map[a])) {
          out.insert(a);
        }
      }
      return out;
    }

    bool is_surjective() const {
      return image_of(source.full_set()).is_full();
    }
  };

  inline RingHom identity_hom(HyperRing const& r) {
    std::vector<Elem> map(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
      map[a] = a;
    }
    return RingHom{r, r, std::move(map), r.is_unital(), "id"};
  }

  // Checks phi(0) = 0, phi(a + b) = phi(a) + phi(b) as sets,
  // phi(ab) = phi(a)phi(b) and, when declared, phi(1) = 1.
  inline VerificationReport verify_strong_hom(RingHom const& phi) {
    VerificationReport report;
    auto const&        src = phi.source;
    auto const&        tgt = phi.target;
    std::size_t const  n   = src.order();

    auto& tables = report.add("map_tables");
    if (phi.map.size() != n) {
      fail(tables, {}, "map size does not match the source order");
      return report;
    }
    for (Elem a = 0; a < n; ++a) {
      if (phi.map[a] >= tgt.order()) {
        fail(tables, {a}, "image out of range");
        return report;
      }
    }

    auto& zero = report.add("zero");
    if (phi(0) != 0) {
      fail(zero, {0, phi(0)}, "phi(0) != 0");
    }

    auto& add = report.add("additive");
    for (Elem a = 0; a < n && add.passed; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (phi.image_of(src.sum(a, b)) != tgt.sum(phi(a), phi(b))) {
          fail(add, {a, b}, "phi(a+b) != phi(a)+phi(b)");
          break;
        }
      }
    }

    auto& mul = report.add("multiplicative");
    for (Elem a = 0; a < n && mul.passed; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (phi(src.mul(a, b)) != tgt.mul(phi(a), phi(b))) {
          fail(mul, {a, b}, "phi(ab) != phi(a)phi(b)");
          break;
        }
      }
    }

    if (phi.unit_preserving) {
      auto& unit = report.add("unit");
      if (!src.unit() || !tgt.unit()) {
        fail(unit, {}, "unit-preserving map between non-unital rings");
      } else if (phi(*src.unit()) != *tgt.unit()) {
        fail(unit, {*src.unit()}, "phi(1) != 1");
      }
    }
    return report;
  }

  // "R->S [m0,m1,...]".
  inline std::string hom_label(RingHom const& phi) {
    std::string out = phi.source.name() + "->" + phi.target.name() + " [";
    for (std::size_t i = 0; i < phi.map.size(); ++i) {
      out += (i ? "," : "") + std::to_string(phi.map[i]);
    }
    return out + "]";
  }

  // psi after phi.
  inline RingHom compose(RingHom const& psi, RingHom const& phi) {
    if (!phi.target.same_as(psi.source)) {
      throw CarrierMismatch("composition of non-composable homomorphisms");
    }
    std::vector<Elem> map(phi.source.order());
    for (Elem a = 0; a < map.size(); ++a) {
      map[a] = psi(phi(a));
    }
    return RingHom{phi.source,
                   psi.target,
                   std::move(map),
                   phi.unit_preserving && psi.unit_preserving,
                   psi.name + "." + phi.name};
  }

}  // namespace khr

#endif  // KHR_RING_HOM_HPP_
