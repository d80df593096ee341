#ifndef KHR_MORPHISMS_HPP_
#define KHR_MORPHISMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "ideals.hpp"
#include "report.hpp"
#include "ring_hom.hpp"
#include "spectrum.hpp"

namespace khr {

  inline constexpr std::size_t kDefaultHomBound = 6;

  // phi^{-1}(p), certified as a two-sided hyperideal of the source.
  inline HyperIdeal preimage_ideal(RingHom const& phi, HyperIdeal const& p) {
    if (!p.ring().same_as(phi.target)) {
      throw CarrierMismatch("preimage of a hyperideal of another ring");
    }
    return HyperIdeal::certify(phi.source,
                               phi.preimage_of(p.members()),
                               Side::two_sided,
                               "preimage_is_ideal");
  }

  inline HyperIdeal kernel(RingHom const& phi) {
    return preimage_ideal(phi, HyperIdeal::zero(phi.target));
  }

  // phi* : Prim(target) -> Prim(source), p |-> phi^{-1}(p).
  struct InducedMap {
    // Preimage of every target point, in target point order.
    std::vector<HyperIdeal> preimages;
    // Source point index of each preimage, when it is a source point.
    std::vector<std::optional<std::size_t>> map;
    bool                       lands_in_prim = true;
    std::optional<std::size_t> outside;
    // Decided only when phi* lands in Prim(source).
    std::optional<bool>     continuous;
    std::optional<PointSet> discontinuity;

    PointSet image(std::size_t source_points) const {
      PointSet out(source_points);
      for (auto const& i : map) {
        if (i) {
          out.insert(static_cast<Elem>(*i));
        }
      }
      return out;
    }

    // Target points sent into s.
    PointSet pullback(PointSet const& s) const {
      PointSet out(map.size());
      for (std::size_t q = 0; q < map.size(); ++q) {
        if (map[q] && s.contains(static_cast<Elem>(*map[q]))) {
          out.insert(static_cast<Elem>(q));
        }
      }
      return out;
    }
  };

  inline void check_spaces(RingHom const&       phi,
                           SpectrumSpace const& source,
                           SpectrumSpace const& target) {
    if (!source.ring().same_as(phi.source) || !target.ring().same_as(phi.target)) {
      throw CarrierMismatch("spectra do not match the homomorphism");
    }
  }

  inline InducedMap induced_map(RingHom const&       phi,
                                SpectrumSpace const& source,
                                SpectrumSpace const& target) {
    check_spaces(phi, source, target);
    InducedMap out;
    for (std::size_t q = 0; q < target.size(); ++q) {
      auto pre = preimage_ideal(phi, target.points()[q]);
      auto idx = source.index_of(pre.members());
      if (!idx && out.lands_in_prim) {
        out.lands_in_prim = false;
        out.outside       = q;
      }
      out.preimages.push_back(std::move(pre));
      out.map.push_back(idx);
    }
    if (out.lands_in_prim && source.materialized() && target.materialized()) {
      out.continuous = true;
      for (auto const& c : source.closed_sets()) {
        if (!target.is_closed(out.pullback(c))) {
          out.continuous    = false;
          out.discontinuity = c;
          break;
        }
      }
    }
    return out;
  }

  inline InducedMap induced_map(RingHom const& phi) {
    return induced_map(phi,
                       SpectrumSpace::build(build_lattice(phi.source)),
                       SpectrumSpace::build(build_lattice(phi.target)));
  }

  // For surjective phi: phi* lands in Prim(source), is injective, has image
  // Cl(ker phi), is continuous and closed, hence a homeomorphism onto its
  // image. Throws InvalidInput for non-surjective phi.
  inline VerificationReport check_closed_embedding(RingHom const&       phi,
                                                   SpectrumSpace const& source,
                                                   SpectrumSpace const& target) {
    if (!phi.is_surjective()) {
      throw InvalidInput("closed embedding check needs a surjective homomorphism");
    }
    auto const         star = induced_map(phi, source, target);
    VerificationReport rep;

    auto& lands = rep.add("pullback_in_prim");
    if (!star.lands_in_prim) {
      fail(lands,
           {static_cast<Elem>(*star.outside)},
           star.preimages[*star.outside].members().to_string()
               + " is not primitive");
      return rep;
    }

    auto& injective = rep.add("injective");
    for (std::size_t a = 0; a < star.map.size() && injective.passed; ++a) {
      for (std::size_t b = a + 1; b < star.map.size(); ++b) {
        if (star.map[a] == star.map[b]) {
          fail(injective,
               {static_cast<Elem>(a), static_cast<Elem>(b)},
               "two points with the same preimage");
          break;
        }
      }
    }

    auto&      image    = rep.add("image_is_closure_of_kernel");
    auto const img      = star.image(source.size());
    auto const expected = source.points_above(kernel(phi).members());
    if (img != expected) {
      fail(image, {}, "image " + img.to_string() + " but Cl(ker) = "
                          + expected.to_string());
    }

    auto& continuous = rep.add("continuous");
    if (star.continuous != true) {
      fail(continuous,
           star.discontinuity
               ? std::vector<Elem>{static_cast<Elem>(star.discontinuity->bits())}
               : std::vector<Elem>{},
           "preimage of a closed set is not closed");
    }

    auto& closed = rep.add("closed_map");
    for (auto const& c : target.closed_sets()) {
      PointSet forward(source.size());
      for (auto q : c) {
        forward.insert(static_cast<Elem>(*star.map[q]));
      }
      if (!source.is_closed(forward)) {
        fail(closed,
             {static_cast<Elem>(c.bits())},
             "image " + forward.to_string() + " is not closed");
        break;
      }
    }

    auto& homeo = rep.add("homeomorphism_onto_image");
    if (!injective.passed || !continuous.passed || !closed.passed) {
      fail(homeo, {}, "not a bijective bicontinuous map onto the image");
    }
    return rep;
  }

  inline VerificationReport check_closed_embedding(RingHom const& phi) {
    return check_closed_embedding(phi,
                                  SpectrumSpace::build(build_lattice(phi.source)),
                                  SpectrumSpace::build(build_lattice(phi.target)));
  }

  enum class DensityStatus { holds, needs_surjectivity, violated };

  inline std::string_view to_string(DensityStatus s) noexcept {
    switch (s) {
      case DensityStatus::holds:
        return "holds";
      case DensityStatus::needs_surjectivity:
        return "needs surjectivity";
      case DensityStatus::violated:
        return "violated";
    }
    return "?";
  }

  // Image of phi* dense in Prim(source) versus ker phi inside the nil
  // radical of the source. A disagreement on a non-surjective phi is
  // reported as needing surjectivity rather than as a violation.
  struct DensityCheck {
    bool          dense                = false;
    bool          kernel_in_nilradical = false;
    bool          surjective           = false;
    DensityStatus status               = DensityStatus::holds;

    bool agrees() const noexcept {
      return dense == kernel_in_nilradical;
    }
  };

  inline DensityCheck check_density(RingHom const&       phi,
                                    IdealLattice const&  source_lattice,
                                    SpectrumSpace const& source,
                                    SpectrumSpace const& target) {
    if (!source_lattice.ring.same_as(phi.source)) {
      throw CarrierMismatch("lattice does not match the homomorphism source");
    }
    auto const   star = induced_map(phi, source, target);
    DensityCheck out;
    out.surjective = phi.is_surjective();
    out.dense      = source.closure(star.image(source.size())) == source.all();
    out.kernel_in_nilradical
        = kernel(phi).members().subset_of(nil_radical(source_lattice).members());
    if (!out.agrees()) {
      out.status = out.surjective ? DensityStatus::violated
                                  : DensityStatus::needs_surjectivity;
    }
    return out;
  }

  inline DensityCheck check_density(RingHom const& phi) {
    auto const l = build_lattice(phi.source);
    return check_density(phi,
                         l,
                         SpectrumSpace::build(l),
                         SpectrumSpace::build(build_lattice(phi.target)));
  }

  // Prim(R) and Prim(R/nil radical) are homeomorphic through the projection.
  inline VerificationReport check_radical_homeomorphism(IdealLattice const& l) {
    auto const         nil = nil_radical(l);
    VerificationReport rep;
    auto&              proper = rep.add("nil_radical_proper");
    if (!nil.proper()) {
      // R/R is the zero ring; compare point counts only.
      auto const source = SpectrumSpace::build(l);
      auto const q      = quotient_ring(l.ring, nil);
      auto const target = SpectrumSpace::build(build_lattice(q.ring));
      auto&      onto   = rep.add("onto_whole_space");
      if (source.size() != target.size()) {
        fail(onto, {}, "point counts differ");
      }
      proper.detail = "nil radical is the whole ring";
      return rep;
    }
    auto const q      = quotient_ring(l.ring, nil);
    auto const source = SpectrumSpace::build(l);
    auto const target = SpectrumSpace::build(build_lattice(q.ring));
    rep.append(check_closed_embedding(q.projection, source, target));
    auto& onto = rep.add("onto_whole_space");
    if (induced_map(q.projection, source, target).image(source.size())
        != source.all()) {
      fail(onto, {}, "phi* misses some primitive hyperideal");
    }
    return rep;
  }

  // Strong homomorphisms r -> s fixing 0, in lexicographic order of the
  // element map. With unit_preserving set, phi(1) = 1 is also required.
  inline std::vector<RingHom> enumerate_homs(HyperRing const& r,
                                             HyperRing const& s,
                                             bool        surjective_only = false,
                                             bool        unit_preserving = false,
                                             std::size_t bound = kDefaultHomBound) {
    if (r.order() > bound || s.order() > bound) {
      throw BoundExceeded("homomorphism search limited to rings of order "
                          + std::to_string(bound));
    }
    std::vector<RingHom> out;
    if (surjective_only && r.order() < s.order()) {
      return out;
    }
    RingHom phi{r, s, std::vector<Elem>(r.order(), 0), unit_preserving,
                r.name() + "->" + s.name()};
    auto search = [&](auto&& self, Elem x) -> void {
      if (x == r.order()) {
        if (surjective_only && !phi.is_surjective()) {
          return;
        }
        if (verify_strong_hom(phi).ok()) {
          out.push_back(phi);
        }
        return;
      }
      for (Elem y = 0; y < s.order(); ++y) {
        phi.map[x] = y;
        // Prune on products whose images are already fixed.
        bool consistent = true;
        for (Elem a = 0; a <= x && consistent; ++a) {
          auto const p = r.mul(a, x);
          if (p <= x) {
            consistent = phi.map[p] == s.mul(phi.map[a], y);
          }
          auto const q = r.mul(x, a);
          if (consistent && q <= x) {
            consistent = phi.map[q] == s.mul(y, phi.map[a]);
          }
        }
        if (consistent) {
          self(self, x + 1);
        }
      }
      phi.map[x] = 0;
    };
    search(search, 1);
    return out;
  }

  // (psi phi)* = phi* psi*, compared on preimages of the points of
  // Prim(psi.target).
  inline CheckResult check_functoriality(RingHom const&       phi,
                                         RingHom const&       psi,
                                         SpectrumSpace const& last) {
    CheckResult c{"functoriality", true, {}, {}};
    auto const  both = compose(psi, phi);
    for (std::size_t i = 0; i < last.size(); ++i) {
      auto const& p   = last.points()[i];
      auto const  lhs = both.preimage_of(p.members());
      auto const  rhs = phi.preimage_of(psi.preimage_of(p.members()));
      if (lhs != rhs) {
        fail(c, {static_cast<Elem>(i)}, "(psi phi)^-1(p) != phi^-1(psi^-1(p))");
        break;
      }
    }
    return c;
  }

}  // namespace khr

#endif  // KHR_MORPHISMS_HPP_
