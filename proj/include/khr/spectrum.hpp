#ifndef KHR_SPECTRUM_HPP_
#define KHR_SPECTRUM_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "hyperring.hpp"
#include "ideals.hpp"
#include "index_set.hpp"
#include "primitivity.hpp"
#include "report.hpp"

namespace khr {

  // Largest point count for which every closed set is materialized.
  inline constexpr std::size_t kDefaultMaterializeBound = 15;
  // Largest point count for which closure laws are checked on all pairs of
  // subsets (4^12 pairs); above it pairs are sampled.
  inline constexpr std::size_t kExhaustivePairBound = 12;

  // Prim(R) with the closure Cl(S) = {p : p contains the intersection of S}.
  class SpectrumSpace {
   public:
    SpectrumSpace(HyperRing               ring,
                  std::vector<HyperIdeal> points,
                  std::size_t materialize_bound = kDefaultMaterializeBound)
        : _ring(std::move(ring)), _points(std::move(points)) {
      if (_points.size() > kMaxUniverse) {
        throw BoundExceeded("spectra are limited to 64 points");
      }
      for (auto const& p : _points) {
        if (!p.ring().same_as(_ring)) {
          throw CarrierMismatch("spectrum point from another ring");
        }
      }
      if (_points.size() <= materialize_bound) {
        materialize();
      }
    }

    static SpectrumSpace build(IdealLattice const& l,
                               std::size_t materialize_bound
                               = kDefaultMaterializeBound) {
      return SpectrumSpace(l.ring, prim_set(l), materialize_bound);
    }

    HyperRing const& ring() const noexcept {
      return _ring;
    }
    std::vector<HyperIdeal> const& points() const noexcept {
      return _points;
    }
    std::size_t size() const noexcept {
      return _points.size();
    }
    PointSet all() const {
      return PointSet::full(size());
    }
    PointSet none() const {
      return PointSet(size());
    }
    PointSet single(std::size_t i) const {
      return PointSet::singleton(size(), static_cast<Elem>(i));
    }

    // Intersection of the points in s; the whole ring for s empty.
    HyperIdeal kernel_of(PointSet const& s) const {
      check(s);
      if (s.empty()) {
        return HyperIdeal::whole(_ring);
      }
      auto members = _ring.full_set();
      for (auto i : s) {
        members &= _points[i].members();
      }
      return HyperIdeal::certify(
          _ring, members, Side::two_sided, "kernel_is_ideal");
    }

    // Points containing a.
    PointSet points_above(ElementSet const& a) const {
      PointSet out(size());
      for (std::size_t i = 0; i < size(); ++i) {
        if (a.subset_of(_points[i].members())) {
          out.insert(static_cast<Elem>(i));
        }
      }
      return out;
    }

    // Cl(empty) is empty by definition; points are proper, so the formula
    // with K_empty = R agrees.
    PointSet closure(PointSet const& s) const {
      check(s);
      if (s.empty()) {
        return none();
      }
      return points_above(kernel_of(s).members());
    }

    bool is_closed(PointSet const& s) const {
      return closure(s) == s;
    }

    bool materialized() const noexcept {
      return _materialized;
    }

    // Every closed set, ordered by key.
    std::vector<PointSet> const& closed_sets() const {
      if (!_materialized) {
        throw BoundExceeded("closed sets not materialized for "
                            + std::to_string(size()) + " points");
      }
      return _closed;
    }

    std::vector<PointSet> open_sets() const {
      std::vector<PointSet> out;
      for (auto const& c : closed_sets()) {
        out.push_back(c.complement());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::optional<std::size_t> index_of(ElementSet const& members) const {
      for (std::size_t i = 0; i < size(); ++i) {
        if (_points[i].members() == members) {
          return i;
        }
      }
      return std::nullopt;
    }

   private:
    void check(PointSet const& s) const {
      if (s.universe() != size()) {
        throw CarrierMismatch("point set of another spectrum");
      }
    }

    void materialize() {
      for_each_subset(all(), [&](PointSet const& s) {
        _closed.push_back(closure(s));
      });
      std::sort(_closed.begin(), _closed.end());
      _closed.erase(std::unique(_closed.begin(), _closed.end()), _closed.end());
      _materialized = true;
    }

    HyperRing               _ring;
    std::vector<HyperIdeal> _points;
    std::vector<PointSet>   _closed;
    bool                    _materialized = false;
  };

  struct KuratowskiReport {
    VerificationReport report;
    bool               sampled = false;
    std::uint64_t      pairs   = 0;
  };

  // Cl(empty) = empty, S within Cl(S), Cl(Cl(S)) = Cl(S) and
  // Cl(S u T) = Cl(S) u Cl(T). Exhaustive up to kExhaustivePairBound points,
  // otherwise on `samples` pseudo-random pairs (and flagged as sampled).
  inline KuratowskiReport verify_kuratowski(SpectrumSpace const& x,
                                            std::uint64_t samples = 1 << 20,
                                            std::uint64_t seed    = 0x5eed) {
    KuratowskiReport out;
    auto&            rep = out.report;
    auto&            empty = rep.add("kuratowski_empty");
    if (!x.closure(x.none()).empty()) {
      fail(empty, {}, "Cl(empty) is not empty");
    }
    auto& extensive  = rep.add("kuratowski_extensive");
    auto& idempotent = rep.add("kuratowski_idempotent");
    auto& additive   = rep.add("kuratowski_union");

    auto as_witness = [](PointSet const& s, PointSet const& t) {
      return std::vector<Elem>{static_cast<Elem>(s.bits()),
                               static_cast<Elem>(t.bits())};
    };
    auto unary = [&](PointSet const& s) {
      auto const cl = x.closure(s);
      if (extensive.passed && !s.subset_of(cl)) {
        fail(extensive, as_witness(s, s), "S not within Cl(S)");
      }
      if (idempotent.passed && x.closure(cl) != cl) {
        fail(idempotent, as_witness(s, s), "Cl(Cl(S)) != Cl(S)");
      }
    };
    auto binary = [&](PointSet const& s, PointSet const& t) {
      ++out.pairs;
      if (additive.passed && x.closure(s | t) != (x.closure(s) | x.closure(t))) {
        fail(additive, as_witness(s, t), "Cl(S u T) != Cl(S) u Cl(T)");
      }
    };

    if (x.size() <= kExhaustivePairBound) {
      // Closures are memoized per subset so the pair sweep is table lookups.
      std::vector<std::uint64_t> cl(std::size_t{1} << x.size());
      for_each_subset(x.all(), [&](PointSet const& s) {
        unary(s);
        cl[s.bits()] = x.closure(s).bits();
      });
      for (std::uint64_t s = 0; s < cl.size(); ++s) {
        for (std::uint64_t t = 0; t < cl.size(); ++t) {
          ++out.pairs;
          if (additive.passed && cl[s | t] != (cl[s] | cl[t])) {
            fail(additive,
                 as_witness(PointSet::from_bits(x.size(), s),
                            PointSet::from_bits(x.size(), t)),
                 "Cl(S u T) != Cl(S) u Cl(T)");
          }
        }
      }
    } else {
      out.sampled = true;
      std::mt19937_64 rng(seed);
      auto const      mask = PointSet::mask(x.size());
      for (std::uint64_t i = 0; i < samples; ++i) {
        auto const s = PointSet::from_bits(x.size(), rng() & mask);
        auto const t = PointSet::from_bits(x.size(), rng() & mask);
        unary(s);
        binary(s, t);
      }
    }
    return out;
  }

  // Distinct points have distinct closures.
  inline bool is_T0(SpectrumSpace const& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        if (x.closure(x.single(i)) == x.closure(x.single(j))) {
          return false;
        }
      }
    }
    return true;
  }

  // Every point is closed.
  inline bool is_T1(SpectrumSpace const& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.closure(x.single(i)) != x.single(i)) {
        return false;
      }
    }
    return true;
  }

  inline bool points_equal_maximal(SpectrumSpace const& x, IdealLattice const& l) {
    if (x.size() != l.maximal.size()) {
      return false;
    }
    for (auto const& m : l.maximal) {
      if (!x.index_of(m.members())) {
        return false;
      }
    }
    return true;
  }

  struct T1Characterization {
    bool t1                  = false;
    bool points_equal_max    = false;

    bool agrees() const noexcept {
      return t1 == points_equal_max;
    }
  };

  inline T1Characterization t1_characterization(SpectrumSpace const& x,
                                                IdealLattice const&  l) {
    return {is_T1(x), points_equal_maximal(x, l)};
  }

  struct CompactnessReport {
    bool        compact           = true;
    bool        mechanism_checked = false;
    std::string note;
    std::size_t families         = 0;
    std::size_t minimal_families = 0;
    // Families of closed sets with empty intersection whose kernels do not
    // sum to the whole ring.
    std::vector<std::vector<PointSet>> violations;
  };

  // Finite spaces are compact. For unital rings this also checks, for every
  // nonempty family of closed sets with empty intersection, that the sum of
  // their kernels is the whole ring.
  inline CompactnessReport compactness_witness(SpectrumSpace const& x,
                                               std::size_t max_closed_sets = 16) {
    CompactnessReport out;
    if (!x.ring().is_unital()) {
      out.note = "ring is not unital; kernel-sum mechanism not checked";
      return out;
    }
    if (!x.materialized() || x.closed_sets().size() > max_closed_sets) {
      out.note = "too many closed sets to enumerate families";
      return out;
    }
    auto const& closed = x.closed_sets();
    auto const  c      = closed.size();
    std::vector<HyperIdeal> kernels;
    for (auto const& s : closed) {
      kernels.push_back(x.kernel_of(s));
    }
    auto meet = [&](std::uint64_t fam) {
      auto s = x.all();
      for (std::size_t i = 0; i < c; ++i) {
        if ((fam >> i) & 1U) {
          s &= closed[i];
        }
      }
      return s;
    };
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << c); ++fam) {
      if (!meet(fam).empty()) {
        continue;
      }
      ++out.families;
      bool minimal = true;
      for (std::size_t i = 0; i < c && minimal; ++i) {
        auto const smaller = fam & ~(std::uint64_t{1} << i);
        if (((fam >> i) & 1U) && smaller != 0 && meet(smaller).empty()) {
          minimal = false;
        }
      }
      out.minimal_families += minimal ? 1 : 0;
      std::vector<HyperIdeal> chosen;
      std::vector<PointSet>   sets;
      for (std::size_t i = 0; i < c; ++i) {
        if ((fam >> i) & 1U) {
          chosen.push_back(kernels[i]);
          sets.push_back(closed[i]);
        }
      }
      if (!ideal_sum(chosen).members().is_full()) {
        out.violations.push_back(std::move(sets));
      }
    }
    out.mechanism_checked = true;
    return out;
  }

  struct IrreducibleClosedSet {
    PointSet                 points;
    std::vector<std::size_t> generic_points;
  };

  // Nonempty closed sets that are not the union of two proper closed
  // subsets, found by direct search over the closed sets.
  inline std::vector<IrreducibleClosedSet> irreducible_closed_sets(
      SpectrumSpace const& x) {
    auto const&                       closed = x.closed_sets();
    std::vector<IrreducibleClosedSet> out;
    for (auto const& c : closed) {
      if (c.empty()) {
        continue;
      }
      bool reducible = false;
      for (auto const& a : closed) {
        if (!a.subset_of(c) || a == c) {
          continue;
        }
        for (auto const& b : closed) {
          if (b.subset_of(c) && b != c && (a | b) == c) {
            reducible = true;
            break;
          }
        }
        if (reducible) {
          break;
        }
      }
      if (reducible) {
        continue;
      }
      IrreducibleClosedSet irr{c, {}};
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.closure(x.single(i)) == c) {
          irr.generic_points.push_back(i);
        }
      }
      out.push_back(std::move(irr));
    }
    return out;
  }

  // The irreducible closed sets are exactly the point closures, and each
  // has one generic point.
  inline VerificationReport check_irreducible_closed_sets(SpectrumSpace const& x) {
    VerificationReport rep;
    auto&              closures = rep.add("irreducible_are_point_closures");
    auto&              generic  = rep.add("generic_point_unique");
    auto const         irr      = irreducible_closed_sets(x);
    std::vector<PointSet> found, expected;
    for (auto const& c : irr) {
      found.push_back(c.points);
      if (generic.passed && c.generic_points.size() != 1) {
        fail(generic,
             {static_cast<Elem>(c.points.bits())},
             std::to_string(c.generic_points.size()) + " generic points");
      }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      expected.push_back(x.closure(x.single(i)));
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (found != expected) {
      fail(closures, {}, "irreducible closed sets differ from point closures");
    }
    return rep;
  }

  // Maximal irreducible closed sets.
  inline std::vector<PointSet> irreducible_components(SpectrumSpace const& x) {
    auto const            irr = irreducible_closed_sets(x);
    std::vector<PointSet> out;
    for (auto const& a : irr) {
      bool maximal = true;
      for (auto const& b : irr) {
        if (a.points != b.points && a.points.subset_of(b.points)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(a.points);
      }
    }
    return out;
  }

  // Points containing no other point.
  inline std::vector<std::size_t> minimal_points(SpectrumSpace const& x) {
    std::vector<std::size_t> out;
    auto const&              pts = x.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < pts.size() && minimal; ++j) {
        minimal = i == j || !pts[i].contains(pts[j]);
      }
      if (minimal) {
        out.push_back(i);
      }
    }
    return out;
  }

  inline CheckResult check_components_match_minimal_points(SpectrumSpace const& x) {
    CheckResult           c{"components_are_minimal_point_closures", true, {}, {}};
    auto                  comps = irreducible_components(x);
    std::vector<PointSet> expected;
    for (auto i : minimal_points(x)) {
      expected.push_back(x.closure(x.single(i)));
    }
    std::sort(comps.begin(), comps.end());
    std::sort(expected.begin(), expected.end());
    if (comps != expected) {
      fail(c, {}, std::to_string(comps.size()) + " components vs "
                      + std::to_string(expected.size())
                      + " minimal point closures");
    }
    return c;
  }

  // Descending chains of closed sets stabilize. A finite space always
  // qualifies; the longest strict chain is reported for information.
  inline bool is_noetherian_space(SpectrumSpace const& x,
                                  std::size_t*         longest_chain = nullptr) {
    if (longest_chain != nullptr && x.materialized()) {
      auto const&              closed = x.closed_sets();
      std::vector<std::size_t> depth(closed.size(), 1);
      // closed is sorted by key, and a proper subset has a smaller key.
      for (std::size_t i = 0; i < closed.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (closed[j].subset_of(closed[i])) {
            depth[i] = std::max(depth[i], depth[j] + 1);
          }
        }
      }
      *longest_chain
          = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    }
    return true;
  }

}  // namespace khr

#endif  // KHR_SPECTRUM_HPP_
