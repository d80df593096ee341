#ifndef KHR_IDEALS_HPP_
#define KHR_IDEALS_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hyperring.hpp"
#include "index_set.hpp"
#include "ring_hom.hpp"

namespace khr {

  // Default cap on the carrier size for exhaustive subset searches.
  inline constexpr std::size_t kDefaultSubsetBound = 12;

  enum class Side { left, right, two_sided };

  inline std::string_view to_string(Side side) noexcept {
    switch (side) {
      case Side::left:
        return "left";
      case Side::right:
        return "right";
      default:
        return "two-sided";
    }
  }

  inline bool absorbs_right(Side side) noexcept {
    return side != Side::left;
  }
  inline bool absorbs_left(Side side) noexcept {
    return side != Side::right;
  }

  // Verdict with the violated clause and the offending pair on failure.
  struct IdealCheck {
    bool              ok = true;
    std::string       reason;
    std::vector<Elem> witness;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  inline IdealCheck is_hyperideal(ElementSet const& s,
                                  HyperRing const&  r,
                                  Side              side = Side::two_sided) {
    if (s.universe() != r.order()) {
      throw CarrierMismatch("candidate ideal is not a subset of this ring");
    }
    if (s.empty()) {
      return {false, "empty", {}};
    }
    if (!s.contains(0)) {
      return {false, "missing zero", {}};
    }
    for (auto a : s) {
      for (auto b : s) {
        if (!r.sum(a, b).subset_of(s)) {
          return {false, "not closed under addition", {a, b}};
        }
      }
    }
    for (auto a : s) {
      if (!s.contains(r.neg(a))) {
        return {false, "not closed under negation", {a}};
      }
    }
    for (auto a : s) {
      for (Elem x = 0; x < r.order(); ++x) {
        if (absorbs_right(side) && !s.contains(r.mul(a, x))) {
          return {false, "not right absorbing", {a, x}};
        }
        if (absorbs_left(side) && !s.contains(r.mul(x, a))) {
          return {false, "not left absorbing", {x, a}};
        }
      }
    }
    return {};
  }

  // Smallest `side` hyperideal containing x (and 0).
  inline ElementSet ideal_closure(ElementSet const& x,
                                  HyperRing const&  r,
                                  Side              side = Side::two_sided) {
    auto s = x | r.zero_set();
    auto const all = r.full_set();
    while (true) {
      auto next = s | hypersum(s, s, r) | neg_set(s, r);
      if (absorbs_right(side)) {
        next |= products(s, all, r);
      }
      if (absorbs_left(side)) {
        next |= products(all, s, r);
      }
      if (next == s) {
        return s;
      }
      s = next;
    }
  }

  // An element set certified to be a hyperideal of its ring.
  class HyperIdeal {
   public:
    // Throws InvalidInput if `members` is not a `side` hyperideal.
    static HyperIdeal make(HyperRing const& r, ElementSet members, Side side) {
      auto check = is_hyperideal(members, r, side);
      if (!check) {
        throw InvalidInput(members.to_string() + " is not a "
                           + std::string(to_string(side))
                           + " hyperideal: " + check.reason);
      }
      return HyperIdeal(r, members, side);
    }

    // As make, but a failure is reported as a violated theorem instance.
    static HyperIdeal certify(HyperRing const& r,
                              ElementSet       members,
                              Side             side,
                              std::string      check_id) {
      auto check = is_hyperideal(members, r, side);
      if (!check) {
        throw TheoremViolation(std::move(check_id),
                               members.to_string() + " is not a hyperideal: "
                                   + check.reason);
      }
      return HyperIdeal(r, members, side);
    }

    static HyperIdeal zero(HyperRing const& r) {
      return HyperIdeal(r, r.zero_set(), Side::two_sided);
    }

    static HyperIdeal whole(HyperRing const& r) {
      return HyperIdeal(r, r.full_set(), Side::two_sided);
    }

    HyperRing const& ring() const noexcept {
      return _ring;
    }
    ElementSet const& members() const noexcept {
      return _members;
    }
    Side side() const noexcept {
      return _side;
    }
    bool proper() const noexcept {
      return !_members.is_full();
    }
    std::uint64_t key() const noexcept {
      return _members.bits();
    }
    bool contains(HyperIdeal const& that) const {
      return that._members.subset_of(_members);
    }

    // Ideals compare by member set; sidedness is a view, not identity.
    friend bool operator==(HyperIdeal const& a, HyperIdeal const& b) {
      return a._members == b._members;
    }

   private:
    HyperIdeal(HyperRing r, ElementSet members, Side side)
        : _ring(std::move(r)), _members(members), _side(side) {}

    HyperRing  _ring;
    ElementSet _members;
    Side       _side;
  };

  inline void sort_canonically(std::vector<HyperIdeal>& v) {
    std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) {
      return a.key() < b.key();
    });
  }

  // Every `side` hyperideal of r, ordered by member-set key. Search decides
  // membership element by element; including an element jumps straight to
  // the generated ideal, and a branch dies as soon as that closure reaches
  // an element already excluded.
  inline std::vector<HyperIdeal> enumerate_ideals(
      HyperRing const& r,
      Side             side  = Side::two_sided,
      std::size_t      bound = kDefaultSubsetBound) {
    if (r.order() > bound) {
      throw BoundExceeded("ideal enumeration refused: order "
                          + std::to_string(r.order()) + " exceeds bound "
                          + std::to_string(bound));
    }
    auto const              n = static_cast<Elem>(r.order());
    std::vector<HyperIdeal> out;

    auto dfs = [&](auto&& self, Elem next, ElementSet in, ElementSet ex) {
      while (next < n && in.contains(next)) {
        ++next;
      }
      if (next == n) {
        out.push_back(HyperIdeal::make(r, in, side));
        return;
      }
      auto ex2 = ex;
      ex2.insert(next);
      self(self, next + 1, in, ex2);
      auto grown = in;
      grown.insert(next);
      grown = ideal_closure(grown, r, side);
      if (!grown.intersects(ex)) {
        self(self, next + 1, grown, ex);
      }
    };
    dfs(dfs, 1, ideal_closure(r.zero_set(), r, side), ElementSet(n));
    sort_canonically(out);
    return out;
  }

  namespace detail {
    inline void require_family(std::span<HyperIdeal const> fam) {
      if (fam.empty()) {
        throw InvalidInput("empty family of hyperideals");
      }
      for (auto const& a : fam) {
        if (!a.ring().same_as(fam.front().ring())) {
          throw CarrierMismatch("family mixes hyperideals of different rings");
        }
        if (a.side() != fam.front().side()) {
          throw InvalidInput("family mixes sidedness");
        }
      }
    }
  }  // namespace detail

  // Intersection of a nonempty family; the result is re-certified.
  inline HyperIdeal ideal_intersection(std::span<HyperIdeal const> fam) {
    detail::require_family(fam);
    auto s = fam.front().members();
    for (auto const& a : fam) {
      s &= a.members();
    }
    return HyperIdeal::certify(
        fam.front().ring(), s, fam.front().side(), "intersection_is_ideal");
  }

  // All x lying in some a_1 + ... + a_k with a_i drawn from the i-th ideal.
  inline HyperIdeal ideal_sum(std::span<HyperIdeal const> fam) {
    detail::require_family(fam);
    auto const& r = fam.front().ring();
    auto        s = fam.front().members();
    for (auto const& a : fam.subspan(1)) {
      s = hypersum(s, a.members(), r);
    }
    return HyperIdeal::certify(r, s, fam.front().side(), "sum_is_ideal");
  }

  inline HyperIdeal ideal_intersection(HyperIdeal const& a, HyperIdeal const& b) {
    HyperIdeal const fam[] = {a, b};
    return ideal_intersection(fam);
  }

  inline HyperIdeal ideal_sum(HyperIdeal const& a, HyperIdeal const& b) {
    HyperIdeal const fam[] = {a, b};
    return ideal_sum(fam);
  }

  // Elements of every finite sum a_1 b_1 + ... + a_k b_k: the closure of the
  // pairwise products under addition of further products.
  inline ElementSet ideal_product(ElementSet const& a,
                                  ElementSet const& b,
                                  HyperRing const&  r) {
    if (a.empty() || b.empty()) {
      throw InvalidInput("ideal product of an empty set");
    }
    auto const p = products(a, b, r);
    auto       s = p;
    while (true) {
      auto next = s | hypersum(s, p, r);
      if (next == s) {
        return s;
      }
      s = next;
    }
  }

  inline HyperIdeal ideal_product(HyperIdeal const& a, HyperIdeal const& b) {
    if (!a.ring().same_as(b.ring())) {
      throw CarrierMismatch("product of hyperideals of different rings");
    }
    return HyperIdeal::certify(a.ring(),
                               ideal_product(a.members(), b.members(), a.ring()),
                               Side::two_sided,
                               "product_is_ideal");
  }

  struct IdealLattice {
    HyperRing               ring;
    std::vector<HyperIdeal> two_sided;
    std::vector<HyperIdeal> right;
    std::vector<HyperIdeal> maximal;
    std::vector<HyperIdeal> prime;
    std::vector<HyperIdeal> maximal_right;
  };

  // Verdict plus a human-readable reason when negative.
  struct Verdict {
    bool        value = false;
    std::string reason;

    explicit operator bool() const noexcept {
      return value;
    }
  };

  namespace detail {
    inline std::vector<HyperIdeal> const& lattice_for(IdealLattice const& l,
                                                      Side side) {
      switch (side) {
        case Side::two_sided:
          return l.two_sided;
        case Side::right:
          return l.right;
        default:
          throw InvalidInput("lattices do not store left hyperideals");
      }
    }

    inline Verdict maximal_in(HyperIdeal const&              a,
                              std::vector<HyperIdeal> const& family) {
      if (!a.proper()) {
        return {false, "not proper"};
      }
      for (auto const& b : family) {
        if (b.proper() && b.contains(a) && !(b == a)) {
          return {false, "strictly contained in " + b.members().to_string()};
        }
      }
      return {true, {}};
    }
  }  // namespace detail

  inline Verdict is_maximal(HyperIdeal const& a, IdealLattice const& l) {
    return detail::maximal_in(a, detail::lattice_for(l, a.side()));
  }

  struct PrimeCheck {
    bool                                       prime = false;
    std::string                                reason;
    std::optional<std::pair<ElementSet, ElementSet>> witness;

    explicit operator bool() const noexcept {
      return prime;
    }
  };

  // p is prime iff ab within p forces a or b within p, for all two-sided a, b.
  inline PrimeCheck is_prime(HyperIdeal const& p, IdealLattice const& l) {
    if (p.side() != Side::two_sided) {
      throw InvalidInput("primality is defined for two-sided hyperideals");
    }
    if (!p.proper()) {
      return {false, "not proper", std::nullopt};
    }
    for (auto const& a : l.two_sided) {
      for (auto const& b : l.two_sided) {
        auto const ab = ideal_product(a.members(), b.members(), l.ring);
        if (ab.subset_of(p.members()) && !p.contains(a) && !p.contains(b)) {
          return {false,
                  "product inside without either factor",
                  std::make_pair(a.members(), b.members())};
        }
      }
    }
    return {true, {}, std::nullopt};
  }

  inline IdealLattice build_lattice(HyperRing const& r,
                                    std::size_t      bound = kDefaultSubsetBound) {
    IdealLattice l{r, enumerate_ideals(r, Side::two_sided, bound),
                   enumerate_ideals(r, Side::right, bound), {}, {}, {}};
    for (auto const& a : l.two_sided) {
      if (detail::maximal_in(a, l.two_sided)) {
        l.maximal.push_back(a);
      }
      if (a.proper() && is_prime(a, l)) {
        l.prime.push_back(a);
      }
    }
    for (auto const& a : l.right) {
      if (detail::maximal_in(a, l.right)) {
        l.maximal_right.push_back(a);
      }
    }
    return l;
  }

  // Smallest-key maximal right hyperideal containing a.
  inline HyperIdeal maximal_above(HyperIdeal const& a, IdealLattice const& l) {
    if (!a.proper()) {
      throw InvalidInput("maximal_above of the whole ring");
    }
    if (!is_hyperideal(a.members(), l.ring, Side::right)) {
      throw InvalidInput("maximal_above needs a right hyperideal");
    }
    for (auto const& m : l.maximal_right) {
      if (m.contains(a)) {
        return m;
      }
    }
    throw TheoremViolation("maximal_right_exists",
                           "no maximal right hyperideal contains "
                               + a.members().to_string());
  }

  inline ElementSet generated_ideal_by_closure(ElementSet const& x,
                                               HyperRing const&  r) {
    return ideal_closure(x, r, Side::two_sided);
  }

  inline ElementSet generated_ideal_by_intersection(ElementSet const&   x,
                                                    IdealLattice const& l) {
    auto s = l.ring.full_set();
    for (auto const& a : l.two_sided) {
      if (x.subset_of(a.members())) {
        s &= a.members();
      }
    }
    return s;
  }

  // The two-sided hyperideal generated by x, computed as a closure and as an
  // intersection of superideals; the two must agree.
  inline HyperIdeal generated_ideal(ElementSet const& x, IdealLattice const& l) {
    auto const by_closure      = generated_ideal_by_closure(x, l.ring);
    auto const by_intersection = generated_ideal_by_intersection(x, l);
    if (by_closure != by_intersection) {
      throw TheoremViolation("generated_ideal_routes_agree",
                             "closure " + by_closure.to_string()
                                 + " != intersection "
                                 + by_intersection.to_string());
    }
    return HyperIdeal::certify(
        l.ring, by_closure, Side::two_sided, "generated_ideal_is_ideal");
  }

  inline HyperIdeal generated_ideal(ElementSet const& x, HyperRing const& r) {
    return generated_ideal(x, build_lattice(r));
  }

  struct QuotientRing {
    HyperRing               ring;
    RingHom                 projection;
    std::vector<ElementSet> cosets;
  };

  namespace detail {
    // Cosets a + r of an additive subhypergroup, ordered by least element,
    // and the coset index of every element.
    inline std::pair<std::vector<ElementSet>, std::vector<Elem>> cosets_of(
        HypergroupTable const& t,
        ElementSet const&      sub,
        std::string const&     check_id) {
      std::vector<ElementSet> cosets;
      std::vector<Elem>       index(t.order, static_cast<Elem>(t.order));
      for (Elem x = 0; x < t.order; ++x) {
        if (index[x] != t.order) {
          continue;
        }
        auto const c = hypersum(t, sub, ElementSet::singleton(t.order, x));
        for (auto y : c) {
          if (index[y] != t.order) {
            throw TheoremViolation(check_id, "cosets overlap at "
                                                 + std::to_string(y));
          }
          index[y] = static_cast<Elem>(cosets.size());
        }
        cosets.push_back(c);
      }
      return {std::move(cosets), std::move(index)};
    }

    // Additive structure on cosets; throws unless independent of the
    // chosen representatives.
    inline HypergroupTable coset_hypergroup(HypergroupTable const&         t,
                                            std::vector<ElementSet> const& cosets,
                                            std::vector<Elem> const&       index,
                                            std::string const& check_id) {
      auto const      k = cosets.size();
      HypergroupTable q;
      q.order = k;
      q.add.assign(k * k, 0);
      q.neg.assign(k, 0);
      for (Elem i = 0; i < k; ++i) {
        for (Elem j = 0; j < k; ++j) {
          std::optional<std::uint64_t> bits;
          for (auto x : cosets[i]) {
            for (auto y : cosets[j]) {
              std::uint64_t here = 0;
              for (auto z : t.sum(x, y)) {
                here |= std::uint64_t{1} << index[z];
              }
              if (bits && *bits != here) {
                throw TheoremViolation(check_id,
                                       "coset sum depends on representatives");
              }
              bits = here;
            }
          }
          q.add[i * k + j] = *bits;
        }
        q.neg[i] = index[t.neg[cosets[i].front()]];
      }
      return q;
    }
  }  // namespace detail

  // R/a with (a + x) + (a + y) = {a + z : z in x + y} and
  // (a + x)(a + y) = a + xy; the result is re-validated.
  inline QuotientRing quotient_ring(HyperRing const& r, HyperIdeal const& a) {
    if (a.side() != Side::two_sided) {
      throw InvalidInput("quotient by a one-sided hyperideal");
    }
    if (!a.ring().same_as(r)) {
      throw CarrierMismatch("quotient by a hyperideal of another ring");
    }
    auto [cosets, index]
        = detail::cosets_of(r.additive(), a.members(), "quotient_ring_valid");
    auto const   k = cosets.size();
    RawHyperRing q;
    q.name     = r.name() + "/" + a.members().to_string();
    q.additive = detail::coset_hypergroup(
        r.additive(), cosets, index, "quotient_ring_valid");
    q.mul.assign(k * k, 0);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        std::optional<Elem> prod;
        for (auto x : cosets[i]) {
          for (auto y : cosets[j]) {
            auto const z = index[r.mul(x, y)];
            if (prod && *prod != z) {
              throw TheoremViolation("quotient_ring_valid",
                                     "coset product depends on representatives");
            }
            prod = z;
          }
        }
        q.mul[i * k + j] = *prod;
      }
    }
    if (r.unit()) {
      q.unit = index[*r.unit()];
    }
    VerificationReport report;
    auto               ring = HyperRing::validate(q, &report);
    if (!ring) {
      throw TheoremViolation("quotient_ring_valid",
                             "R/a fails " + report.first_failure()->id);
    }
    RingHom proj{r, *ring, index, r.is_unital(), "proj"};
    return {*ring, std::move(proj), std::move(cosets)};
  }

  // Intersection of all prime two-sided hyperideals (the whole ring when
  // there are none).
  inline HyperIdeal nil_radical(IdealLattice const& l) {
    if (l.prime.empty()) {
      return HyperIdeal::whole(l.ring);
    }
    return ideal_intersection(l.prime);
  }

  // Elements with some power equal to 0.
  inline ElementSet nilpotent_elements(HyperRing const& r) {
    ElementSet out(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
      Elem x = a;
      for (std::size_t k = 0; k <= r.order() && x != 0; ++k) {
        x = r.mul(x, a);
      }
      if (x == 0) {
        out.insert(a);
      }
    }
    return out;
  }

}  // namespace khr

#endif  // KHR_IDEALS_HPP_
