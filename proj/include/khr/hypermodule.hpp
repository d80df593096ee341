#ifndef KHR_HYPERMODULE_HPP_
#define KHR_HYPERMODULE_HPP_

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hypergroup.hpp"
#include "hyperring.hpp"
#include "ideals.hpp"
#include "report.hpp"
#include "ring_hom.hpp"

namespace khr {

  // Tables of a candidate right hypermodule over a validated ring.
  // act[m * ring.order() + r] is the single element mr.
  struct RawHyperModule {
    std::string       name;
    HyperRing         ring;
    HypergroupTable   additive;
    std::vector<Elem> act;
    bool              unital = false;

    std::size_t order() const noexcept {
      return additive.order;
    }
    Elem apply(Elem m, Elem r) const {
      return act[m * ring.order() + r];
    }
  };

  inline VerificationReport verify_hypermodule(RawHyperModule const& m) {
    auto              report = verify_canonical_hypergroup(m.additive);
    auto const&       t      = m.additive;
    auto const&       r      = m.ring;
    std::size_t const n      = t.order;
    std::size_t const k      = r.order();

    auto& tables = report.add("act_tables");
    if (m.act.size() != n * k) {
      fail(tables, {}, "action table size does not match");
      return report;
    }
    for (Elem x = 0; x < n && tables.passed; ++x) {
      for (Elem a = 0; a < k; ++a) {
        if (m.apply(x, a) >= n) {
          fail(tables, {x, a}, "action out of range");
          break;
        }
      }
    }
    if (!tables.passed || !report.ok()) {
      return report;
    }

    auto& over_sum = report.add("act_additive");
    for (Elem x = 0; x < n && over_sum.passed; ++x) {
      for (Elem y = 0; y < n && over_sum.passed; ++y) {
        for (Elem a = 0; a < k; ++a) {
          ElementSet lhs(n);
          for (auto z : t.sum(x, y)) {
            lhs.insert(m.apply(z, a));
          }
          if (lhs != t.sum(m.apply(x, a), m.apply(y, a))) {
            fail(over_sum, {x, y, a}, "(m+m')r != mr+m'r");
            break;
          }
        }
      }
    }

    auto& over_ring = report.add("act_distributive");
    for (Elem x = 0; x < n && over_ring.passed; ++x) {
      for (Elem a = 0; a < k && over_ring.passed; ++a) {
        for (Elem b = 0; b < k; ++b) {
          ElementSet lhs(n);
          for (auto c : r.sum(a, b)) {
            lhs.insert(m.apply(x, c));
          }
          if (lhs != t.sum(m.apply(x, a), m.apply(x, b))) {
            fail(over_ring, {x, a, b}, "m(r+r') != mr+mr'");
            break;
          }
        }
      }
    }

    auto& assoc = report.add("act_associative");
    for (Elem x = 0; x < n && assoc.passed; ++x) {
      for (Elem a = 0; a < k && assoc.passed; ++a) {
        for (Elem b = 0; b < k; ++b) {
          if (m.apply(x, r.mul(a, b)) != m.apply(m.apply(x, a), b)) {
            fail(assoc, {x, a, b}, "m(rr') != (mr)r'");
            break;
          }
        }
      }
    }

    auto& zero = report.add("act_zero");
    for (Elem x = 0; x < n; ++x) {
      if (m.apply(x, 0) != 0) {
        fail(zero, {x}, "m0 != 0");
        break;
      }
    }

    if (m.unital) {
      auto& unit = report.add("act_unit");
      if (!r.unit()) {
        fail(unit, {}, "unital module over a ring without unit");
      } else {
        for (Elem x = 0; x < n; ++x) {
          if (m.apply(x, *r.unit()) != x) {
            fail(unit, {x}, "m1 != m");
            break;
          }
        }
      }
    }
    return report;
  }

  // A validated, immutable right hypermodule.
  class HyperModule {
   public:
    static std::optional<HyperModule> validate(RawHyperModule      raw,
                                               VerificationReport* report
                                               = nullptr) {
      auto r  = verify_hypermodule(raw);
      bool ok = r.ok();
      if (report != nullptr) {
        *report = std::move(r);
      }
      if (!ok) {
        return std::nullopt;
      }
      return HyperModule(std::make_shared<RawHyperModule const>(std::move(raw)));
    }

    static HyperModule checked(RawHyperModule raw) {
      VerificationReport report;
      std::string        name = raw.name;
      auto               m    = validate(std::move(raw), &report);
      if (!m) {
        auto const* f = report.first_failure();
        throw InvalidInput("module '" + name + "' fails axiom " + f->id + " ("
                           + f->detail + ")");
      }
      return *m;
    }

    std::size_t order() const noexcept {
      return _data->order();
    }
    std::string const& name() const noexcept {
      return _data->name;
    }
    HyperRing const& ring() const noexcept {
      return _data->ring;
    }
    RawHyperModule const& raw() const noexcept {
      return *_data;
    }
    HypergroupTable const& additive() const noexcept {
      return _data->additive;
    }
    ElementSet sum(Elem a, Elem b) const {
      return _data->additive.sum(a, b);
    }
    Elem neg(Elem a) const {
      return _data->additive.neg[a];
    }
    Elem act(Elem m, Elem r) const {
      return _data->apply(m, r);
    }
    bool unital() const noexcept {
      return _data->unital;
    }
    ElementSet zero_set() const {
      return ElementSet::singleton(order(), 0);
    }
    ElementSet full_set() const {
      return ElementSet::full(order());
    }

   private:
    explicit HyperModule(std::shared_ptr<RawHyperModule const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<RawHyperModule const> _data;
  };

  // R acting on itself from the right.
  inline HyperModule regular_module(HyperRing const& r) {
    return HyperModule::checked(RawHyperModule{
        r.name() + "_R", r, r.additive(), r.raw().mul, r.is_unital()});
  }

  // {mr : m in s, r in ring}.
  inline ElementSet act_set(HyperModule const& m, ElementSet const& s) {
    ElementSet out(m.order());
    for (auto x : s) {
      for (Elem a = 0; a < m.ring().order(); ++a) {
        out.insert(m.act(x, a));
      }
    }
    return out;
  }

  inline IdealCheck is_subhypermodule(ElementSet const& s, HyperModule const& m) {
    if (s.universe() != m.order()) {
      throw CarrierMismatch("candidate subhypermodule is not a subset of M");
    }
    if (s.empty()) {
      return {false, "empty", {}};
    }
    if (!s.contains(0)) {
      return {false, "missing zero", {}};
    }
    for (auto a : s) {
      for (auto b : s) {
        if (!m.sum(a, b).subset_of(s)) {
          return {false, "not closed under addition", {a, b}};
        }
      }
      if (!s.contains(m.neg(a))) {
        return {false, "not closed under negation", {a}};
      }
      for (Elem r = 0; r < m.ring().order(); ++r) {
        if (!s.contains(m.act(a, r))) {
          return {false, "not closed under the action", {a, r}};
        }
      }
    }
    return {};
  }

  // Smallest subhypermodule containing x.
  inline ElementSet submodule_closure(ElementSet const& x, HyperModule const& m) {
    auto s = x | m.zero_set();
    while (true) {
      auto next = s | hypersum(m.additive(), s, s) | neg_set(m.additive(), s)
                  | act_set(m, s);
      if (next == s) {
        return s;
      }
      s = next;
    }
  }

  inline std::vector<ElementSet> enumerate_subhypermodules(
      HyperModule const& m,
      std::size_t        bound = kDefaultSubsetBound) {
    if (m.order() > bound) {
      throw BoundExceeded("subhypermodule enumeration refused: order "
                          + std::to_string(m.order()) + " exceeds bound "
                          + std::to_string(bound));
    }
    auto const              n = static_cast<Elem>(m.order());
    std::vector<ElementSet> out;
    auto dfs = [&](auto&& self, Elem next, ElementSet in, ElementSet ex) {
      while (next < n && in.contains(next)) {
        ++next;
      }
      if (next == n) {
        out.push_back(in);
        return;
      }
      auto ex2 = ex;
      ex2.insert(next);
      self(self, next + 1, in, ex2);
      auto grown = in;
      grown.insert(next);
      grown = submodule_closure(grown, m);
      if (!grown.intersects(ex)) {
        self(self, next + 1, grown, ex);
      }
    };
    dfs(dfs, 1, submodule_closure(m.zero_set(), m), ElementSet(n));
    std::sort(out.begin(), out.end());
    return out;
  }

  inline bool has_zero_action(HyperModule const& m) {
    return act_set(m, m.full_set()) == m.zero_set();
  }

  // Simple: the action is not identically zero and the only
  // subhypermodules are 0 and M.
  inline Verdict is_simple(HyperModule const& m) {
    if (has_zero_action(m)) {
      return {false, "zero action"};
    }
    auto const subs = enumerate_subhypermodules(m);
    if (subs.size() != 2) {
      for (auto const& s : subs) {
        if (s != m.zero_set() && s != m.full_set()) {
          return {false, "proper nonzero subhypermodule " + s.to_string()};
        }
      }
    }
    return {true, {}};
  }

  // Smallest subhypermodule containing m (right closure).
  inline ElementSet cyclic_submodule(HyperModule const& m, Elem x) {
    if (x >= m.order()) {
      throw InvalidInput("element " + std::to_string(x) + " outside the module");
    }
    return submodule_closure(ElementSet::singleton(m.order(), x), m);
  }

  // mR = {mr : r in R}.
  inline ElementSet action_orbit(HyperModule const& m, Elem x) {
    return act_set(m, ElementSet::singleton(m.order(), x));
  }

  // All elements of finite sums m_1 a_1 + ... + m_k a_k with a_i in a.
  inline ElementSet module_ideal_product(HyperModule const& m,
                                         HyperIdeal const&  a) {
    if (!a.ring().same_as(m.ring())) {
      throw CarrierMismatch("hyperideal of a different ring");
    }
    ElementSet p(m.order());
    for (Elem x = 0; x < m.order(); ++x) {
      for (auto r : a.members()) {
        p.insert(m.act(x, r));
      }
    }
    auto s = p;
    while (true) {
      auto next = s | hypersum(m.additive(), s, p);
      if (next == s) {
        break;
      }
      s = next;
    }
    if (auto check = is_subhypermodule(s, m); !check) {
      throw TheoremViolation("module_ideal_product_is_submodule",
                             s.to_string() + ": " + check.reason);
    }
    return s;
  }

  // {r : mr = 0 for all m}, certified as a two-sided hyperideal.
  inline HyperIdeal annihilator(HyperModule const& m) {
    auto const& r = m.ring();
    ElementSet  s(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
      bool kills = true;
      for (Elem x = 0; x < m.order() && kills; ++x) {
        kills = m.act(x, a) == 0;
      }
      if (kills) {
        s.insert(a);
      }
    }
    return HyperIdeal::certify(r, s, Side::two_sided, "annihilator_is_ideal");
  }

  // (-m)r = -(mr) = m(-r) for all m, r.
  inline CheckResult check_negation_compatibility(HyperModule const& m) {
    CheckResult c{"negation_compatibility", true, {}, {}};
    auto const& r = m.ring();
    for (Elem x = 0; x < m.order(); ++x) {
      for (Elem a = 0; a < r.order(); ++a) {
        auto const lhs = m.act(m.neg(x), a);
        auto const mid = m.neg(m.act(x, a));
        auto const rhs = m.act(x, r.neg(a));
        if (lhs != mid || mid != rhs) {
          fail(c, {x, a}, "(-m)r, -(mr), m(-r) differ");
          return c;
        }
      }
    }
    return c;
  }

  struct ModuleHom {
    HyperModule       source;
    HyperModule       target;
    std::vector<Elem> map;

    Elem operator()(Elem m) const {
      return map[m];
    }
    ElementSet image_of(ElementSet const& s) const {
      ElementSet out(target.order());
      for (auto x : s) {
        out.insert(map[x]);
      }
      return out;
    }
  };

  inline ModuleHom identity_hom(HyperModule const& m) {
    std::vector<Elem> map(m.order());
    for (Elem x = 0; x < m.order(); ++x) {
      map[x] = x;
    }
    return {m, m, std::move(map)};
  }

  // Strong hypermodule homomorphism laws: mu(0) = 0,
  // mu(m + m') = mu(m) + mu(m') as sets and mu(mr) = mu(m)r.
  inline VerificationReport hom_check(ModuleHom const& mu) {
    if (!mu.source.ring().same_as(mu.target.ring())) {
      throw CarrierMismatch("module homomorphism across different rings");
    }
    VerificationReport report;
    auto const&        src = mu.source;
    auto const&        tgt = mu.target;
    auto&              tables = report.add("map_tables");
    if (mu.map.size() != src.order()) {
      fail(tables, {}, "map size does not match the source order");
      return report;
    }
    for (Elem x = 0; x < src.order(); ++x) {
      if (mu(x) >= tgt.order()) {
        fail(tables, {x}, "image out of range");
        return report;
      }
    }
    auto& zero = report.add("zero");
    if (mu(0) != 0) {
      fail(zero, {0}, "mu(0) != 0");
    }
    auto& add = report.add("additive");
    for (Elem x = 0; x < src.order() && add.passed; ++x) {
      for (Elem y = 0; y < src.order(); ++y) {
        if (mu.image_of(src.sum(x, y)) != tgt.sum(mu(x), mu(y))) {
          fail(add, {x, y}, "mu(m+m') != mu(m)+mu(m')");
          break;
        }
      }
    }
    auto& equi = report.add("equivariant");
    for (Elem x = 0; x < src.order() && equi.passed; ++x) {
      for (Elem a = 0; a < src.ring().order(); ++a) {
        if (mu(src.act(x, a)) != tgt.act(mu(x), a)) {
          fail(equi, {x, a}, "mu(mr) != mu(m)r");
          break;
        }
      }
    }
    return report;
  }

  inline ElementSet kernel(ModuleHom const& mu) {
    ElementSet k(mu.source.order());
    for (Elem x = 0; x < mu.source.order(); ++x) {
      if (mu(x) == 0) {
        k.insert(x);
      }
    }
    if (auto check = is_subhypermodule(k, mu.source); !check) {
      throw TheoremViolation("kernel_is_submodule", check.reason);
    }
    return k;
  }

  inline ElementSet image(ModuleHom const& mu) {
    auto im = mu.image_of(mu.source.full_set());
    if (auto check = is_subhypermodule(im, mu.target); !check) {
      throw TheoremViolation("image_is_submodule", check.reason);
    }
    return im;
  }

  struct QuotientModule {
    HyperModule             module;
    ModuleHom               projection;
    std::vector<ElementSet> cosets;
  };

  // M/K with (K + a) + (K + a') = {K + b : b in a + a'} and
  // (K + a)r = K + ar; the action is checked to be independent of the
  // representative before the singleton is stored.
  inline QuotientModule quotient_module(HyperModule const& m, ElementSet const& k) {
    if (auto check = is_subhypermodule(k, m); !check) {
      throw InvalidInput(k.to_string() + " is not a subhypermodule: "
                         + check.reason);
    }
    auto [cosets, index]
        = detail::cosets_of(m.additive(), k, "quotient_module_valid");
    auto const     q  = cosets.size();
    auto const     rk = m.ring().order();
    RawHyperModule raw{m.name() + "/" + k.to_string(), m.ring(), {}, {}, m.unital()};
    raw.additive = detail::coset_hypergroup(
        m.additive(), cosets, index, "quotient_module_valid");
    raw.act.assign(q * rk, 0);
    for (Elem i = 0; i < q; ++i) {
      for (Elem a = 0; a < rk; ++a) {
        std::optional<Elem> image;
        for (auto x : cosets[i]) {
          auto const z = index[m.act(x, a)];
          if (image && *image != z) {
            throw TheoremViolation("quotient_action_well_defined",
                                   "(K+a)r depends on the representative");
          }
          image = z;
        }
        raw.act[i * rk + a] = *image;
      }
    }
    VerificationReport report;
    auto               module = HyperModule::validate(raw, &report);
    if (!module) {
      throw TheoremViolation("quotient_module_valid",
                             "M/K fails " + report.first_failure()->id);
    }
    ModuleHom proj{m, *module, index};
    return {*module, std::move(proj), std::move(cosets)};
  }

  // The subhypermodule s as a module in its own right, elements relabelled
  // in increasing order.
  inline HyperModule submodule_as_module(HyperModule const& m, ElementSet const& s) {
    if (auto check = is_subhypermodule(s, m); !check) {
      throw InvalidInput(s.to_string() + " is not a subhypermodule: "
                         + check.reason);
    }
    auto const        members = s.to_vector();
    auto const        n       = members.size();
    std::vector<Elem> relabel(m.order(), 0);
    for (Elem i = 0; i < n; ++i) {
      relabel[members[i]] = i;
    }
    auto const     rk = m.ring().order();
    RawHyperModule raw{m.name() + "|" + s.to_string(), m.ring(), {}, {}, m.unital()};
    raw.additive.order = n;
    raw.additive.add.assign(n * n, 0);
    raw.additive.neg.assign(n, 0);
    raw.act.assign(n * rk, 0);
    for (Elem i = 0; i < n; ++i) {
      raw.additive.neg[i] = relabel[m.neg(members[i])];
      for (Elem j = 0; j < n; ++j) {
        std::uint64_t bits = 0;
        for (auto z : m.sum(members[i], members[j])) {
          bits |= std::uint64_t{1} << relabel[z];
        }
        raw.additive.add[i * n + j] = bits;
      }
      for (Elem a = 0; a < rk; ++a) {
        raw.act[i * rk + a] = relabel[m.act(members[i], a)];
      }
    }
    return HyperModule::checked(std::move(raw));
  }

  namespace detail {
    // Relabelling-invariant fingerprint of an element, used to prune
    // isomorphism search.
    using ElementProfile = std::tuple<std::vector<std::size_t>,
                                      std::size_t,
                                      std::size_t,
                                      bool,
                                      bool>;

    inline ElementProfile element_profile(HyperModule const& m, Elem x) {
      std::vector<std::size_t> row;
      for (Elem y = 0; y < m.order(); ++y) {
        row.push_back(m.sum(x, y).size());
      }
      std::sort(row.begin(), row.end());
      std::size_t zeros = 0;
      for (Elem a = 0; a < m.ring().order(); ++a) {
        zeros += m.act(x, a) == 0 ? 1 : 0;
      }
      return {std::move(row),
              action_orbit(m, x).size(),
              zeros,
              m.neg(x) == x,
              m.sum(x, x).contains(x)};
    }
  }  // namespace detail

  // A bijective strong homomorphism M -> N, if one exists. Candidates for
  // each element are restricted to elements of N with the same profile
  // (sorted row of hypersum sizes, orbit size, annihilating scalars,
  // self-negation); complete assignments are checked in full.
  inline std::optional<ModuleHom> find_isomorphism(HyperModule const& m,
                                                   HyperModule const& n) {
    if (!m.ring().same_as(n.ring())) {
      throw CarrierMismatch("isomorphism search across different rings");
    }
    if (m.order() != n.order()) {
      return std::nullopt;
    }
    auto const                                 size = m.order();
    std::vector<detail::ElementProfile>        pm, pn;
    for (Elem x = 0; x < size; ++x) {
      pm.push_back(detail::element_profile(m, x));
      pn.push_back(detail::element_profile(n, x));
    }
    std::vector<Elem> map(size, 0);
    std::vector<bool> used(size, false);
    used[0] = true;
    if (pm[0] != pn[0]) {
      return std::nullopt;
    }
    std::optional<ModuleHom> found;
    auto search = [&](auto&& self, Elem x) -> void {
      if (found) {
        return;
      }
      if (x == size) {
        ModuleHom mu{m, n, map};
        if (hom_check(mu).ok()) {
          found = std::move(mu);
        }
        return;
      }
      for (Elem y = 1; y < size; ++y) {
        if (used[y] || pm[x] != pn[y]) {
          continue;
        }
        used[y] = true;
        map[x]  = y;
        self(self, x + 1);
        used[y] = false;
      }
    };
    search(search, 1);
    return found;
  }

  // Every strong homomorphism M -> N, in lexicographic order of the map.
  inline std::vector<ModuleHom> enumerate_module_homs(
      HyperModule const& m,
      HyperModule const& n,
      std::size_t        max_candidates = 1'000'000) {
    double candidates = 1;
    for (std::size_t i = 1; i < m.order(); ++i) {
      candidates *= static_cast<double>(n.order());
    }
    if (candidates > static_cast<double>(max_candidates)) {
      throw BoundExceeded("module homomorphism search space too large");
    }
    std::vector<ModuleHom> out;
    std::vector<Elem>      map(m.order(), 0);
    auto search = [&](auto&& self, Elem x) -> void {
      if (x == m.order()) {
        ModuleHom mu{m, n, map};
        if (hom_check(mu).ok()) {
          out.push_back(std::move(mu));
        }
        return;
      }
      for (Elem y = 0; y < n.order(); ++y) {
        map[x] = y;
        self(self, x + 1);
      }
    };
    search(search, 1);
    return out;
  }

  // M/ker(mu) and im(mu) are isomorphic.
  inline CheckResult check_first_isomorphism(ModuleHom const& mu) {
    CheckResult c{"first_isomorphism", true, {}, {}};
    auto const  quotient = quotient_module(mu.source, kernel(mu));
    auto const  im       = submodule_as_module(mu.target, image(mu));
    if (!find_isomorphism(quotient.module, im)) {
      fail(c, mu.map, "M/ker is not isomorphic to im");
    }
    return c;
  }

  // M viewed over the source of phi via m.s = m phi(s). The axioms are
  // re-verified rather than assumed.
  inline std::optional<HyperModule> restrict_scalars(HyperModule const&  m,
                                                     RingHom const&      phi,
                                                     VerificationReport* report
                                                     = nullptr) {
    if (!phi.target.same_as(m.ring())) {
      throw CarrierMismatch("restriction along a map into a different ring");
    }
    auto const     rk = phi.source.order();
    RawHyperModule raw{m.name() + "@" + phi.source.name(),
                       phi.source,
                       m.additive(),
                       {},
                       m.unital() && phi.unit_preserving};
    raw.act.assign(m.order() * rk, 0);
    for (Elem x = 0; x < m.order(); ++x) {
      for (Elem s = 0; s < rk; ++s) {
        raw.act[x * rk + s] = m.act(x, phi(s));
      }
    }
    return HyperModule::validate(std::move(raw), report);
  }

}  // namespace khr

#endif  // KHR_HYPERMODULE_HPP_
