#ifndef KHR_HYPERRING_HPP_
#define KHR_HYPERRING_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hypergroup.hpp"
#include "index_set.hpp"
#include "report.hpp"

namespace khr {

  // Tables of a candidate Krasner hyperring. Nothing here is trusted; a
  // RawHyperRing becomes usable only by passing through HyperRing::validate.
  struct RawHyperRing {
    std::string         name;
    HypergroupTable     additive;
    std::vector<Elem>   mul = {0};
    std::optional<Elem> unit;

    std::size_t order() const noexcept {
      return additive.order;
    }

    Elem product(Elem a, Elem b) const {
      return mul[a * additive.order + b];
    }

    friend bool operator==(RawHyperRing const& a, RawHyperRing const& b) {
      return a.additive == b.additive && a.mul == b.mul && a.unit == b.unit;
    }
  };

  inline VerificationReport verify_canonical_hypergroup(RawHyperRing const& r) {
    return verify_canonical_hypergroup(r.additive);
  }

  // Exhaustively checks multiplicative associativity, absorption by 0, both
  // distributive laws as set equalities and, when declared, the unit.
  inline VerificationReport verify_hyperring(RawHyperRing const& r) {
    VerificationReport report;
    auto const&        t = r.additive;
    std::size_t const  n = t.order;

    auto& tables = report.add("mul_tables");
    if (r.mul.size() != n * n) {
      fail(tables, {}, "multiplication table size does not match the order");
      return report;
    }
    for (Elem a = 0; a < n && tables.passed; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (r.product(a, b) >= n) {
          fail(tables, {a, b}, "product out of range");
          break;
        }
      }
    }
    if (r.unit && *r.unit >= n) {
      fail(tables, {*r.unit}, "unit out of range");
    }
    if (!tables.passed || !check_hypergroup_tables(t).passed) {
      return report;
    }

    auto image = [&](Elem a, ElementSet const& s, bool on_left) {
      ElementSet out(n);
      for (auto x : s) {
        out.insert(on_left ? r.product(a, x) : r.product(x, a));
      }
      return out;
    };

    auto& assoc = report.add("mul_associativity");
    for (Elem a = 0; a < n && assoc.passed; ++a) {
      for (Elem b = 0; b < n && assoc.passed; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (r.product(r.product(a, b), c) != r.product(a, r.product(b, c))) {
            fail(assoc, {a, b, c}, "(ab)c != a(bc)");
            break;
          }
        }
      }
    }

    auto& absorb = report.add("zero_absorption");
    for (Elem a = 0; a < n; ++a) {
      if (r.product(a, 0) != 0 || r.product(0, a) != 0) {
        fail(absorb, {a}, "a0 or 0a differs from 0");
        break;
      }
    }

    auto& left = report.add("left_distributivity");
    for (Elem a = 0; a < n && left.passed; ++a) {
      for (Elem b = 0; b < n && left.passed; ++b) {
        for (Elem c = 0; c < n; ++c) {
          auto const lhs = image(a, t.sum(b, c), true);
          auto const rhs = t.sum(r.product(a, b), r.product(a, c));
          if (lhs != rhs) {
            fail(left, {a, b, c}, "a(b+c) != ab+ac");
            break;
          }
        }
      }
    }

    auto& right = report.add("right_distributivity");
    for (Elem a = 0; a < n && right.passed; ++a) {
      for (Elem b = 0; b < n && right.passed; ++b) {
        for (Elem c = 0; c < n; ++c) {
          auto const lhs = image(c, t.sum(a, b), false);
          auto const rhs = t.sum(r.product(a, c), r.product(b, c));
          if (lhs != rhs) {
            fail(right, {a, b, c}, "(a+b)c != ac+bc");
            break;
          }
        }
      }
    }

    if (r.unit) {
      auto& unit = report.add("unit");
      for (Elem a = 0; a < n; ++a) {
        if (r.product(a, *r.unit) != a || r.product(*r.unit, a) != a) {
          fail(unit, {a}, "a*1 or 1*a differs from a");
          break;
        }
      }
    }
    return report;
  }

  // Both verification passes, canonical hypergroup first.
  inline VerificationReport verify_all(RawHyperRing const& r) {
    auto report = verify_canonical_hypergroup(r);
    report.append(verify_hyperring(r));
    return report;
  }

  // The unique two-sided multiplicative identity, if any.
  inline std::optional<Elem> find_unit(RawHyperRing const& r) {
    for (Elem e = 0; e < r.order(); ++e) {
      bool ok = true;
      for (Elem a = 0; a < r.order() && ok; ++a) {
        ok = r.product(a, e) == a && r.product(e, a) == a;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  // A validated, immutable Krasner hyperring. Copies share the tables.
  class HyperRing {
   public:
    // Returns the ring only if every axiom holds; `report` receives the
    // per-axiom outcome either way.
    static std::optional<HyperRing> validate(RawHyperRing        raw,
                                             VerificationReport* report
                                             = nullptr) {
      auto r = verify_all(raw);
      bool ok = r.ok();
      if (report != nullptr) {
        *report = std::move(r);
      }
      if (!ok) {
        return std::nullopt;
      }
      if (!raw.unit) {
        raw.unit = find_unit(raw);
      }
      return HyperRing(std::make_shared<RawHyperRing const>(std::move(raw)));
    }

    // Like validate, but throws InvalidInput naming the first failed axiom.
    static HyperRing checked(RawHyperRing raw) {
      VerificationReport report;
      std::string        name = raw.name;
      auto               ring = validate(std::move(raw), &report);
      if (!ring) {
        auto const* f = report.first_failure();
        throw InvalidInput("ring '" + name + "' fails axiom " + f->id + " ("
                           + f->detail + ")");
      }
      return *ring;
    }

    std::size_t order() const noexcept {
      return _data->order();
    }
    std::string const& name() const noexcept {
      return _data->name;
    }
    RawHyperRing const& raw() const noexcept {
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
    Elem mul(Elem a, Elem b) const {
      return _data->product(a, b);
    }
    std::optional<Elem> unit() const noexcept {
      return _data->unit;
    }
    bool is_unital() const noexcept {
      return _data->unit.has_value();
    }

    ElementSet empty_set() const {
      return ElementSet(order());
    }
    ElementSet zero_set() const {
      return ElementSet::singleton(order(), 0);
    }
    ElementSet full_set() const {
      return ElementSet::full(order());
    }

    // Same underlying tables (identity, or structurally equal).
    bool same_as(HyperRing const& that) const noexcept {
      return _data == that._data || *_data == *that._data;
    }

   private:
    explicit HyperRing(std::shared_ptr<RawHyperRing const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<RawHyperRing const> _data;
  };

  inline ElementSet hypersum(ElementSet const& x,
                             ElementSet const& y,
                             HyperRing const&  r) {
    return hypersum(r.additive(), x, y);
  }

  inline ElementSet neg_set(ElementSet const& x, HyperRing const& r) {
    return neg_set(r.additive(), x);
  }

  // {xy : x in a, y in b}, without additive closure.
  inline ElementSet products(ElementSet const& a,
                             ElementSet const& b,
                             HyperRing const&  r) {
    if (a.universe() != r.order() || b.universe() != r.order()) {
      throw CarrierMismatch("operands do not live on this ring");
    }
    ElementSet out(r.order());
    for (auto x : a) {
      for (auto y : b) {
        out.insert(r.mul(x, y));
      }
    }
    return out;
  }

  // Z_n with ordinary modular arithmetic, viewed as a hyperring.
  inline RawHyperRing cyclic_ring(std::size_t n) {
    RawHyperRing r;
    r.name     = "Z" + std::to_string(n);
    r.additive = cyclic_group_table(n);
    r.mul.assign(n * n, 0);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        r.mul[a * n + b] = static_cast<Elem>((a * b) % n);
      }
    }
    r.unit = static_cast<Elem>(1 % n);
    return r;
  }

  // The two-element hyperfield {0, 1} with 1 + 1 = {0, 1}.
  inline RawHyperRing krasner_hyperfield() {
    RawHyperRing r;
    r.name           = "K";
    r.additive.order = 2;
    r.additive.add   = {0b01, 0b10, 0b10, 0b11};
    r.additive.neg   = {0, 1};
    r.mul            = {0, 0, 0, 1};
    r.unit           = 1;
    return r;
  }

  // The one-element ring.
  inline RawHyperRing zero_ring() {
    RawHyperRing r;
    r.name = "O";
    r.unit = 0;
    return r;
  }

}  // namespace khr

#endif  // KHR_HYPERRING_HPP_
