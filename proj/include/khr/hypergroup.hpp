#ifndef KHR_HYPERGROUP_HPP_
#define KHR_HYPERGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "index_set.hpp"
#include "report.hpp"

namespace khr {

  // Set-valued addition table with negation on {0, ..., order - 1}.
  // Element 0 is the additive identity by convention.
  struct HypergroupTable {
    std::size_t                order = 1;
    std::vector<std::uint64_t> add   = {1};
    std::vector<Elem>          neg   = {0};

    ElementSet sum(Elem a, Elem b) const {
      return ElementSet::from_bits(order, add[a * order + b]);
    }

    ElementSet empty_set() const {
      return ElementSet(order);
    }

    ElementSet full_set() const {
      return ElementSet::full(order);
    }

    ElementSet zero_set() const {
      return ElementSet::singleton(order, 0);
    }

    friend bool operator==(HypergroupTable const&, HypergroupTable const&)
        = default;
  };

  // The group Z_n with singleton sums.
  inline HypergroupTable cyclic_group_table(std::size_t n) {
    HypergroupTable t;
    t.order = n;
    t.add.assign(n * n, 0);
    t.neg.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      t.neg[a] = static_cast<Elem>((n - a) % n);
      for (Elem b = 0; b < n; ++b) {
        t.add[a * n + b] = std::uint64_t{1} << ((a + b) % n);
      }
    }
    return t;
  }

  namespace detail {
    inline void require_same(HypergroupTable const& t,
                             ElementSet const&      x,
                             char const*            what) {
      if (x.universe() != t.order) {
        throw CarrierMismatch(std::string(what) + " lives on a carrier of size "
                              + std::to_string(x.universe()) + ", expected "
                              + std::to_string(t.order));
      }
    }
  }  // namespace detail

  // Set-lifted sum: the union of a + b over a in x, b in y.
  inline ElementSet hypersum(HypergroupTable const& t,
                             ElementSet const&      x,
                             ElementSet const&      y) {
    detail::require_same(t, x, "left summand");
    detail::require_same(t, y, "right summand");
    std::uint64_t bits = 0;
    for (auto a : x) {
      for (auto b : y) {
        bits |= t.add[a * t.order + b];
      }
    }
    return ElementSet::from_bits(t.order, bits);
  }

  inline ElementSet neg_set(HypergroupTable const& t, ElementSet const& x) {
    detail::require_same(t, x, "operand");
    ElementSet out(t.order);
    for (auto a : x) {
      out.insert(t.neg[a]);
    }
    return out;
  }

  // Structural sanity of the tables: sizes, ranges and nonempty sums.
  inline CheckResult check_hypergroup_tables(HypergroupTable const& t) {
    CheckResult c{"tables", true, {}, {}};
    if (t.order == 0 || t.order > kMaxUniverse) {
      fail(c, {}, "order must lie in 1..64");
      return c;
    }
    if (t.add.size() != t.order * t.order || t.neg.size() != t.order) {
      fail(c, {}, "table sizes do not match the order");
      return c;
    }
    auto const mask = ElementSet::mask(t.order);
    for (Elem a = 0; a < t.order; ++a) {
      if (t.neg[a] >= t.order) {
        fail(c, {a}, "negation out of range");
        return c;
      }
      for (Elem b = 0; b < t.order; ++b) {
        auto bits = t.add[a * t.order + b];
        if (bits == 0) {
          fail(c, {a, b}, "hypersum must be nonempty");
          return c;
        }
        if ((bits & ~mask) != 0) {
          fail(c, {a, b}, "hypersum out of range");
          return c;
        }
      }
    }
    return c;
  }

  // Exhaustively checks commutativity, associativity, the identity law,
  // existence and uniqueness of negatives, and reversibility.
  inline VerificationReport verify_canonical_hypergroup(
      HypergroupTable const& t) {
    VerificationReport report;
    report.checks.push_back(check_hypergroup_tables(t));
    if (!report.ok()) {
      return report;
    }
    std::size_t const n = t.order;

    auto& comm = report.add("commutativity");
    for (Elem a = 0; a < n && comm.passed; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (t.add[a * n + b] != t.add[b * n + a]) {
          fail(comm, {a, b}, "a+b != b+a");
          break;
        }
      }
    }

    auto& assoc = report.add("associativity");
    for (Elem a = 0; a < n && assoc.passed; ++a) {
      auto const sa = ElementSet::singleton(n, a);
      for (Elem b = 0; b < n && assoc.passed; ++b) {
        for (Elem c = 0; c < n; ++c) {
          auto const lhs = hypersum(t, t.sum(a, b), ElementSet::singleton(n, c));
          auto const rhs = hypersum(t, sa, t.sum(b, c));
          if (lhs != rhs) {
            fail(assoc, {a, b, c}, "(a+b)+c != a+(b+c)");
            break;
          }
        }
      }
    }

    auto& ident = report.add("identity");
    for (Elem a = 0; a < n; ++a) {
      auto const sa = ElementSet::singleton(n, a);
      if (t.sum(a, 0) != sa || t.sum(0, a) != sa) {
        fail(ident, {a}, "a+0 != {a}");
        break;
      }
    }

    auto& negation = report.add("negation");
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> inverses;
      for (Elem b = 0; b < n; ++b) {
        if (t.sum(a, b).contains(0)) {
          inverses.push_back(b);
        }
      }
      if (inverses.empty()) {
        fail(negation, {a}, "no b with 0 in a+b");
        break;
      }
      if (inverses.size() > 1) {
        fail(negation, {a, inverses[0], inverses[1]}, "negative not unique");
        break;
      }
      if (inverses[0] != t.neg[a]) {
        fail(negation, {a, t.neg[a]}, "neg table disagrees with 0 in a+b");
        break;
      }
    }

    auto& rev = report.add("reversibility");
    for (Elem a = 0; a < n && rev.passed; ++a) {
      for (Elem b = 0; b < n && rev.passed; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (!t.sum(b, c).contains(a)) {
            continue;
          }
          if (!t.sum(t.neg[b], a).contains(c) || !t.sum(a, t.neg[c]).contains(b)) {
            fail(rev, {a, b, c}, "a in b+c but not (c in -b+a and b in a-c)");
            break;
          }
        }
      }
    }
    return report;
  }

  namespace detail {
    // Involutions of {1, ..., n-1}, each as a full negation table.
    inline void involutions(std::vector<Elem>&              current,
                            Elem                            next,
                            std::vector<std::vector<Elem>>& out) {
      auto const n = static_cast<Elem>(current.size());
      while (next < n && current[next] != n) {
        ++next;
      }
      if (next == n) {
        out.push_back(current);
        return;
      }
      for (Elem partner = next; partner < n; ++partner) {
        if (current[partner] != n) {
          continue;
        }
        current[next]    = partner;
        current[partner] = next;
        involutions(current, next + 1, out);
        current[next]    = n;
        current[partner] = n;
      }
    }

    // Reversibility restricted to triples whose entries are all assigned.
    inline bool partial_reversible(HypergroupTable const&   t,
                                   std::vector<bool> const& known) {
      auto const n  = t.order;
      auto       ok = [&](Elem x, Elem y) { return known[x * n + y]; };
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (!ok(b, c)) {
            continue;
          }
          for (auto a : t.sum(b, c)) {
            Elem const nb = t.neg[b];
            if (ok(nb, a) && !t.sum(nb, a).contains(c)) {
              return false;
            }
            Elem const nc = t.neg[c];
            if (ok(a, nc) && !t.sum(a, nc).contains(b)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // Every canonical hypergroup on {0, ..., order - 1} with 0 as identity, in
  // a deterministic order. Search fixes the negation involution first, then
  // fills the symmetric table pair by pair, pruning on reversibility; each
  // completed table is re-verified in full.
  inline std::vector<HypergroupTable> enumerate_canonical_hypergroups(
      std::size_t order) {
    if (order == 0) {
      throw InvalidInput("order must be positive");
    }
    if (order > 5) {
      throw BoundExceeded("canonical hypergroup search is capped at order 5");
    }
    std::vector<HypergroupTable> out;
    auto const                   n = static_cast<Elem>(order);

    std::vector<std::vector<Elem>> negs;
    std::vector<Elem>              start(n, n);
    start[0] = 0;
    detail::involutions(start, 1, negs);

    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem a = 1; a < n; ++a) {
      for (Elem b = a; b < n; ++b) {
        pairs.emplace_back(a, b);
      }
    }
    std::uint64_t const nonzero = ElementSet::mask(n) & ~std::uint64_t{1};

    for (auto const& neg : negs) {
      HypergroupTable t;
      t.order = n;
      t.neg   = neg;
      t.add.assign(n * n, 0);
      std::vector<bool> known(n * n, false);
      for (Elem a = 0; a < n; ++a) {
        t.add[a * n] = t.add[a] = std::uint64_t{1} << a;
        known[a * n] = known[a] = true;
      }

      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == pairs.size()) {
          if (verify_canonical_hypergroup(t).ok()) {
            out.push_back(t);
          }
          return;
        }
        auto const [a, b] = pairs[k];
        std::uint64_t const zero_bit = (neg[a] == b) ? 1 : 0;
        // Enumerate subsets of the nonzero elements; 0 is present exactly
        // when b is the negative of a.
        std::uint64_t sub = 0;
        while (true) {
          std::uint64_t const bits = sub | zero_bit;
          if (bits != 0) {
            t.add[a * n + b] = t.add[b * n + a] = bits;
            known[a * n + b] = known[b * n + a] = true;
            if (detail::partial_reversible(t, known)) {
              fill(k + 1);
            }
            known[a * n + b] = known[b * n + a] = false;
          }
          if (sub == nonzero) {
            break;
          }
          sub = (sub - nonzero) & nonzero;
        }
        t.add[a * n + b] = t.add[b * n + a] = 0;
      };
      fill(0);
    }
    return out;
  }

}  // namespace khr

#endif  // KHR_HYPERGROUP_HPP_
