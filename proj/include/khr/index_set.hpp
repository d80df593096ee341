#ifndef KHR_INDEX_SET_HPP_
#define KHR_INDEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "error.hpp"

namespace khr {

  using Elem = std::uint32_t;

  // Largest universe an IndexSet can describe (one machine word).
  inline constexpr std::size_t kMaxUniverse = 64;

  // A subset of {0, ..., universe - 1} stored as a single 64-bit word.
  //
  // The Tag parameter keeps sets of ring elements and sets of spectrum points
  // from being mixed up. Binary operations between sets over different
  // universes throw CarrierMismatch.
  template <typename Tag>
  class IndexSet {
   public:
    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = Elem;
      using difference_type   = std::ptrdiff_t;
      using pointer           = Elem const*;
      using reference         = Elem;

      const_iterator() = default;
      explicit const_iterator(std::uint64_t rest) : _rest(rest) {}

      Elem operator*() const {
        return static_cast<Elem>(std::countr_zero(_rest));
      }
      const_iterator& operator++() {
        _rest &= _rest - 1;
        return *this;
      }
      const_iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
      }
      bool operator==(const_iterator const&) const = default;

     private:
      std::uint64_t _rest = 0;
    };

    IndexSet() = default;

    explicit IndexSet(std::size_t universe) : _universe(checked(universe)) {}

    IndexSet(std::size_t universe, std::initializer_list<Elem> members)
        : IndexSet(universe) {
      for (auto m : members) {
        insert(m);
      }
    }

    static IndexSet from_bits(std::size_t universe, std::uint64_t bits) {
      IndexSet s(universe);
      if ((bits & ~mask(universe)) != 0) {
        throw CarrierMismatch("bit pattern exceeds a universe of size "
                              + std::to_string(universe));
      }
      s._bits = bits;
      return s;
    }

    static IndexSet full(std::size_t universe) {
      return from_bits(universe, mask(universe));
    }

    static IndexSet singleton(std::size_t universe, Elem e) {
      IndexSet s(universe);
      s.insert(e);
      return s;
    }

    std::size_t universe() const noexcept {
      return _universe;
    }

    // Canonical integer key; orders sets by their bit pattern.
    std::uint64_t bits() const noexcept {
      return _bits;
    }

    bool contains(Elem e) const noexcept {
      return e < _universe && ((_bits >> e) & 1U) != 0;
    }

    void insert(Elem e) {
      check_member(e);
      _bits |= std::uint64_t{1} << e;
    }

    void erase(Elem e) {
      check_member(e);
      _bits &= ~(std::uint64_t{1} << e);
    }

    bool empty() const noexcept {
      return _bits == 0;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    bool is_full() const noexcept {
      return _bits == mask(_universe);
    }

    IndexSet complement() const {
      return from_bits(_universe, ~_bits & mask(_universe));
    }

    bool subset_of(IndexSet const& that) const {
      same_universe(that);
      return (_bits & ~that._bits) == 0;
    }

    bool intersects(IndexSet const& that) const {
      same_universe(that);
      return (_bits & that._bits) != 0;
    }

    IndexSet& operator|=(IndexSet const& that) {
      same_universe(that);
      _bits |= that._bits;
      return *this;
    }
    IndexSet& operator&=(IndexSet const& that) {
      same_universe(that);
      _bits &= that._bits;
      return *this;
    }
    IndexSet& operator-=(IndexSet const& that) {
      same_universe(that);
      _bits &= ~that._bits;
      return *this;
    }

    friend IndexSet operator|(IndexSet a, IndexSet const& b) {
      return a |= b;
    }
    friend IndexSet operator&(IndexSet a, IndexSet const& b) {
      return a &= b;
    }
    friend IndexSet operator-(IndexSet a, IndexSet const& b) {
      return a -= b;
    }

    friend bool operator==(IndexSet const&, IndexSet const&) = default;
    friend auto operator<=>(IndexSet const& a, IndexSet const& b) {
      if (auto c = a._universe <=> b._universe; c != 0) {
        return c;
      }
      return a._bits <=> b._bits;
    }

    const_iterator begin() const noexcept {
      return const_iterator(_bits);
    }
    const_iterator end() const noexcept {
      return const_iterator(0);
    }

    // Smallest member; undefined for the empty set.
    Elem front() const noexcept {
      return static_cast<Elem>(std::countr_zero(_bits));
    }

    std::vector<Elem> to_vector() const {
      return {begin(), end()};
    }

    std::string to_string() const {
      std::string out = "{";
      bool        first = true;
      for (auto e : *this) {
        if (!first) {
          out += ",";
        }
        out += std::to_string(e);
        first = false;
      }
      return out + "}";
    }

    static constexpr std::uint64_t mask(std::size_t universe) noexcept {
      return universe >= 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << universe) - 1;
    }

   private:
    static std::size_t checked(std::size_t universe) {
      if (universe > kMaxUniverse) {
        throw BoundExceeded("index sets hold at most 64 members, got universe "
                            + std::to_string(universe));
      }
      return universe;
    }

    void check_member(Elem e) const {
      if (e >= _universe) {
        throw CarrierMismatch("element " + std::to_string(e)
                              + " outside a universe of size "
                              + std::to_string(_universe));
      }
    }

    void same_universe(IndexSet const& that) const {
      if (_universe != that._universe) {
        throw CarrierMismatch("set operands over universes of size "
                              + std::to_string(_universe) + " and "
                              + std::to_string(that._universe));
      }
    }

    std::uint64_t _bits     = 0;
    std::size_t   _universe = 0;
  };

  struct ElementTag {};
  struct PointTag {};

  // Subset of a carrier (ring or module elements).
  using ElementSet = IndexSet<ElementTag>;
  // Subset of the points of a spectrum.
  using PointSet = IndexSet<PointTag>;

  // Calls f on every subset of `universe` whose bits lie inside `within`.
  template <typename Tag, typename F>
  void for_each_subset(IndexSet<Tag> const& within, F&& f) {
    std::uint64_t const all = within.bits();
    std::uint64_t       sub = 0;
    while (true) {
      f(IndexSet<Tag>::from_bits(within.universe(), sub));
      if (sub == all) {
        break;
      }
      sub = (sub - all) & all;
    }
  }

}  // namespace khr

#endif  // KHR_INDEX_SET_HPP_
