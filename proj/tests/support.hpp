#ifndef KHR_TESTS_SUPPORT_HPP_
#define KHR_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "khr/khr.hpp"

namespace test {

  inline khr::ElementSet set(std::size_t n, std::initializer_list<khr::Elem> m) {
    return khr::ElementSet(n, m);
  }

  inline khr::HyperRing ring(khr::RawHyperRing raw) {
    return khr::HyperRing::checked(std::move(raw));
  }

  inline khr::HyperRing z(std::size_t n) {
    return ring(khr::cyclic_ring(n));
  }

  inline khr::HyperRing krasner() {
    return ring(khr::krasner_hyperfield());
  }

  // Z2 with the zero product.
  inline khr::HyperRing z2_zero() {
    auto raw = khr::cyclic_ring(2);
    raw.name = "Z2zero";
    raw.mul  = {0, 0, 0, 0};
    raw.unit.reset();
    return ring(raw);
  }

  inline std::vector<khr::ElementSet> members(std::vector<khr::HyperIdeal> const& v) {
    std::vector<khr::ElementSet> out;
    for (auto const& i : v) {
      out.push_back(i.members());
    }
    return out;
  }

  // Shared corpora; generated once per process.
  inline khr::Corpus const& corpus(std::size_t order) {
    if (order <= 3) {
      static khr::Corpus const c3 = khr::generate_corpus({3, khr::Dedupe::none, 4});
      return c3;
    }
    static khr::Corpus const c4 = khr::generate_corpus({4, khr::Dedupe::none, 4});
    return c4;
  }

  inline std::string samples_dir() {
    return KHR_SAMPLES_DIR;
  }

}  // namespace test

#endif  // KHR_TESTS_SUPPORT_HPP_
