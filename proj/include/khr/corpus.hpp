#ifndef KHR_CORPUS_HPP_
#define KHR_CORPUS_HPP_

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "hypergroup.hpp"
#include "hyperring.hpp"
#include "parallel.hpp"

namespace khr {

  inline constexpr std::size_t kCorpusDefaultOrder = 4;
  inline constexpr std::size_t kCorpusHardCap      = 4;

  enum class Dedupe { none, isomorphism };

  inline std::string_view to_string(Dedupe d) noexcept {
    return d == Dedupe::none ? "none" : "iso";
  }

  // Compact text encoding of the tables; equal tables give equal strings.
  inline std::string encode(RawHyperRing const& r) {
    auto const  n = r.order();
    std::string out = std::to_string(n) + ":";
    for (std::size_t i = 0; i < n * n; ++i) {
      out += std::to_string(r.additive.add[i]) + (i + 1 < n * n ? "," : ";");
    }
    for (std::size_t i = 0; i < n * n; ++i) {
      out += std::to_string(r.mul[i]) + (i + 1 < n * n ? "," : "");
    }
    return out;
  }

  // r relabelled through perm (perm[0] must be 0).
  inline RawHyperRing relabel(RawHyperRing const& r, std::vector<Elem> const& perm) {
    auto const   n = r.order();
    RawHyperRing out;
    out.name           = r.name;
    out.additive.order = n;
    out.additive.add.assign(n * n, 0);
    out.additive.neg.assign(n, 0);
    out.mul.assign(n * n, 0);
    for (Elem a = 0; a < n; ++a) {
      out.additive.neg[perm[a]] = perm[r.additive.neg[a]];
      for (Elem b = 0; b < n; ++b) {
        std::uint64_t bits = 0;
        for (auto c : r.additive.sum(a, b)) {
          bits |= std::uint64_t{1} << perm[c];
        }
        out.additive.add[perm[a] * n + perm[b]] = bits;
        out.mul[perm[a] * n + perm[b]]          = perm[r.product(a, b)];
      }
    }
    if (r.unit) {
      out.unit = perm[*r.unit];
    }
    return out;
  }

  // Least encoding over all relabellings fixing 0.
  inline std::string canonical_encoding(RawHyperRing const& r) {
    std::vector<Elem> perm(r.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::string best = encode(r);
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
      best = std::min(best, encode(relabel(r, perm)));
    }
    return best;
  }

  inline bool isomorphic(RawHyperRing const& a, RawHyperRing const& b) {
    return a.order() == b.order() && canonical_encoding(a) == canonical_encoding(b);
  }

  namespace detail {
    // Associativity and both distributive laws on triples whose products
    // are all assigned.
    inline bool partial_ring_laws(RawHyperRing const&      r,
                                  std::vector<bool> const& known) {
      auto const n = static_cast<Elem>(r.order());
      auto       k = [&](Elem a, Elem b) { return known[a * n + b]; };
      auto       all_known = [&](Elem a, ElementSet const& s, bool left) {
        for (auto x : s) {
          if (!(left ? k(a, x) : k(x, a))) {
            return false;
          }
        }
        return true;
      };
      for (Elem a = 1; a < n; ++a) {
        for (Elem b = 1; b < n; ++b) {
          if (!k(a, b)) {
            continue;
          }
          for (Elem c = 1; c < n; ++c) {
            auto const ab = r.product(a, b);
            if (k(ab, c) && k(b, c) && k(a, r.product(b, c))
                && r.product(ab, c) != r.product(a, r.product(b, c))) {
              return false;
            }
            if (!k(a, c)) {
              continue;
            }
            auto const bc = r.additive.sum(b, c);
            if (all_known(a, bc, true)) {
              ElementSet lhs(n);
              for (auto x : bc) {
                lhs.insert(r.product(a, x));
              }
              if (lhs != r.additive.sum(ab, r.product(a, c))) {
                return false;
              }
            }
          }
        }
      }
      for (Elem a = 1; a < n; ++a) {
        for (Elem b = 1; b < n; ++b) {
          for (Elem c = 1; c < n; ++c) {
            if (!k(b, a) || !k(c, a)) {
              continue;
            }
            auto const bc = r.additive.sum(b, c);
            if (all_known(a, bc, false)) {
              ElementSet lhs(n);
              for (auto x : bc) {
                lhs.insert(r.product(x, a));
              }
              if (lhs != r.additive.sum(r.product(b, a), r.product(c, a))) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // Every multiplication making `t` a Krasner hyperring, in lexicographic
  // order of the product table. Each result passes the full axiom check.
  inline std::vector<RawHyperRing> enumerate_multiplications(HypergroupTable const& t) {
    auto const   n = static_cast<Elem>(t.order);
    RawHyperRing r;
    r.additive = t;
    r.mul.assign(n * n, 0);
    std::vector<bool> known(n * n, false);
    std::vector<std::size_t> cells;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a == 0 || b == 0) {
          known[a * n + b] = true;
        } else {
          cells.push_back(a * n + b);
        }
      }
    }
    std::vector<RawHyperRing> out;
    auto search = [&](auto&& self, std::size_t i) -> void {
      if (i == cells.size()) {
        if (verify_all(r).ok()) {
          out.push_back(r);
        }
        return;
      }
      known[cells[i]] = true;
      for (Elem v = 0; v < n; ++v) {
        r.mul[cells[i]] = v;
        if (detail::partial_ring_laws(r, known)) {
          self(self, i + 1);
        }
      }
      known[cells[i]]  = false;
      r.mul[cells[i]]  = 0;
    };
    search(search, 0);
    return out;
  }

  inline std::string sha256_hex(std::string const& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int                               len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr)
        != 1) {
      throw Error("SHA-256 digest failed");
    }
    static char const hex[] = "0123456789abcdef";
    std::string       out;
    for (unsigned int i = 0; i < len; ++i) {
      out += hex[digest[i] >> 4];
      out += hex[digest[i] & 0xF];
    }
    return out;
  }

  struct CorpusOptions {
    std::size_t order_bound = kCorpusDefaultOrder;
    Dedupe      dedupe      = Dedupe::none;
    std::size_t threads     = 1;
  };

  struct Corpus {
    std::size_t            order_bound = 0;
    Dedupe                 dedupe      = Dedupe::none;
    std::vector<HyperRing> rings;
    std::string            fingerprint;

    std::vector<HyperRing> of_order(std::size_t n) const {
      std::vector<HyperRing> out;
      for (auto const& r : rings) {
        if (r.order() == n) {
          out.push_back(r);
        }
      }
      return out;
    }
  };

  // All validated hyperrings on at most options.order_bound elements,
  // ordered by order, then hypergroup, then product table. Rings are named
  // "H<order>.<index>". The fingerprint hashes the parameters and the table
  // encodings, so it does not depend on the thread count.
  inline Corpus generate_corpus(CorpusOptions const& options) {
    if (options.order_bound == 0) {
      throw InvalidInput("order bound must be positive");
    }
    if (options.order_bound > kCorpusHardCap) {
      throw BoundExceeded("corpus order is capped at "
                          + std::to_string(kCorpusHardCap));
    }
    Corpus out;
    out.order_bound = options.order_bound;
    out.dedupe      = options.dedupe;
    std::string fingerprint_input = "khr-corpus/1 order<="
                                    + std::to_string(options.order_bound)
                                    + " dedupe=" + std::string(to_string(options.dedupe))
                                    + "\n";
    for (std::size_t n = 1; n <= options.order_bound; ++n) {
      auto const groups = enumerate_canonical_hypergroups(n);
      auto const found  = parallel_map(groups.size(), options.threads, [&](std::size_t i) {
        return enumerate_multiplications(groups[i]);
      });
      std::set<std::string> seen;
      std::size_t           index = 0;
      for (auto const& batch : found) {
        for (auto raw : batch) {
          if (options.dedupe == Dedupe::isomorphism
              && !seen.insert(canonical_encoding(raw)).second) {
            continue;
          }
          raw.name = "H" + std::to_string(n) + "." + std::to_string(index++);
          fingerprint_input += encode(raw) + "\n";
          out.rings.push_back(HyperRing::checked(std::move(raw)));
        }
      }
    }
    out.fingerprint = sha256_hex(fingerprint_input);
    return out;
  }

}  // namespace khr

#endif  // KHR_CORPUS_HPP_
