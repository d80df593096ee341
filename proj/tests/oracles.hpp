#ifndef KHR_TESTS_ORACLES_HPP_
#define KHR_TESTS_ORACLES_HPP_

// Naive reference implementations used only by the tests. Nothing here
// calls into the library except to read raw tables.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "khr/khr.hpp"

namespace oracle {

  using Set = std::set<int>;

  struct Ring {
    int                           n = 1;
    std::vector<std::vector<Set>> add;
    std::vector<int>              neg;
    std::vector<std::vector<int>> mul;
  };

  inline Ring from_raw(khr::RawHyperRing const& r) {
    Ring o;
    o.n = static_cast<int>(r.order());
    o.add.assign(o.n, std::vector<Set>(o.n));
    o.mul.assign(o.n, std::vector<int>(o.n, 0));
    o.neg.assign(o.n, 0);
    for (int a = 0; a < o.n; ++a) {
      o.neg[a] = r.additive.neg[a];
      for (int b = 0; b < o.n; ++b) {
        for (int c = 0; c < o.n; ++c) {
          if ((r.additive.add[a * o.n + b] >> c) & 1U) {
            o.add[a][b].insert(c);
          }
        }
        o.mul[a][b] = r.mul[a * o.n + b];
      }
    }
    return o;
  }

  // Z_n from modular arithmetic.
  inline Ring zn(int n) {
    Ring o;
    o.n = n;
    o.add.assign(n, std::vector<Set>(n));
    o.mul.assign(n, std::vector<int>(n));
    o.neg.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      o.neg[a] = (n - a) % n;
      for (int b = 0; b < n; ++b) {
        o.add[a][b] = {(a + b) % n};
        o.mul[a][b] = (a * b) % n;
      }
    }
    return o;
  }

  inline Set sum(Ring const& r, Set const& x, Set const& y) {
    Set out;
    for (int a : x) {
      for (int b : y) {
        out.insert(r.add[a][b].begin(), r.add[a][b].end());
      }
    }
    return out;
  }

  inline Set all(Ring const& r) {
    Set s;
    for (int i = 0; i < r.n; ++i) {
      s.insert(i);
    }
    return s;
  }

  inline bool subset(Set const& a, Set const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  inline bool hypergroup_ok(Ring const& r) {
    for (int a = 0; a < r.n; ++a) {
      if (r.add[a][0] != Set{a} || r.add[0][a] != Set{a}) {
        return false;
      }
      for (int b = 0; b < r.n; ++b) {
        if (r.add[a][b].empty() || r.add[a][b] != r.add[b][a]) {
          return false;
        }
        for (int c = 0; c < r.n; ++c) {
          if (sum(r, sum(r, {a}, {b}), {c}) != sum(r, {a}, sum(r, {b}, {c}))) {
            return false;
          }
          if (r.add[b][c].count(a) && !r.add[r.neg[b]][a].count(c)) {
            return false;
          }
        }
      }
      int zeros = 0;
      for (int b = 0; b < r.n; ++b) {
        zeros += r.add[a][b].count(0) ? 1 : 0;
      }
      if (zeros != 1 || !r.add[a][r.neg[a]].count(0)) {
        return false;
      }
    }
    return true;
  }

  inline bool ring_ok(Ring const& r) {
    if (!hypergroup_ok(r)) {
      return false;
    }
    for (int a = 0; a < r.n; ++a) {
      if (r.mul[a][0] != 0 || r.mul[0][a] != 0) {
        return false;
      }
      for (int b = 0; b < r.n; ++b) {
        for (int c = 0; c < r.n; ++c) {
          if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]]) {
            return false;
          }
          Set left, right;
          for (int s : r.add[b][c]) {
            left.insert(r.mul[a][s]);
            right.insert(r.mul[s][a]);
          }
          if (left != r.add[r.mul[a][b]][r.mul[a][c]]
              || right != r.add[r.mul[b][a]][r.mul[c][a]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::vector<Set> subsets_with_zero(int n) {
    std::vector<Set> out;
    for (unsigned bits = 0; bits < (1U << n); ++bits) {
      if (bits & 1U) {
        Set s;
        for (int i = 0; i < n; ++i) {
          if ((bits >> i) & 1U) {
            s.insert(i);
          }
        }
        out.push_back(s);
      }
    }
    return out;
  }

  inline bool additive_closed(Ring const& r, Set const& s) {
    for (int a : s) {
      for (int b : s) {
        if (!subset(r.add[a][r.neg[b]], s)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_right_ideal(Ring const& r, Set const& s) {
    if (!additive_closed(r, s)) {
      return false;
    }
    for (int a : s) {
      for (int x = 0; x < r.n; ++x) {
        if (!s.count(r.mul[a][x])) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_ideal(Ring const& r, Set const& s) {
    if (!is_right_ideal(r, s)) {
      return false;
    }
    for (int a : s) {
      for (int x = 0; x < r.n; ++x) {
        if (!s.count(r.mul[x][a])) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Set> ideals(Ring const& r) {
    std::vector<Set> out;
    for (auto const& s : subsets_with_zero(r.n)) {
      if (is_ideal(r, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline std::vector<Set> right_ideals(Ring const& r) {
    std::vector<Set> out;
    for (auto const& s : subsets_with_zero(r.n)) {
      if (is_right_ideal(r, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline std::vector<Set> maximal_among(std::vector<Set> const& v, int n) {
    std::vector<Set> out;
    for (auto const& a : v) {
      if (static_cast<int>(a.size()) == n) {
        continue;
      }
      bool top = true;
      for (auto const& b : v) {
        if (b != a && static_cast<int>(b.size()) != n && subset(a, b)) {
          top = false;
        }
      }
      if (top) {
        out.push_back(a);
      }
    }
    return out;
  }

  // Finite sums of products ab with a in x, b in y, closed to an ideal.
  inline Set product_ideal(Ring const& r, Set const& x, Set const& y) {
    Set s{0};
    for (int a : x) {
      for (int b : y) {
        s.insert(r.mul[a][b]);
      }
    }
    Set best = all(r);
    for (auto const& c : ideals(r)) {
      if (subset(s, c) && c.size() < best.size()) {
        best = c;
      }
    }
    return best;
  }

  inline std::vector<Set> primes(Ring const& r) {
    auto const       id = ideals(r);
    std::vector<Set> out;
    for (auto const& p : id) {
      if (static_cast<int>(p.size()) == r.n) {
        continue;
      }
      bool prime = true;
      for (auto const& a : id) {
        for (auto const& b : id) {
          if (subset(product_ideal(r, a, b), p) && !subset(a, p) && !subset(b, p)) {
            prime = false;
          }
        }
      }
      if (prime) {
        out.push_back(p);
      }
    }
    return out;
  }

  // {r : xr in m for every x}, for maximal right m with R^2 not inside m.
  inline std::vector<Set> prim(Ring const& r) {
    std::set<Set> out;
    Set           squares;
    for (int a = 0; a < r.n; ++a) {
      for (int b = 0; b < r.n; ++b) {
        squares.insert(r.mul[a][b]);
      }
    }
    for (auto const& m : maximal_among(right_ideals(r), r.n)) {
      if (subset(squares, m)) {
        continue;
      }
      Set p;
      for (int y = 0; y < r.n; ++y) {
        bool in = true;
        for (int x = 0; x < r.n; ++x) {
          in = in && m.count(r.mul[x][y]);
        }
        if (in) {
          p.insert(y);
        }
      }
      out.insert(p);
    }
    return {out.begin(), out.end()};
  }

  // Points containing the intersection of s; the empty family has no points.
  inline std::set<int> closure(std::vector<Set> const& points, std::set<int> const& s) {
    if (s.empty()) {
      return {};
    }
    Set k = points[*s.begin()];
    for (int i : s) {
      Set t;
      std::set_intersection(k.begin(), k.end(), points[i].begin(), points[i].end(),
                            std::inserter(t, t.begin()));
      k = t;
    }
    std::set<int> out;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      if (subset(k, points[i])) {
        out.insert(i);
      }
    }
    return out;
  }

  // Every map f with f(0) = 0, f(a + b) = f(a) + f(b) as sets, f(ab) = f(a)f(b).
  inline std::vector<std::vector<int>> homs(Ring const& r, Ring const& s) {
    std::vector<std::vector<int>> out;
    std::vector<int>              f(r.n, 0);
    std::function<void(int)>      go = [&](int i) {
      if (i == r.n) {
        for (int a = 0; a < r.n; ++a) {
          for (int b = 0; b < r.n; ++b) {
            Set img;
            for (int c : r.add[a][b]) {
              img.insert(f[c]);
            }
            if (img != s.add[f[a]][f[b]] || f[r.mul[a][b]] != s.mul[f[a]][f[b]]) {
              return;
            }
          }
        }
        out.push_back(f);
        return;
      }
      for (int v = 0; v < s.n; ++v) {
        f[i] = v;
        go(i + 1);
      }
    };
    go(1);
    return out;
  }

  // Canonical hypergroups on n labeled elements with 0 as identity, found by
  // trying every symmetric table and every negation map.
  inline std::vector<Ring> hypergroups(int n) {
    std::vector<Ring>                out;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        pairs.emplace_back(a, b);
      }
    }
    std::vector<int> neg(n, 0);
    std::function<void(int)> negs = [&](int i) {
      if (i == n) {
        Ring r;
        r.n   = n;
        r.neg = neg;
        r.add.assign(n, std::vector<Set>(n));
        r.mul.assign(n, std::vector<int>(n, 0));
        for (int a = 0; a < n; ++a) {
          r.add[a][0] = r.add[0][a] = {a};
        }
        std::function<void(std::size_t)> fill = [&](std::size_t k) {
          if (k == pairs.size()) {
            if (hypergroup_ok(r)) {
              out.push_back(r);
            }
            return;
          }
          auto [a, b] = pairs[k];
          for (unsigned bits = 1; bits < (1U << n); ++bits) {
            Set s;
            for (int c = 0; c < n; ++c) {
              if ((bits >> c) & 1U) {
                s.insert(c);
              }
            }
            r.add[a][b] = r.add[b][a] = s;
            fill(k + 1);
          }
        };
        fill(0);
        return;
      }
      for (int v = 1; v < n; ++v) {
        neg[i] = v;
        negs(i + 1);
      }
    };
    // Any map works as a candidate; hypergroup_ok rejects non-inverses.
    negs(1);
    return out;
  }

  // Every multiplication with 0 absorbing that makes a hyperring.
  inline std::size_t count_rings(Ring const& g) {
    int const        n = g.n;
    std::size_t      count = 0;
    Ring             r     = g;
    std::vector<std::pair<int, int>> cells;
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        cells.emplace_back(a, b);
      }
    }
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == cells.size()) {
        count += ring_ok(r) ? 1 : 0;
        return;
      }
      for (int v = 0; v < n; ++v) {
        r.mul[cells[k].first][cells[k].second] = v;
        go(k + 1);
      }
    };
    go(0);
    return count;
  }

}  // namespace oracle

#endif  // KHR_TESTS_ORACLES_HPP_
