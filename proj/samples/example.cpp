// Prim(Z_n) for small n, with the closed points marked.

#include <iostream>

#include "khr/khr.hpp"

int main() {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto const r = khr::HyperRing::checked(khr::cyclic_ring(n));
    auto const l = khr::build_lattice(r);
    auto const x = khr::SpectrumSpace::build(l);
    std::cout << r.name() << ":";
    for (std::size_t p = 0; p < x.size(); ++p) {
      bool const closed = x.closure(x.single(p)) == x.single(p);
      std::cout << ' ' << x.points()[p].members().to_string() << (closed ? "*" : "");
    }
    std::cout << "  nil radical " << khr::nil_radical(l).members().to_string() << '\n';
  }
}
