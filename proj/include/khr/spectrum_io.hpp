#ifndef KHR_SPECTRUM_IO_HPP_
#define KHR_SPECTRUM_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "ideals.hpp"
#include "spectrum.hpp"

namespace khr {

  // Specialization order: p -> q whenever q lies in the closure of {p}.
  inline std::vector<std::pair<std::size_t, std::size_t>> specialization_edges(
      SpectrumSpace const& x) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < x.size(); ++p) {
      for (auto q : x.closure(x.single(p))) {
        if (q != p) {
          out.emplace_back(p, q);
        }
      }
    }
    return out;
  }

  inline std::string to_dot(SpectrumSpace const& x) {
    std::string out = "digraph \"Prim(" + x.ring().name() + ")\" {\n";
    for (std::size_t p = 0; p < x.size(); ++p) {
      out += "  p" + std::to_string(p) + " [label=\""
             + x.points()[p].members().to_string() + "\"];\n";
    }
    for (auto [p, q] : specialization_edges(x)) {
      out += "  p" + std::to_string(p) + " -> p" + std::to_string(q) + ";\n";
    }
    return out + "}\n";
  }

  inline nlohmann::ordered_json to_json(SpectrumSpace const& x,
                                        IdealLattice const* l = nullptr) {
    using nlohmann::ordered_json;
    ordered_json points = ordered_json::array();
    for (std::size_t p = 0; p < x.size(); ++p) {
      ordered_json e{{"index", p},
                     {"members", x.points()[p].members().to_vector()},
                     {"closure", x.closure(x.single(p)).to_vector()}};
      if (l != nullptr) {
        e["maximal"] = std::find(l->maximal.begin(), l->maximal.end(), x.points()[p])
                       != l->maximal.end();
      }
      points.push_back(std::move(e));
    }
    ordered_json edges = ordered_json::array();
    for (auto [p, q] : specialization_edges(x)) {
      edges.push_back({p, q});
    }
    ordered_json j{{"ring", x.ring().name()},
                   {"points", std::move(points)},
                   {"specialization", std::move(edges)}};
    if (x.materialized()) {
      ordered_json closed = ordered_json::array();
      for (auto const& c : x.closed_sets()) {
        closed.push_back(c.to_vector());
      }
      j["closed_sets"] = std::move(closed);
    }
    j["T0"] = is_T0(x);
    j["T1"] = is_T1(x);
    ordered_json minimal = ordered_json::array();
    for (auto i : minimal_points(x)) {
      minimal.push_back(i);
    }
    j["minimal_points"] = std::move(minimal);
    return j;
  }

}  // namespace khr

#endif  // KHR_SPECTRUM_IO_HPP_
