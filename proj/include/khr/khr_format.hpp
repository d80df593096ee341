#ifndef KHR_KHR_FORMAT_HPP_
#define KHR_KHR_FORMAT_HPP_

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "hypermodule.hpp"
#include "hyperring.hpp"
#include "ring_hom.hpp"

namespace khr {

  // Line-oriented text format for rings, modules and homomorphisms.
  //
  //   ring <name>            module <name> over <ring>    hom <name> : <ring> -> <ring>
  //   order <n>              order <n>                    unit-preserving
  //   unit <i>               unital                       map <i> : <j>
  //   symmetric              symmetric                    end
  //   add <i> <j> : <k...>   madd <i> <j> : <k...>
  //   neg <i> : <j>          mneg <i> : <j>
  //   mul <i> <j> : <k>      act <m> <r> : <k>
  //   end                    end
  //
  // '#' starts a comment. With `symmetric`, each add (madd) entry also
  // defines its mirror.

  enum class Severity { error, warning };

  struct Diagnostic {
    std::size_t line   = 0;
    std::size_t column = 0;
    Severity    severity = Severity::error;
    std::string message;

    std::string format(std::string const& path) const {
      return path + ":" + std::to_string(line) + ":" + std::to_string(column)
             + ": " + (severity == Severity::error ? "error" : "warning") + ": "
             + message;
    }
  };

  struct RingDecl {
    std::size_t  line = 0;
    RawHyperRing raw;
  };

  struct ModuleDecl {
    std::size_t       line = 0;
    std::string       name;
    std::string       ring;
    HypergroupTable   additive;
    std::vector<Elem> act;
    bool              unital = false;
  };

  struct HomDecl {
    std::size_t       line = 0;
    std::string       name;
    std::string       source;
    std::string       target;
    std::vector<Elem> map;
    bool              unit_preserving = false;
  };

  struct SourceFile {
    std::string             path;
    std::vector<RingDecl>   rings;
    std::vector<ModuleDecl> modules;
    std::vector<HomDecl>    homs;
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept {
      for (auto const& d : diagnostics) {
        if (d.severity == Severity::error) {
          return false;
        }
      }
      return true;
    }

    std::string diagnostics_text() const {
      std::string out;
      for (auto const& d : diagnostics) {
        out += d.format(path) + "\n";
      }
      return out;
    }

    RingDecl const* find_ring(std::string_view name) const {
      for (auto const& r : rings) {
        if (r.raw.name == name) {
          return &r;
        }
      }
      return nullptr;
    }
  };

  namespace detail {
    struct Token {
      std::string text;
      std::size_t column = 0;
    };

    inline std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        char const c = line[i];
        if (c == '#') {
          break;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
          ++i;
          continue;
        }
        if (c == ':') {
          out.push_back({":", i + 1});
          ++i;
          continue;
        }
        if (line.substr(i, 2) == "->") {
          out.push_back({"->", i + 1});
          i += 2;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r'
               && line[j] != ':' && line[j] != '#' && line.substr(j, 2) != "->") {
          ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
      }
      return out;
    }

    enum class Block { none, ring, module, hom };

    class Parser {
     public:
      explicit Parser(SourceFile& file) : _file(file) {}

      void line(std::size_t number, std::string_view text) {
        _line = number;
        auto toks = tokenize(text);
        if (toks.empty()) {
          return;
        }
        auto const& key = toks[0].text;
        switch (_block) {
          case Block::none:
            top_level(toks);
            return;
          case Block::ring:
            ring_line(key, toks);
            return;
          case Block::module:
            module_line(key, toks);
            return;
          case Block::hom:
            hom_line(key, toks);
            return;
        }
      }

      void finish(std::size_t last_line) {
        if (_block != Block::none) {
          _line = last_line;
          error(1, "missing 'end' for block opened on line "
                       + std::to_string(_open_line));
        }
      }

     private:
      void error(std::size_t column, std::string message) {
        _file.diagnostics.push_back({_line, column, Severity::error, std::move(message)});
      }

      std::optional<std::size_t> number(Token const& t) {
        std::size_t v   = 0;
        auto const* end = t.text.data() + t.text.size();
        auto [p, ec]    = std::from_chars(t.text.data(), end, v);
        if (ec != std::errc{} || p != end) {
          error(t.column, "expected a number, found '" + t.text + "'");
          return std::nullopt;
        }
        return v;
      }

      std::optional<Elem> element(Token const& t) {
        auto v = number(t);
        if (!v) {
          return std::nullopt;
        }
        if (_order == 0) {
          error(t.column, "'order' must come before table entries");
          return std::nullopt;
        }
        if (*v >= _order) {
          error(t.column, "element " + t.text + " out of range for order "
                              + std::to_string(_order));
          return std::nullopt;
        }
        return static_cast<Elem>(*v);
      }

      std::optional<Elem> element_of(Token const& t, std::size_t order, char const* what) {
        auto v = number(t);
        if (!v) {
          return std::nullopt;
        }
        if (*v >= order) {
          error(t.column, std::string(what) + " element " + t.text
                              + " out of range for order " + std::to_string(order));
          return std::nullopt;
        }
        return static_cast<Elem>(*v);
      }

      bool expect_count(std::vector<Token> const& toks, std::size_t n, std::string const& form) {
        if (toks.size() != n) {
          error(toks[0].column, "expected '" + form + "'");
          return false;
        }
        return true;
      }

      // Checks "<key> <args...> :" and returns the index after the colon.
      std::optional<std::size_t> colon_at(std::vector<Token> const& toks,
                                          std::size_t               pos,
                                          std::string const&        form) {
        if (toks.size() <= pos || toks[pos].text != ":") {
          error(toks.size() > pos ? toks[pos].column : toks.back().column,
                "expected '" + form + "'");
          return std::nullopt;
        }
        return pos + 1;
      }

      void top_level(std::vector<Token> const& toks) {
        auto const& key = toks[0].text;
        _open_line      = _line;
        _open_errors    = _file.diagnostics.size();
        _order          = 0;
        _symmetric      = false;
        if (key == "ring") {
          if (!expect_count(toks, 2, "ring <name>")) {
            return;
          }
          if (_file.find_ring(toks[1].text) != nullptr) {
            error(toks[1].column, "duplicate ring name '" + toks[1].text + "'");
          }
          _ring      = RingDecl{_line, {}};
          _ring.raw.name = toks[1].text;
          _block     = Block::ring;
        } else if (key == "module") {
          if (toks.size() != 4 || toks[2].text != "over") {
            error(toks[0].column, "expected 'module <name> over <ring>'");
            return;
          }
          _module      = ModuleDecl{_line, toks[1].text, toks[3].text, {}, {}, false};
          _module_ring = _file.find_ring(toks[3].text);
          if (_module_ring == nullptr) {
            error(toks[3].column, "unknown ring '" + toks[3].text + "'");
          }
          _block = Block::module;
        } else if (key == "hom") {
          if (toks.size() != 6 || toks[2].text != ":" || toks[4].text != "->") {
            error(toks[0].column, "expected 'hom <name> : <ring> -> <ring>'");
            return;
          }
          _hom        = HomDecl{_line, toks[1].text, toks[3].text, toks[5].text, {}, false};
          _hom_source = _file.find_ring(toks[3].text);
          _hom_target = _file.find_ring(toks[5].text);
          if (_hom_source == nullptr) {
            error(toks[3].column, "unknown ring '" + toks[3].text + "'");
          }
          if (_hom_target == nullptr) {
            error(toks[5].column, "unknown ring '" + toks[5].text + "'");
          }
          if (_hom_source != nullptr) {
            _hom_seen.assign(_hom_source->raw.order(), false);
            _hom.map.assign(_hom_source->raw.order(), 0);
          }
          _block = Block::hom;
        } else {
          error(toks[0].column, "unknown declaration '" + key + "'");
        }
      }

      void order_line(std::vector<Token> const& toks, HypergroupTable& t) {
        if (!expect_count(toks, 2, "order <n>")) {
          return;
        }
        if (_order != 0) {
          error(toks[0].column, "duplicate 'order'");
          return;
        }
        auto n = number(toks[1]);
        if (!n) {
          return;
        }
        if (*n == 0 || *n > kMaxUniverse) {
          error(toks[1].column, "order must be between 1 and 64");
          return;
        }
        _order = *n;
        t.order = _order;
        t.add.assign(_order * _order, 0);
        t.neg.assign(_order, 0);
        _add_seen.assign(_order * _order, 0);
        _neg_seen.assign(_order, false);
      }

      // add / madd: <key> i j : k...
      void sum_line(std::vector<Token> const& toks, HypergroupTable& t, std::string const& key) {
        auto after = colon_at(toks, 3, key + " <i> <j> : <k...>");
        if (!after) {
          return;
        }
        auto a = element(toks[1]);
        auto b = element(toks[2]);
        if (!a || !b) {
          return;
        }
        std::uint64_t bits = 0;
        for (auto i = *after; i < toks.size(); ++i) {
          auto c = element(toks[i]);
          if (!c) {
            return;
          }
          if ((bits >> *c) & 1U) {
            error(toks[i].column, "element " + toks[i].text + " listed twice");
            return;
          }
          bits |= std::uint64_t{1} << *c;
        }
        if (bits == 0) {
          error(toks[*after - 1].column, "hypersum must be nonempty");
          return;
        }
        auto cell = [&](Elem x, Elem y) {
          return key + " " + std::to_string(x) + " " + std::to_string(y);
        };
        auto set_cell = [&](Elem x, Elem y, bool mirror) {
          auto& seen = _add_seen[x * _order + y];
          auto& slot = t.add[x * _order + y];
          if (seen == 2 && !mirror) {
            error(toks[0].column, "duplicate entry " + cell(x, y));
          } else if (seen != 0 && slot != bits) {
            error(toks[0].column, "entry " + cell(x, y) + " contradicts its mirror");
          } else {
            slot = bits;
            seen = std::max<std::uint8_t>(seen, mirror ? 1 : 2);
          }
        };
        set_cell(*a, *b, false);
        if (_symmetric && *a != *b) {
          set_cell(*b, *a, true);
        }
      }

      void neg_line(std::vector<Token> const& toks, HypergroupTable& t, std::string const& key) {
        if (!colon_at(toks, 2, key + " <i> : <j>")) {
          return;
        }
        if (toks.size() != 4) {
          error(toks[0].column, "negation must be single-valued");
          return;
        }
        auto a = element(toks[1]);
        auto b = element(toks[3]);
        if (!a || !b) {
          return;
        }
        if (_neg_seen[*a]) {
          error(toks[0].column, "duplicate entry " + key + " " + toks[1].text);
          return;
        }
        _neg_seen[*a] = true;
        t.neg[*a]     = *b;
      }

      // Missing entries are only reported for blocks without earlier errors.
      bool clean() const {
        return _file.diagnostics.size() == _open_errors;
      }

      void check_tables(HypergroupTable const& t, std::string const& add, std::string const& neg) {
        if (!clean()) {
          return;
        }
        if (_order == 0) {
          error(1, "missing 'order'");
          return;
        }
        for (Elem a = 0; a < _order; ++a) {
          for (Elem b = 0; b < _order; ++b) {
            if (_add_seen[a * _order + b] == 0) {
              error(1, "missing entry " + add + " " + std::to_string(a) + " "
                           + std::to_string(b));
              return;
            }
          }
          if (!_neg_seen[a]) {
            error(1, "missing entry " + neg + " " + std::to_string(a));
            return;
          }
        }
        (void)t;
      }

      void ring_line(std::string const& key, std::vector<Token> const& toks) {
        auto& raw = _ring.raw;
        if (key == "order") {
          order_line(toks, raw.additive);
          if (_order != 0) {
            raw.mul.assign(_order * _order, 0);
            _mul_seen.assign(_order * _order, false);
          }
        } else if (key == "unit") {
          if (!expect_count(toks, 2, "unit <i>")) {
            return;
          }
          if (raw.unit) {
            error(toks[0].column, "duplicate 'unit'");
            return;
          }
          if (auto u = element(toks[1])) {
            raw.unit = *u;
          }
        } else if (key == "symmetric") {
          if (expect_count(toks, 1, "symmetric")) {
            _symmetric = true;
          }
        } else if (key == "add") {
          sum_line(toks, raw.additive, "add");
        } else if (key == "neg") {
          neg_line(toks, raw.additive, "neg");
        } else if (key == "mul") {
          auto after = colon_at(toks, 3, "mul <i> <j> : <k>");
          if (!after) {
            return;
          }
          if (toks.size() != *after + 1) {
            error(toks.size() == *after ? toks[*after - 1].column : toks[*after + 1].column,
                  toks.size() == *after ? "product must be nonempty"
                                        : "multiplication must be single-valued");
            return;
          }
          auto a = element(toks[1]);
          auto b = element(toks[2]);
          auto c = element(toks[*after]);
          if (!a || !b || !c) {
            return;
          }
          if (_mul_seen[*a * _order + *b]) {
            error(toks[0].column, "duplicate entry mul " + toks[1].text + " " + toks[2].text);
            return;
          }
          _mul_seen[*a * _order + *b] = true;
          raw.mul[*a * _order + *b]   = *c;
        } else if (key == "end") {
          if (!expect_count(toks, 1, "end")) {
            return;
          }
          check_tables(raw.additive, "add", "neg");
          if (_order != 0 && clean()) {
            for (std::size_t i = 0; i < _mul_seen.size(); ++i) {
              if (!_mul_seen[i]) {
                error(1, "missing entry mul " + std::to_string(i / _order) + " "
                             + std::to_string(i % _order));
                break;
              }
            }
          }
          _file.rings.push_back(std::move(_ring));
          _block = Block::none;
        } else {
          error(toks[0].column, "unknown key '" + key + "' in ring block");
        }
      }

      void module_line(std::string const& key, std::vector<Token> const& toks) {
        std::size_t const ring_order = _module_ring ? _module_ring->raw.order() : 0;
        if (key == "order") {
          order_line(toks, _module.additive);
          if (_order != 0) {
            _module.act.assign(_order * ring_order, 0);
            _act_seen.assign(_order * ring_order, false);
          }
        } else if (key == "unital") {
          if (expect_count(toks, 1, "unital")) {
            _module.unital = true;
          }
        } else if (key == "symmetric") {
          if (expect_count(toks, 1, "symmetric")) {
            _symmetric = true;
          }
        } else if (key == "madd") {
          sum_line(toks, _module.additive, "madd");
        } else if (key == "mneg") {
          neg_line(toks, _module.additive, "mneg");
        } else if (key == "act") {
          auto after = colon_at(toks, 3, "act <m> <r> : <k>");
          if (!after || _module_ring == nullptr) {
            return;
          }
          if (toks.size() != *after + 1) {
            error(toks.size() == *after ? toks[*after - 1].column : toks[*after + 1].column,
                  "action must be single-valued");
            return;
          }
          auto m = element(toks[1]);
          auto r = element_of(toks[2], ring_order, "ring");
          auto k = element(toks[*after]);
          if (!m || !r || !k) {
            return;
          }
          if (_act_seen[*m * ring_order + *r]) {
            error(toks[0].column, "duplicate entry act " + toks[1].text + " " + toks[2].text);
            return;
          }
          _act_seen[*m * ring_order + *r] = true;
          _module.act[*m * ring_order + *r] = *k;
        } else if (key == "end") {
          if (!expect_count(toks, 1, "end")) {
            return;
          }
          check_tables(_module.additive, "madd", "mneg");
          if (_order != 0 && _module_ring != nullptr && clean()) {
            for (std::size_t i = 0; i < _act_seen.size(); ++i) {
              if (!_act_seen[i]) {
                error(1, "missing entry act " + std::to_string(i / ring_order) + " "
                             + std::to_string(i % ring_order));
                break;
              }
            }
          }
          _file.modules.push_back(std::move(_module));
          _block = Block::none;
        } else {
          error(toks[0].column, "unknown key '" + key + "' in module block");
        }
      }

      void hom_line(std::string const& key, std::vector<Token> const& toks) {
        if (key == "unit-preserving") {
          if (expect_count(toks, 1, "unit-preserving")) {
            _hom.unit_preserving = true;
          }
        } else if (key == "map") {
          if (!colon_at(toks, 2, "map <i> : <j>") || _hom_source == nullptr
              || _hom_target == nullptr) {
            return;
          }
          if (toks.size() != 4) {
            error(toks[0].column, "map must be single-valued");
            return;
          }
          auto a = element_of(toks[1], _hom_source->raw.order(), "source");
          auto b = element_of(toks[3], _hom_target->raw.order(), "target");
          if (!a || !b) {
            return;
          }
          if (_hom_seen[*a]) {
            error(toks[0].column, "duplicate entry map " + toks[1].text);
            return;
          }
          _hom_seen[*a]  = true;
          _hom.map[*a]   = *b;
        } else if (key == "end") {
          if (!expect_count(toks, 1, "end")) {
            return;
          }
          for (std::size_t i = 0; i < _hom_seen.size() && clean(); ++i) {
            if (!_hom_seen[i]) {
              error(1, "missing entry map " + std::to_string(i));
              break;
            }
          }
          _file.homs.push_back(std::move(_hom));
          _block = Block::none;
        } else {
          error(toks[0].column, "unknown key '" + key + "' in hom block");
        }
      }

      SourceFile&               _file;
      Block                     _block     = Block::none;
      std::size_t               _line      = 0;
      std::size_t               _open_line = 0;
      std::size_t               _open_errors = 0;
      std::size_t               _order     = 0;
      bool                      _symmetric = false;
      std::vector<std::uint8_t> _add_seen;
      std::vector<bool>         _neg_seen;
      std::vector<bool>         _mul_seen;
      std::vector<bool>         _act_seen;
      std::vector<bool>         _hom_seen;
      RingDecl                  _ring;
      ModuleDecl                _module;
      HomDecl                   _hom;
      RingDecl const*           _module_ring = nullptr;
      RingDecl const*           _hom_source  = nullptr;
      RingDecl const*           _hom_target  = nullptr;
    };
  }  // namespace detail

  inline SourceFile parse(std::string_view text, std::string path = "<input>") {
    SourceFile file;
    file.path = std::move(path);
    detail::Parser parser(file);
    std::size_t    number = 0;
    std::size_t    start  = 0;
    while (start <= text.size()) {
      auto const end = text.find('\n', start);
      auto const len = (end == std::string_view::npos ? text.size() : end) - start;
      parser.line(++number, text.substr(start, len));
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    parser.finish(number);
    return file;
  }

  inline SourceFile parse_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidInput("cannot read '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
  }

  namespace detail {
    inline void emit_sums(std::ostringstream& out, HypergroupTable const& t,
                          char const* add, char const* neg) {
      for (Elem a = 0; a < t.order; ++a) {
        for (Elem b = 0; b < t.order; ++b) {
          out << add << ' ' << a << ' ' << b << " :";
          for (auto c : t.sum(a, b)) {
            out << ' ' << c;
          }
          out << '\n';
        }
      }
      for (Elem a = 0; a < t.order; ++a) {
        out << neg << ' ' << a << " : " << t.neg[a] << '\n';
      }
    }
  }  // namespace detail

  // Canonical text: every table entry listed once, in row-major order.
  inline std::string emit(RawHyperRing const& r) {
    std::ostringstream out;
    out << "ring " << r.name << '\n' << "order " << r.order() << '\n';
    if (r.unit) {
      out << "unit " << *r.unit << '\n';
    }
    detail::emit_sums(out, r.additive, "add", "neg");
    for (Elem a = 0; a < r.order(); ++a) {
      for (Elem b = 0; b < r.order(); ++b) {
        out << "mul " << a << ' ' << b << " : " << r.product(a, b) << '\n';
      }
    }
    out << "end\n";
    return out.str();
  }

  inline std::string emit(HyperModule const& m) {
    std::ostringstream out;
    out << "module " << m.name() << " over " << m.ring().name() << '\n'
        << "order " << m.order() << '\n';
    if (m.unital()) {
      out << "unital\n";
    }
    detail::emit_sums(out, m.additive(), "madd", "mneg");
    for (Elem x = 0; x < m.order(); ++x) {
      for (Elem a = 0; a < m.ring().order(); ++a) {
        out << "act " << x << ' ' << a << " : " << m.act(x, a) << '\n';
      }
    }
    out << "end\n";
    return out.str();
  }

  inline std::string emit(RingHom const& phi) {
    std::ostringstream out;
    out << "hom " << phi.name << " : " << phi.source.name() << " -> "
        << phi.target.name() << '\n';
    if (phi.unit_preserving) {
      out << "unit-preserving\n";
    }
    for (Elem a = 0; a < phi.map.size(); ++a) {
      out << "map " << a << " : " << phi.map[a] << '\n';
    }
    out << "end\n";
    return out.str();
  }

  // Validated objects of a parsed file. Rings failing the axioms are kept
  // out of `rings` and listed with their reports in `invalid`; modules and
  // homs over an invalid ring are skipped.
  struct Resolved {
    std::map<std::string, HyperRing>                                rings;
    std::vector<std::string>                                        ring_order;
    std::vector<std::pair<std::string, VerificationReport>>         ring_reports;
    std::vector<std::string>                                        invalid;
    std::vector<std::pair<HyperModule, VerificationReport>>         modules;
    std::vector<std::pair<std::string, VerificationReport>>         invalid_modules;
    std::vector<std::pair<RingHom, VerificationReport>>             homs;

    bool all_valid() const noexcept {
      if (!invalid.empty() || !invalid_modules.empty()) {
        return false;
      }
      for (auto const& [phi, rep] : homs) {
        if (!rep.ok()) {
          return false;
        }
      }
      return true;
    }
  };

  inline Resolved resolve(SourceFile const& file) {
    if (!file.ok()) {
      throw InvalidInput(file.diagnostics_text());
    }
    Resolved out;
    for (auto const& decl : file.rings) {
      VerificationReport rep;
      auto               ring = HyperRing::validate(decl.raw, &rep);
      out.ring_reports.emplace_back(decl.raw.name, rep);
      if (ring) {
        out.rings.emplace(decl.raw.name, *ring);
        out.ring_order.push_back(decl.raw.name);
      } else {
        out.invalid.push_back(decl.raw.name);
      }
    }
    for (auto const& decl : file.modules) {
      auto it = out.rings.find(decl.ring);
      if (it == out.rings.end()) {
        continue;
      }
      RawHyperModule     raw{decl.name, it->second, decl.additive, decl.act, decl.unital};
      VerificationReport rep;
      auto               module = HyperModule::validate(raw, &rep);
      if (module) {
        out.modules.emplace_back(*module, rep);
      } else {
        out.invalid_modules.emplace_back(decl.name, rep);
      }
    }
    for (auto const& decl : file.homs) {
      auto s = out.rings.find(decl.source);
      auto t = out.rings.find(decl.target);
      if (s == out.rings.end() || t == out.rings.end()) {
        continue;
      }
      RingHom phi{s->second, t->second, decl.map, decl.unit_preserving, decl.name};
      auto    rep = verify_strong_hom(phi);
      out.homs.emplace_back(std::move(phi), std::move(rep));
    }
    return out;
  }

}  // namespace khr

#endif  // KHR_KHR_FORMAT_HPP_
