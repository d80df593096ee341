#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "khr/khr.hpp"

namespace {

  using nlohmann::ordered_json;

  constexpr int kExitPass    = 0;
  constexpr int kExitFailure = 1;
  constexpr int kExitInvalid = 2;

  struct Globals {
    std::size_t max_order = khr::kCorpusDefaultOrder;
    std::size_t threads   = 1;
    std::uint64_t seed    = 0;
    std::string format    = "text";

    bool json() const {
      return format == "json";
    }
  };

  void print_json(ordered_json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  khr::SourceFile load(std::string const& path) {
    auto file = khr::parse_file(path);
    if (!file.ok()) {
      throw khr::InvalidInput(file.diagnostics_text());
    }
    return file;
  }

  // Validated rings of the given files, optionally restricted to one name.
  std::vector<khr::HyperRing> load_rings(std::vector<std::string> const& paths,
                                         std::string const&              only) {
    std::vector<khr::HyperRing> out;
    for (auto const& path : paths) {
      auto const file = load(path);
      auto const res  = khr::resolve(file);
      for (auto const& [name, rep] : res.ring_reports) {
        if (!only.empty() && name != only) {
          continue;
        }
        if (!rep.ok()) {
          throw khr::InvalidInput(path + ": ring '" + name + "' fails axiom "
                                  + rep.first_failure()->id);
        }
        out.push_back(res.rings.at(name));
      }
    }
    if (!only.empty() && out.empty()) {
      throw khr::InvalidInput("no ring named '" + only + "'");
    }
    return out;
  }

  ordered_json sets_json(std::vector<khr::HyperIdeal> const& v) {
    ordered_json a = ordered_json::array();
    for (auto const& i : v) {
      a.push_back(i.members().to_vector());
    }
    return a;
  }

  std::string sets_text(std::vector<khr::HyperIdeal> const& v) {
    std::string out;
    for (auto const& i : v) {
      out += (out.empty() ? "" : " ") + i.members().to_string();
    }
    return out.empty() ? "(none)" : out;
  }

  ordered_json report_json(khr::VerificationReport const& rep) {
    ordered_json a = ordered_json::array();
    for (auto const& c : rep.checks) {
      ordered_json e{{"id", c.id}, {"passed", c.passed}};
      if (!c.passed) {
        e["witness"] = c.witness;
        e["detail"]  = c.detail;
      }
      a.push_back(std::move(e));
    }
    return a;
  }

  int cmd_verify(Globals const& g, std::vector<std::string> const& paths) {
    bool         all_ok = true;
    ordered_json out    = ordered_json::array();
    for (auto const& path : paths) {
      auto const file = khr::parse_file(path);
      if (!file.ok()) {
        std::cerr << file.diagnostics_text();
        return kExitInvalid;
      }
      auto const res = khr::resolve(file);
      for (auto const& [name, rep] : res.ring_reports) {
        all_ok = all_ok && rep.ok();
        if (g.json()) {
          out.push_back({{"file", path}, {"kind", "ring"}, {"name", name}, {"valid", rep.ok()},
                         {"checks", report_json(rep)}});
        } else {
          std::cout << "ring " << name << ": " << (rep.ok() ? "valid" : "INVALID") << '\n';
          if (!rep.ok()) {
            std::cout << rep.summary();
          }
        }
      }
      for (auto const& [module, rep] : res.modules) {
        if (!g.json()) {
          std::cout << "module " << module.name() << ": valid\n";
        } else {
          out.push_back({{"file", path}, {"kind", "module"}, {"name", module.name()},
                         {"valid", true}, {"checks", report_json(rep)}});
        }
      }
      for (auto const& [name, rep] : res.invalid_modules) {
        all_ok = false;
        if (!g.json()) {
          std::cout << "module " << name << ": INVALID\n" << rep.summary();
        } else {
          out.push_back({{"file", path}, {"kind", "module"}, {"name", name}, {"valid", false},
                         {"checks", report_json(rep)}});
        }
      }
      for (auto const& [phi, rep] : res.homs) {
        all_ok = all_ok && rep.ok();
        if (!g.json()) {
          std::cout << "hom " << phi.name << ": "
                    << (rep.ok() ? "strong homomorphism" : "NOT a strong homomorphism")
                    << '\n';
          if (!rep.ok()) {
            std::cout << rep.summary();
          }
        } else {
          out.push_back({{"file", path}, {"kind", "hom"}, {"name", phi.name},
                         {"valid", rep.ok()}, {"checks", report_json(rep)}});
        }
      }
    }
    if (g.json()) {
      print_json(out);
    }
    return all_ok ? kExitPass : kExitInvalid;
  }

  int cmd_ideals(Globals const& g, std::vector<std::string> const& paths, std::string const& only) {
    ordered_json out = ordered_json::array();
    for (auto const& r : load_rings(paths, only)) {
      auto const l   = khr::build_lattice(r);
      auto const nil = khr::nil_radical(l);
      if (g.json()) {
        out.push_back({{"ring", r.name()},
                       {"two_sided", sets_json(l.two_sided)},
                       {"right", sets_json(l.right)},
                       {"maximal", sets_json(l.maximal)},
                       {"maximal_right", sets_json(l.maximal_right)},
                       {"prime", sets_json(l.prime)},
                       {"nil_radical", nil.members().to_vector()}});
      } else {
        std::cout << "ring " << r.name() << '\n'
                  << "  two-sided:     " << sets_text(l.two_sided) << '\n'
                  << "  right:         " << sets_text(l.right) << '\n'
                  << "  maximal:       " << sets_text(l.maximal) << '\n'
                  << "  maximal right: " << sets_text(l.maximal_right) << '\n'
                  << "  prime:         " << sets_text(l.prime) << '\n'
                  << "  nil radical:   " << nil.members().to_string() << '\n';
      }
    }
    if (g.json()) {
      print_json(out);
    }
    return kExitPass;
  }

  int cmd_prim(Globals const& g, std::vector<std::string> const& paths, std::string const& only) {
    ordered_json out = ordered_json::array();
    for (auto const& r : load_rings(paths, only)) {
      auto const l     = khr::build_lattice(r);
      auto const certs = khr::prim_certificates(l);
      auto const prim  = khr::prim_set(l);
      if (g.json()) {
        ordered_json c = ordered_json::array();
        for (auto const& cert : certs) {
          c.push_back({{"maximal_right", cert.maximal_right.members().to_vector()},
                       {"annihilator", cert.ideal.members().to_vector()},
                       {"module_order", cert.module.order()}});
        }
        out.push_back({{"ring", r.name()},
                       {"unital", r.is_unital()},
                       {"prim", sets_json(prim)},
                       {"primitive_ring", khr::is_primitive_ring(l)},
                       {"certificates", std::move(c)}});
      } else {
        std::cout << "ring " << r.name() << (r.is_unital() ? " (unital)" : "") << '\n'
                  << "  Prim: " << sets_text(prim) << '\n';
        for (auto const& cert : certs) {
          std::cout << "  Ann(R/" << cert.maximal_right.members().to_string()
                    << ") = " << cert.ideal.members().to_string() << '\n';
        }
        std::cout << "  primitive ring: " << (khr::is_primitive_ring(l) ? "yes" : "no") << '\n';
      }
    }
    if (g.json()) {
      print_json(out);
    }
    return kExitPass;
  }

  int cmd_spectrum(Globals const& g,
                   std::vector<std::string> const& paths,
                   std::string const&              only,
                   bool                            dot,
                   bool                            json) {
    ordered_json out = ordered_json::array();
    for (auto const& r : load_rings(paths, only)) {
      auto const l = khr::build_lattice(r);
      auto const x = khr::SpectrumSpace::build(l);
      if (dot) {
        std::cout << khr::to_dot(x);
      } else if (json || g.json()) {
        out.push_back(khr::to_json(x, &l));
      } else {
        std::cout << "Prim(" << r.name() << "): " << x.size() << " points\n";
        for (std::size_t p = 0; p < x.size(); ++p) {
          std::cout << "  p" << p << " = " << x.points()[p].members().to_string()
                    << "  closure " << x.closure(x.single(p)).to_string() << '\n';
        }
        std::cout << "  T0: " << (khr::is_T0(x) ? "yes" : "no")
                  << "  T1: " << (khr::is_T1(x) ? "yes" : "no") << '\n';
      }
    }
    if (!dot && (json || g.json())) {
      print_json(out);
    }
    return kExitPass;
  }

  std::vector<khr::HyperRing> corpus_or_files(Globals const&                  g,
                                              std::vector<std::string> const& paths,
                                              khr::Dedupe                     dedupe,
                                              std::optional<khr::Corpus>&     corpus) {
    if (!paths.empty()) {
      return load_rings(paths, "");
    }
    corpus = khr::generate_corpus({g.max_order, dedupe, g.threads});
    return corpus->rings;
  }

  int cmd_check(Globals const&                  g,
                std::vector<std::string> const& paths,
                bool                            allow_invalid,
                bool                            no_homs,
                khr::Dedupe                     dedupe,
                std::string const&              output) {
    khr::SuiteOptions opts;
    opts.threads   = g.threads;
    opts.hom_sweep = !no_homs;
    khr::SuiteReport rep;
    if (paths.empty()) {
      rep = khr::run_theorem_suite(khr::generate_corpus({g.max_order, dedupe, g.threads}), opts);
    } else {
      std::vector<khr::RawHyperRing> raws;
      for (auto const& path : paths) {
        auto const file = load(path);
        for (auto const& decl : file.rings) {
          if (!allow_invalid) {
            khr::VerificationReport axioms;
            if (!khr::HyperRing::validate(decl.raw, &axioms)) {
              std::cerr << path << ": ring '" << decl.raw.name << "' fails axiom "
                        << axioms.first_failure()->id << " ("
                        << axioms.first_failure()->detail << ")\n";
              return kExitInvalid;
            }
          }
          raws.push_back(decl.raw);
        }
      }
      rep = khr::run_theorem_suite(raws, opts);
    }
    std::string const text = g.json() ? khr::to_json(rep).dump(2) + "\n" : khr::to_text(rep);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream(output, std::ios::binary) << text;
    }
    if (rep.invalid_rings() != 0) {
      return kExitInvalid;
    }
    return rep.ok() ? kExitPass : kExitFailure;
  }

  int cmd_gen(Globals const& g, khr::Dedupe dedupe, std::string const& output) {
    auto const corpus = khr::generate_corpus({g.max_order, dedupe, g.threads});
    if (!output.empty()) {
      std::ofstream out(output, std::ios::binary);
      out << "# corpus order<=" << corpus.order_bound << " dedupe=" << khr::to_string(dedupe)
          << " rings=" << corpus.rings.size() << "\n# fingerprint " << corpus.fingerprint
          << "\n\n";
      for (auto const& r : corpus.rings) {
        out << khr::emit(r.raw()) << '\n';
      }
    }
    if (g.json()) {
      ordered_json counts;
      for (std::size_t n = 1; n <= corpus.order_bound; ++n) {
        counts[std::to_string(n)] = corpus.of_order(n).size();
      }
      print_json({{"order_bound", corpus.order_bound},
                  {"dedupe", khr::to_string(dedupe)},
                  {"rings", corpus.rings.size()},
                  {"counts", counts},
                  {"fingerprint", corpus.fingerprint}});
    } else {
      for (std::size_t n = 1; n <= corpus.order_bound; ++n) {
        std::cout << "order " << n << ": " << corpus.of_order(n).size() << " rings\n";
      }
      std::cout << "fingerprint " << corpus.fingerprint << '\n';
    }
    return kExitPass;
  }

  int cmd_search(Globals const&                  g,
                 std::string const&              property,
                 std::vector<std::string> const& paths,
                 khr::Dedupe                     dedupe,
                 std::size_t                     module_order,
                 bool                            list) {
    if (list || property.empty()) {
      for (auto const& p : khr::kSearchProperties) {
        std::cout << p.id << "  " << p.description << '\n';
      }
      return list ? kExitPass : kExitInvalid;
    }
    std::optional<khr::Corpus> corpus;
    auto const                 rings = corpus_or_files(g, paths, dedupe, corpus);
    khr::SearchOptions         opts;
    opts.threads      = g.threads;
    opts.module_order = module_order;
    auto const res    = khr::counterexample_search(property, rings, opts);
    if (g.json()) {
      ordered_json f = ordered_json::array();
      for (auto const& x : res.findings) {
        f.push_back({{"subject", x.subject}, {"detail", x.detail}});
      }
      print_json({{"property", res.id}, {"examined", res.examined}, {"findings", f}});
    } else {
      std::cout << res.id << ": examined " << res.examined << '\n';
      if (res.findings.empty()) {
        std::cout << "none found in corpus\n";
      }
      for (auto const& x : res.findings) {
        std::cout << "  " << x.subject << ": " << x.detail << '\n';
      }
    }
    return kExitPass;
  }

  int cmd_hom(Globals const&                  g,
              std::vector<std::string> const& paths,
              std::vector<std::string> const& enumerate,
              bool                            surjective_only) {
    ordered_json out = ordered_json::array();
    bool         ok  = true;
    auto         describe = [&](khr::RingHom const& phi, khr::VerificationReport const& rep) {
      ordered_json e{{"hom", khr::hom_label(phi)}, {"strong", rep.ok()}};
      std::string  text = "hom " + phi.name + " " + khr::hom_label(phi) + ": ";
      if (!rep.ok()) {
        ok = false;
        e["checks"] = report_json(rep);
        text += "NOT a strong homomorphism\n" + rep.summary();
      } else {
        auto const ls   = khr::build_lattice(phi.source);
        auto const xs   = khr::SpectrumSpace::build(ls);
        auto const xt   = khr::SpectrumSpace::build(khr::build_lattice(phi.target));
        auto const star = khr::induced_map(phi, xs, xt);
        auto const d    = khr::check_density(phi, ls, xs, xt);
        ordered_json pre = ordered_json::array();
        text += "strong homomorphism\n  kernel " + khr::kernel(phi).members().to_string() + "\n";
        for (std::size_t q = 0; q < xt.size(); ++q) {
          pre.push_back({{"point", xt.points()[q].members().to_vector()},
                         {"preimage", star.preimages[q].members().to_vector()},
                         {"in_prim", star.map[q].has_value()}});
          text += "  phi*(" + xt.points()[q].members().to_string() + ") = "
                  + star.preimages[q].members().to_string()
                  + (star.map[q] ? "" : "  (not primitive)") + "\n";
        }
        e["kernel"]        = khr::kernel(phi).members().to_vector();
        e["induced"]       = std::move(pre);
        e["lands_in_prim"] = star.lands_in_prim;
        if (star.continuous) {
          e["continuous"] = *star.continuous;
          text += std::string("  continuous: ") + (*star.continuous ? "yes" : "no") + "\n";
        }
        if (phi.is_surjective()) {
          auto const emb        = khr::check_closed_embedding(phi, xs, xt);
          e["closed_embedding"] = emb.ok();
          text += std::string("  closed embedding onto Cl(ker): ") + (emb.ok() ? "yes" : "no")
                  + "\n";
          ok = ok && emb.ok();
        }
        e["density"] = {{"dense", d.dense},
                        {"kernel_in_nil_radical", d.kernel_in_nilradical},
                        {"status", khr::to_string(d.status)}};
        text += std::string("  dense: ") + (d.dense ? "yes" : "no") + ", ker in nil radical: "
                + (d.kernel_in_nilradical ? "yes" : "no") + " ("
                + std::string(khr::to_string(d.status)) + ")\n";
        ok = ok && star.lands_in_prim && d.status != khr::DensityStatus::violated;
      }
      if (g.json()) {
        out.push_back(std::move(e));
      } else {
        std::cout << text;
      }
    };
    if (!enumerate.empty()) {
      if (enumerate.size() != 2) {
        throw khr::InvalidInput("--enumerate takes a source and a target ring name");
      }
      auto const rings = load_rings(paths, "");
      auto       find  = [&](std::string const& name) {
        for (auto const& r : rings) {
          if (r.name() == name) {
            return r;
          }
        }
        throw khr::InvalidInput("no ring named '" + name + "'");
      };
      for (auto const& phi : khr::enumerate_homs(find(enumerate[0]), find(enumerate[1]),
                                                 surjective_only)) {
        describe(phi, khr::verify_strong_hom(phi));
      }
    } else {
      for (auto const& path : paths) {
        auto const res = khr::resolve(load(path));
        for (auto const& [phi, rep] : res.homs) {
          describe(phi, rep);
        }
      }
    }
    if (g.json()) {
      print_json(out);
    }
    return ok ? kExitPass : kExitFailure;
  }

  khr::Dedupe parse_dedupe(std::string const& s) {
    return s == "iso" ? khr::Dedupe::isomorphism : khr::Dedupe::none;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Krasner hyperrings: axioms, hyperideals, primitivity and Prim(R)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--max-order", g.max_order, "Corpus order bound")
      ->check(CLI::Range(std::size_t{1}, khr::kCorpusHardCap));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Reserved; has no effect on results");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> files;
  std::string              ring_name;
  std::string              output;
  std::string              dedupe = "none";
  bool                     allow_invalid = false;

  auto* verify = app.add_subcommand("verify", "Check ring, module and hom axioms");
  verify->add_option("files", files, ".khr files")->required()->check(CLI::ExistingFile);

  auto* ideals = app.add_subcommand("ideals", "Hyperideal lattice");
  ideals->add_option("files", files)->required()->check(CLI::ExistingFile);
  ideals->add_option("--ring", ring_name, "Only this ring");

  auto* prim = app.add_subcommand("prim", "Primitive hyperideals");
  prim->add_option("files", files)->required()->check(CLI::ExistingFile);
  prim->add_option("--ring", ring_name, "Only this ring");

  bool  dot = false, json = false;
  auto* spectrum = app.add_subcommand("spectrum", "Prim(R) with its closure topology");
  spectrum->add_option("files", files)->required()->check(CLI::ExistingFile);
  spectrum->add_option("--ring", ring_name, "Only this ring");
  spectrum->add_flag("--dot", dot, "Specialization order as DOT");
  spectrum->add_flag("--json", json, "Spectrum as JSON");

  bool  no_homs = false;
  auto* check   = app.add_subcommand("check", "Run the theorem suite on files or the corpus");
  check->add_option("files", files)->check(CLI::ExistingFile);
  check->add_flag("--allow-invalid", allow_invalid, "Report rings failing the axioms");
  check->add_flag("--no-homs", no_homs, "Skip the homomorphism sweep");
  check->add_option("--dedupe", dedupe)->check(CLI::IsMember({"none", "iso"}));
  check->add_option("-o,--output", output, "Write the report here");

  auto* gen = app.add_subcommand("gen", "Generate the corpus of small hyperrings");
  gen->add_option("--dedupe", dedupe)->check(CLI::IsMember({"none", "iso"}));
  gen->add_option("-o,--output", output, "Write the rings as a .khr file");

  std::string property;
  std::size_t module_order = 2;
  bool        list         = false;
  auto*       search = app.add_subcommand("search", "Look for counterexamples in the corpus");
  search->add_option("property", property, "Property id");
  search->add_option("files", files)->check(CLI::ExistingFile);
  search->add_option("--dedupe", dedupe)->check(CLI::IsMember({"none", "iso"}));
  search->add_option("--module-order", module_order, "Largest module for module searches");
  search->add_flag("--list", list, "List property ids");

  std::vector<std::string> enumerate;
  bool                     surjective_only = false;
  auto*                    hom = app.add_subcommand("hom", "Homomorphisms and their spectral maps");
  hom->add_option("files", files)->required()->check(CLI::ExistingFile);
  hom->add_option("--enumerate", enumerate, "Enumerate homs SOURCE TARGET")->expected(2);
  hom->add_flag("--surjective", surjective_only, "Only surjective homs when enumerating");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*verify) {
      return cmd_verify(g, files);
    }
    if (*ideals) {
      return cmd_ideals(g, files, ring_name);
    }
    if (*prim) {
      return cmd_prim(g, files, ring_name);
    }
    if (*spectrum) {
      return cmd_spectrum(g, files, ring_name, dot, json);
    }
    if (*check) {
      return cmd_check(g, files, allow_invalid, no_homs, parse_dedupe(dedupe), output);
    }
    if (*gen) {
      return cmd_gen(g, parse_dedupe(dedupe), output);
    }
    if (*search) {
      return cmd_search(g, property, files, parse_dedupe(dedupe), module_order, list);
    }
    if (*hom) {
      return cmd_hom(g, files, enumerate, surjective_only);
    }
  } catch (khr::TheoremViolation const& e) {
    std::cerr << "theorem violation (" << e.check() << "): " << e.what() << '\n';
    return kExitFailure;
  } catch (khr::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
