// Command-line front end. Exit codes: 0 success, 1 failed audit (or an
// operation whose precondition the input does not meet), 2 input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mvalg/constructions.hpp"
#include "mvalg/corpus.hpp"
#include "mvalg/diagram.hpp"
#include "mvalg/enumerate.hpp"
#include "mvalg/error.hpp"
#include "mvalg/io.hpp"
#include "mvalg/oracle.hpp"
#include "mvalg/spectra.hpp"

using namespace mvalg;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { text, json_lines };

struct Options {
  Format format = Format::text;
};

Options opts;

int emit(const CheckReport& r) {
  std::cout << (opts.format == Format::text ? r.to_text() : r.to_json_lines());
  return r.overall() ? 0 : 1;
}

template <class T>
const T& as(const StructureFile& f, std::string_view what) {
  if (const T* p = std::get_if<T>(&f.value)) return *p;
  throw InputError(std::string("expected a ") + std::string(what) + " file, got " +
                   std::string(kind_name(f.value)));
}

std::string render_map(const Carrier& from, const Carrier& to, const StructureMap& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + from.name(i) + "->" + to.name(f(i));
  return s + "}";
}

Json map_json(const Carrier& from, const Carrier& to, const StructureMap& f) {
  Json j = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) j[from.name(i)] = to.name(f(i));
  return j;
}

ElementSet parse_labels(const Carrier& c, const std::vector<std::string>& labels) {
  ElementSet s;
  for (const auto& l : labels) s.insert(c.index_of(l));
  return s;
}

void write_output(const StructureFile& f, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << serialize(f);
  } else {
    save_structure(out, f);
  }
}

// Prints a list of label sets, one per line.
void print_sets(std::string_view title, const Carrier& c, const std::vector<ElementSet>& sets) {
  if (opts.format == Format::json_lines) {
    for (ElementSet s : sets) {
      Json members = Json::array();
      for (std::size_t x : s) members.push_back(c.name(x));
      Json j;
      j["kind"] = title;
      j["members"] = members;
      std::cout << j.dump() << "\n";
    }
    return;
  }
  std::cout << title << ": " << sets.size() << "\n";
  for (ElementSet s : sets) std::cout << "  " << c.render(s) << "\n";
}

// ---- check ---------------------------------------------------------------

CheckReport multiring_derived(const FiniteMultiring& r) {
  CheckReport rep;
  const Classification c = classify(r);
  rep.merge(check_quotient_characterizations(r), "quotients.");
  rep.merge(ordering_hom_bijection(r), "orderings.");
  if (c.multifield) {
    Verdict v = full_distributivity(r);
    v.id = "multifield." + v.id;
    rep.add(v);
    rep.merge(check_reduced_characterizations(r), "reduced_char.");
    for (ElementSet t : enumerate_preorderings(r)) {
      rep.merge(preordering_intersection_check(r, t), "preordering" + r.carrier().render(t) + ".");
    }
  }
  if (is_real_reduced_mr(r).overall()) rep.merge(sper_embedding_check(r), "sper_embedding.");
  return rep;
}

CheckReport check_file(const StructureFile& f, const std::string& level) {
  const bool axioms = level != "derived", derived = level != "axioms";
  CheckReport rep;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteMultigroup>) {
          if (axioms) rep.merge(check_multigroup(s));
          if (derived) rep.merge(check_relational_consequences(to_relational(s)), "relational.");
        } else if constexpr (std::is_same_v<T, FiniteMultiring>) {
          const CheckReport base = check_multiring(s);
          if (axioms) rep.merge(base);
          if (derived) {
            if (base.overall()) {
              rep.merge(multiring_derived(s));
            } else {
              rep.skip("derived", "not a multiring");
            }
          }
        } else if constexpr (std::is_same_v<T, SpecialGroup>) {
          const CheckReport base = check_sg(s);
          if (axioms) rep.merge(base);
          if (derived) {
            rep.merge(check_sg_extended(s), "extended.");
            if (base.overall()) rep.merge(sg_roundtrip(s), "roundtrip.");
          }
        } else if constexpr (std::is_same_v<T, RealSemigroup>) {
          const CheckReport base = check_rs(s);
          if (axioms) rep.merge(base);
          if (derived) {
            rep.merge(check_rs_derived(s), "derived.");
            if (base.overall()) {
              rep.merge(separation_audit(s), "separation.");
              rep.merge(rs_roundtrip(s), "roundtrip.");
            }
          }
        } else {
          const CheckReport base = check_space(s);
          if (axioms) rep.merge(base);
          if (derived && base.overall()) {
            rep.merge(s.mode() == SpaceMode::aos ? aos_roundtrip(s) : ars_roundtrip(s), "roundtrip.");
          }
        }
      },
      f.value);
  return rep;
}

// ---- classify ------------------------------------------------------------

int classify_cmd(const FiniteMultiring& r) {
  const Classification c = classify(r);
  std::vector<std::pair<std::string, bool>> flags = {{"multiring", c.multiring},
                                                     {"multidomain", c.multidomain},
                                                     {"multifield", c.multifield}};
  if (c.multiring) {
    flags.push_back({"real", is_real(r)});
    flags.push_back({"real_reduced_multiring", is_real_reduced_mr(r).overall()});
    flags.push_back({"real_reduced_multifield", c.multifield && is_real_reduced_mf(r).overall()});
    flags.push_back({"special_multifield", c.multifield && check_smf(r).overall()});
  }
  if (opts.format == Format::json_lines) {
    Json j;
    for (const auto& [k, v] : flags) j[k] = v;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : flags) std::cout << k << ": " << (v ? "yes" : "no") << "\n";
  }
  return 0;
}

// ---- functor / roundtrip -------------------------------------------------

StructureFile apply_functor(const std::string& name, const StructureFile& f) {
  const std::string prov = name + " of " + (f.name.empty() ? std::string("input") : f.name);
  auto out = [&](Structure s) { return StructureFile{f.name.empty() ? "" : f.name + "_" + name, prov, std::move(s)}; };
  if (name == "sg->mf") return out(sg_to_mf(as<SpecialGroup>(f, "special_group")));
  if (name == "mf->sg") return out(mf_to_sg(as<FiniteMultiring>(f, "multiring")));
  if (name == "rs->mr") return out(rs_to_mrred(as<RealSemigroup>(f, "real_semigroup")));
  if (name == "mr->rs") return out(mrred_to_rs(as<FiniteMultiring>(f, "multiring")));
  if (name == "aos->mf") return out(aos_to_mfred(as<SignSpace>(f, "sign_space")));
  if (name == "mf->aos") return out(mfred_to_aos(as<FiniteMultiring>(f, "multiring")));
  if (name == "ars->mr") return out(ars_to_mrred(as<SignSpace>(f, "sign_space")));
  if (name == "mr->ars") return out(mrred_to_ars(as<FiniteMultiring>(f, "multiring")));
  throw InputError("unknown functor '" + name + "'");
}

CheckReport roundtrip(const std::string& pair, const StructureFile& f) {
  const auto* sg = std::get_if<SpecialGroup>(&f.value);
  const auto* mr = std::get_if<FiniteMultiring>(&f.value);
  const auto* rs = std::get_if<RealSemigroup>(&f.value);
  const auto* sp = std::get_if<SignSpace>(&f.value);
  if (pair == "sg-smf") {
    if (sg) return sg_roundtrip(*sg);
    if (mr) return smf_roundtrip(*mr);
  } else if (pair == "rs-mr") {
    if (rs) return rs_roundtrip(*rs);
    if (mr) return mr_rs_roundtrip(*mr);
  } else if (pair == "aos-mf") {
    if (sp && sp->mode() == SpaceMode::aos) return aos_roundtrip(*sp);
    if (mr) return mf_aos_roundtrip(*mr);
  } else if (pair == "ars-mr") {
    if (sp && sp->mode() == SpaceMode::ars) return ars_roundtrip(*sp);
    if (mr) return mr_ars_roundtrip(*mr);
  } else {
    throw InputError("unknown pair '" + pair + "'");
  }
  throw InputError("pair " + pair + " does not apply to a " + std::string(kind_name(f.value)) + " file");
}

// ---- hom -----------------------------------------------------------------

int hom_cmd(const StructureFile& fa, const StructureFile& fb) {
  std::vector<StructureMap> maps;
  const Carrier *ca = nullptr, *cb = nullptr;
  if (fa.value.index() != fb.value.index()) throw InputError("hom needs two files of the same kind");
  if (const auto* a = std::get_if<FiniteMultiring>(&fa.value)) {
    const auto& b = std::get<FiniteMultiring>(fb.value);
    maps = enumerate_morphisms(*a, b), ca = &a->carrier(), cb = &b.carrier();
  } else if (const auto* g = std::get_if<SpecialGroup>(&fa.value)) {
    const auto& h = std::get<SpecialGroup>(fb.value);
    maps = enumerate_sg_morphisms(*g, h), ca = &g->carrier(), cb = &h.carrier();
  } else if (const auto* s = std::get_if<RealSemigroup>(&fa.value)) {
    const auto& t = std::get<RealSemigroup>(fb.value);
    maps = enumerate_rs_morphisms(*s, t), ca = &s->carrier(), cb = &t.carrier();
  } else if (const auto* x = std::get_if<SignSpace>(&fa.value)) {
    const auto& y = std::get<SignSpace>(fb.value);
    if (x->mode() != y.mode()) throw InputError("hom needs two sign spaces of the same mode");
    maps = enumerate_space_morphisms(*x, y), ca = &x->points(), cb = &y.points();
  } else {
    throw InputError("hom is not provided for multigroup files");
  }
  if (opts.format == Format::json_lines) {
    std::cout << Json{{"count", maps.size()}}.dump() << "\n";
    for (const auto& m : maps) std::cout << Json{{"map", map_json(*ca, *cb, m)}}.dump() << "\n";
  } else {
    std::cout << "count: " << maps.size() << "\n";
    for (const auto& m : maps) std::cout << "  " << render_map(*ca, *cb, m) << "\n";
  }
  return 0;
}

// ---- spectra commands ----------------------------------------------------

int spec_cmd(const FiniteMultiring& a) {
  const SpectrumReport sp = spec_topology(a);
  print_sets("primes", a.carrier(), sp.primes);
  print_sets("maximals", a.carrier(), enumerate_maximals(a));
  if (opts.format == Format::text) {
    std::cout << "basic opens D(a) (indices into primes):\n";
    for (std::size_t x = 0; x < a.size(); ++x) {
      std::cout << "  D(" << a.name(x) << ") = {";
      bool first = true;
      for (std::size_t p : sp.basic_opens[x]) std::cout << (first ? "" : ",") << p, first = false;
      std::cout << "}\n";
    }
  }
  return emit(sp.report);
}

int sper_cmd(const FiniteMultiring& a) {
  const auto homs = hom_to_q2(a);
  const FiniteMultiring q = corpus::q2();
  std::vector<ElementSet> orderings;
  for (const auto& h : homs) orderings.push_back(ordering_of(a, h));
  if (opts.format == Format::text) {
    std::cout << "morphisms to Q2: " << homs.size() << "\n";
    for (const auto& h : homs) std::cout << "  " << render_map(a.carrier(), q.carrier(), h) << "\n";
  }
  print_sets("orderings", a.carrier(), orderings);
  return emit(ordering_hom_bijection(a));
}

int orderings_cmd(const FiniteMultiring& a) {
  print_sets("orderings", a.carrier(), enumerate_orderings(a));
  CheckReport rep = ordering_hom_bijection(a);
  if (classify(a).multifield) {
    const auto pre = enumerate_preorderings(a);
    print_sets("preorderings", a.carrier(), pre);
    for (ElementSet t : pre) rep.merge(preordering_intersection_check(a, t), "preordering" + a.carrier().render(t) + ".");
  }
  return emit(rep);
}

int real_check_cmd(const FiniteMultiring& a) {
  print_sets("sums_of_squares", a.carrier(), {sums_of_squares(a)});
  CheckReport rep;
  Verdict real{"real", is_real(a) ? Status::pass : Status::fail, {}, {}, "-1 not a sum of squares", true};
  rep.inform(real);
  const CheckReport mr = is_real_reduced_mr(a);
  for (Verdict v : mr.verdicts()) {
    v.id = "real_reduced." + v.id;
    v.informational = true;
    rep.inform(v);
  }
  if (classify(a).multifield) rep.merge(check_reduced_characterizations(a), "reduced_char.");
  if (mr.overall()) rep.merge(sper_embedding_check(a), "sper_embedding.");
  return emit(rep);
}

// ---- enumerate -----------------------------------------------------------

int enumerate_cmd(const std::string& kind_s, std::size_t order, bool up_to_iso, const std::string& out_dir) {
  const auto kind = parse_enum_kind(kind_s);
  if (!kind) throw InputError("unknown kind '" + kind_s + "' (multigroup, multiring, multifield)");
  const EnumerationResult res = enumerate_structures(*kind, order, up_to_iso);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < res.items.size(); ++i) {
      const std::string name = kind_s + std::to_string(order) + "_" + std::to_string(i);
      save_structure(std::filesystem::path(out_dir) / (name + ".mrs"), {name, res.items[i].code, res.items[i].value});
    }
  }
  if (opts.format == Format::json_lines) {
    std::cout << Json{{"kind", kind_s}, {"order", order}, {"up_to_iso", up_to_iso}, {"labelled", res.labelled},
                      {"count", res.items.size()}}
                     .dump()
              << "\n";
    for (const auto& it : res.items) std::cout << Json{{"code", it.code}}.dump() << "\n";
  } else {
    std::cout << "kind: " << kind_s << "\norder: " << order << "\nlabelled: " << res.labelled
              << "\ncount: " << res.items.size() << "\n";
    for (const auto& it : res.items) std::cout << it.code << "\n";
  }
  return 0;
}

// ---- misc ----------------------------------------------------------------

int rs_unique3_cmd() {
  const UniquenessResult u = rs_on_three();
  CheckReport rep;
  rep.pass("candidates", std::to_string(u.candidates) + " D-relations after pruning");
  const bool unique = u.survivors.size() == 1;
  if (unique) {
    rep.pass("unique", "exactly one real semigroup structure");
  } else {
    rep.fail_text("unique", {std::to_string(u.survivors.size())}, "survivor count");
  }
  const bool canonical = unique && u.survivors.front() == canonical_3();
  if (canonical) {
    rep.pass("matches_canonical");
  } else {
    rep.fail_text("matches_canonical", {"survivor"}, "differs from the tabulated relation");
  }
  if (unique && opts.format == Format::text) {
    std::cout << serialize({"three", "unique survivor", u.survivors.front()});
  }
  return emit(rep);
}

int sample_cmd(const std::string& axiom, std::size_t trials, std::uint64_t seed) {
  TriangleOracle oracle;
  CheckReport rep;
  if (axiom == "all") {
    for (auto a : kSampledAxioms) rep.merge(sampled_check(oracle, a, trials, seed));
  } else {
    rep = sampled_check(oracle, axiom, trials, seed);
  }
  return emit(rep);
}

int corpus_export(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& f : corpus::all()) save_structure(std::filesystem::path(dir) / (f.name + ".mrs"), f);
  std::cout << "wrote " << corpus::all().size() << " files to " << dir << "\n";
  return 0;
}

int corpus_list() {
  for (const auto& f : corpus::all()) {
    std::cout << f.name << "  " << kind_name(f.value) << "  " << f.provenance << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multivalued algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json-lines"}));

  std::function<int()> run;
  std::string file, file_b, level = "all", out, name, pair, kind, dir, axiom = "all";
  std::vector<std::string> files, labels;
  std::size_t order = 0, trials = 10000;
  std::uint64_t seed = 1;
  bool up_to_iso = false;

  auto* check = app.add_subcommand("check", "Run the audits for a structure file");
  check->add_option("file", file)->required();
  check->add_option("--level", level)->check(CLI::IsMember({"axioms", "derived", "all"}));
  check->callback([&] { run = [&] { return emit(check_file(load_structure(file), level)); }; });

  auto* cls = app.add_subcommand("classify", "Multiring, multidomain, multifield and reality flags");
  cls->add_option("file", file)->required();
  cls->callback([&] { run = [&] { return classify_cmd(as<FiniteMultiring>(load_structure(file), "multiring")); }; });

  auto single_ring = [&](const char* cmd, const char* help, int (*fn)(const FiniteMultiring&)) {
    auto* sc = app.add_subcommand(cmd, help);
    sc->add_option("file", file)->required();
    sc->callback([&, fn] { run = [&, fn] { return fn(as<FiniteMultiring>(load_structure(file), "multiring")); }; });
  };
  single_ring("spec", "Prime spectrum and its topology", spec_cmd);
  single_ring("sper", "Morphisms to Q2 and the orderings they define", sper_cmd);
  single_ring("orderings", "Orderings and preorderings", orderings_cmd);
  single_ring("real-check", "Sums of squares and real reduced checks", real_check_cmd);

  auto* construct = app.add_subcommand("construct", "Build a new structure file");
  construct->require_subcommand(1);
  construct->add_option("-o,--output", out, "Output file (default: stdout)");
  auto ring_of = [&](const std::string& path) { return as<FiniteMultiring>(load_structure(path), "multiring"); };
  auto* c_prod = construct->add_subcommand("product", "Componentwise product");
  c_prod->add_option("files", files)->required();
  c_prod->callback([&] {
    run = [&] {
      std::vector<FiniteMultiring> fs;
      for (const auto& p : files) fs.push_back(ring_of(p));
      write_output({"product", "product", product(fs)}, out);
      return 0;
    };
  });
  auto set_construction = [&](const char* cmd, const char* help, const char* opt,
                              Construction (*fn)(const FiniteMultiring&, ElementSet)) {
    auto* sc = construct->add_subcommand(cmd, help);
    sc->add_option("file", file)->required();
    sc->add_option(opt, labels)->required()->delimiter(',');
    sc->callback([&, fn, cmd] {
      run = [&, fn, cmd] {
        const FiniteMultiring a = ring_of(file);
        write_output({cmd, cmd, fn(a, parse_labels(a.carrier(), labels)).result}, out);
        return 0;
      };
    });
  };
  set_construction("quotient", "Quotient by an ideal", "--ideal", quotient_by_ideal);
  set_construction("localize", "Localization at a multiplicative set", "--set", localization);
  set_construction("marshall", "Marshall quotient by a multiplicative set", "--set", marshall_quotient);
  auto unary_construction = [&](const char* cmd, const char* help, Construction (*fn)(const FiniteMultiring&)) {
    auto* sc = construct->add_subcommand(cmd, help);
    sc->add_option("file", file)->required();
    sc->callback([&, fn, cmd] {
      run = [&, fn, cmd] {
        write_output({cmd, cmd, fn(ring_of(file)).result}, out);
        return 0;
      };
    });
  };
  unary_construction("qred", "Reduced quotient by the sums of unit squares", q_red);
  unary_construction("ff", "Fraction multifield of a multidomain", fraction_multifield);

  auto* functor = app.add_subcommand("functor", "Apply one of the eight functors");
  functor->add_option("name", name)
      ->required()
      ->check(CLI::IsMember({"sg->mf", "mf->sg", "rs->mr", "mr->rs", "aos->mf", "mf->aos", "ars->mr", "mr->ars"}));
  functor->add_option("file", file)->required();
  functor->add_option("-o,--output", out);
  functor->callback([&] {
    run = [&] {
      write_output(apply_functor(name, load_structure(file)), out);
      return 0;
    };
  });

  auto* rt = app.add_subcommand("roundtrip", "Round-trip audit for one equivalence");
  rt->add_option("--pair", pair)->required()->check(CLI::IsMember({"sg-smf", "rs-mr", "aos-mf", "ars-mr"}));
  rt->add_option("file", file)->required();
  rt->callback([&] { run = [&] { return emit(roundtrip(pair, load_structure(file))); }; });

  auto* hom = app.add_subcommand("hom", "Enumerate morphisms between two files of the same kind");
  hom->add_option("file_a", file)->required();
  hom->add_option("file_b", file_b)->required();
  hom->callback([&] { run = [&] { return hom_cmd(load_structure(file), load_structure(file_b)); }; });

  auto* en = app.add_subcommand("enumerate", "Exhaustive search for small structures");
  en->add_option("--kind", kind)->required();
  en->add_option("--order", order)->required();
  en->add_flag("--up-to-iso", up_to_iso);
  en->add_option("--out-dir", dir, "Also write each structure as a file");
  en->callback([&] { run = [&] { return enumerate_cmd(kind, order, up_to_iso, dir); }; });

  auto* dg = app.add_subcommand("diagram", "Walk every functor edge from a real reduced multiring");
  dg->add_option("file", file)->required();
  dg->callback([&] { run = [&] { return emit(diagram_audit(as<FiniteMultiring>(load_structure(file), "multiring"))); }; });

  auto* u3 = app.add_subcommand("rs-unique3", "Search every D on the ternary semigroup 3");
  u3->callback([&] { run = [&] { return rs_unique3_cmd(); }; });

  auto* sm = app.add_subcommand("sample", "Seeded sampled checks of the triangle multifield");
  sm->add_option("--seed", seed);
  sm->add_option("--trials", trials);
  sm->add_option("--axiom", axiom);
  sm->callback([&] { run = [&] { return sample_cmd(axiom, trials, seed); }; });

  auto* cp = app.add_subcommand("corpus", "The bundled structures");
  cp->require_subcommand(1);
  auto* cp_export = cp->add_subcommand("export", "Write every corpus member to a directory");
  cp_export->add_option("dir", dir)->required();
  cp_export->callback([&] { run = [&] { return corpus_export(dir); }; });
  auto* cp_list = cp->add_subcommand("list", "List corpus members");
  cp_list->callback([&] { run = [&] { return corpus_list(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opts.format = format == "json-lines" ? Format::json_lines : Format::text;

  try {
    return run();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition not met: " << e.what() << "\n";
    return 1;
  } catch (const StructuralAnomaly& e) {
    std::cerr << "structural anomaly: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
