// linext: command-line front end.
//
// Exit codes: 0 valid / success, 1 axiom failure (report on stdout),
// 2 structural or usage error (one line on stderr).

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "linext/schema.hpp"

using namespace linext;
using schema::json;

namespace {

constexpr int kValid = 0, kAxiom = 1, kUsage = 2;

struct Globals {
  std::size_t budget = 64;
  std::uint64_t max_census = std::uint64_t{1} << 20;
  unsigned jobs = 1;

  Budget make() const {
    Budget b;
    b.max_ring_order = budget;
    b.max_structure_order = budget;
    b.max_census = max_census;
    return b;
  }
};

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

// A file path, or a shorthand reference understood by the schema.
json read_ref(const std::string& arg) {
  if (arg.starts_with("zn:") || arg.starts_with("cyclic:") || arg.starts_with("trivial:"))
    return arg;
  return read_document(arg);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int emit_report(std::string_view of, const ValidityReport& r) {
  emit(schema::report_json(of, r));
  return r.valid() ? kValid : kAxiom;
}

ValidityReport check_base(const Mcq& x, const FiniteRing& r) {
  ValidityReport out;
  out.merge(check_mcq(x), "mcq:");
  out.merge(check_ring(r), "ring:");
  return out;
}

ValidityReport check_document(const json& doc) {
  const std::string kind = schema::kind_of(doc);
  if (kind == "group") return check_group(schema::group_from_json(doc));
  if (kind == "ring") return check_ring(schema::ring_from_json(doc));
  if (kind == "module") {
    const FiniteModule m = schema::module_from_json(doc);
    ValidityReport out;
    out.merge(check_ring(m.ring()), "ring:");
    if (out.valid()) out.merge(check_module(m));
    return out;
  }
  if (kind == "quandle") return check_quandle(schema::quandle_from_json(doc));
  if (kind == "mcq") return check_mcq(schema::mcq_from_json(doc));
  if (kind == "gfamily") return check_gfamily(schema::gfamily_from_json(doc));
  if (kind == "alexpair") {
    const AlexanderPair p = schema::pair_from_json(doc);
    ValidityReport out = check_base(p.mcq(), p.ring());
    if (out.valid()) out.merge(check_pair(p));
    return out;
  }
  if (kind == "quadruple") {
    const Quadruple q = schema::quadruple_from_json(doc);
    ValidityReport out = check_base(q.mcq(), q.ring());
    if (out.valid()) out.merge(check_quadruple(q));
    return out;
  }
  if (kind == "extension") {
    const Mcq ext = schema::mcq_from_json(doc.at("mcq"));
    const Mcq base = schema::mcq_from_json(doc.at("base"));
    const auto proj = doc.at("projection").get<std::vector<Elem>>();
    ValidityReport out;
    out.merge(check_mcq(ext), "mcq:");
    out.merge(check_mcq(base), "base:");
    if (proj.size() != ext.order()) {
      throw StructuralError("extension: projection has wrong length");
    }
    for (Elem v : proj)
      if (v >= base.order()) throw StructuralError("extension: projection out of range");
    const auto ec = check_extension(ext, base, proj);
    if (!ec.ok) out.add("extension", {}, ec.reason);
    if (doc.contains("fiber_size") &&
        doc.at("fiber_size").get<std::size_t>() != ec.fiber_size && ec.ok) {
      out.add("fiber-size", {}, "declared fiber size differs");
    }
    return out;
  }
  if (kind == "reduction") {
    const Quadruple q = schema::quadruple_from_json(doc.at("quadruple"));
    const Quadruple g = schema::quadruple_from_json(doc.at("reduced"));
    const AlexanderPair p = schema::pair_from_json(doc.at("pair"));
    const auto h = doc.at("h").get<std::vector<Elem>>();
    ValidityReport out = check_base(q.mcq(), q.ring());
    if (!out.valid()) return out;
    if (!(g.mcq() == q.mcq()) || !(p.mcq() == q.mcq()) || !(g.ring() == q.ring()) ||
        !(p.ring() == q.ring())) {
      throw StructuralError("reduction: parts live over different structures");
    }
    out.merge(check_quadruple(q), "quadruple:");
    out.merge(check_quadruple(g), "reduced:");
    out.merge(check_pair(p), "pair:");
    if (out.valid()) {
      if (!pair_to_quadruple(verify_pair(p)).same_tables(g)) out.add("pair-induced", {});
      if (h.size() != q.mcq().order()) throw StructuralError("reduction: h has wrong length");
      for (Elem v : h)
        if (v >= q.ring().order() || !q.ring().is_unit(v)) {
          out.add("h-units", {v});
          return out;
        }
      if (!check_equivalent(q, g, h)) out.add("equivalence", h);
    }
    return out;
  }
  throw StructuralError("unknown kind \"" + kind + "\"");
}

FiniteModule module_arg(const std::string& arg, const FiniteRing& r,
                        const Budget& budget) {
  if (arg == "regular") return regular_module(r, budget);
  FiniteModule m = schema::module_from_json(read_document(arg));
  if (!(m.ring() == r)) throw StructuralError("module is over a different ring");
  return m;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    std::size_t v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw StructuralError("bad list entry \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw StructuralError("empty list");
  return out;
}

GFamily family_arg(const std::string& arg, const Budget& budget) {
  if (arg.starts_with("dihedral:")) {
    const auto n = parse_list(arg.substr(9));
    if (n.size() != 1 || n[0] == 0) throw StructuralError("dihedral:N needs one N >= 1");
    return zk_family(dihedral_quandle(n[0], budget));
  }
  return schema::gfamily_from_json(read_document(arg));
}

std::vector<Elem> hom_arg(const std::string& arg, const FiniteGroup& g) {
  std::vector<Elem> h(g.order());
  if (arg == "identity") {
    std::iota(h.begin(), h.end(), 0);
  } else if (arg == "trivial") {
    std::fill(h.begin(), h.end(), g.identity());
  } else {
    const auto v = parse_list(arg);
    if (v.size() != g.order()) throw StructuralError("--hom list has wrong length");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= g.order()) throw StructuralError("--hom entry out of range");
      h[i] = static_cast<Elem>(v[i]);
    }
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiple conjugation quandles, their Alexander pairs and linear extensions"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget", g.budget, "Largest ring / structure order to build")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-census", g.max_census,
                 "Largest census enumerated exhaustively; bigger ones are sampled");
  app.add_option("--jobs", g.jobs, "Worker threads for censuses")->check(CLI::PositiveNumber);

  int code = kValid;

  auto* check = app.add_subcommand("check", "Check a document against its axioms");
  std::string check_file;
  check->add_option("file", check_file, "Document, or - for stdin")->required();
  check->callback([&] {
    const json doc = read_document(check_file);
    code = emit_report(schema::kind_of(doc), check_document(doc));
  });

  auto* build = app.add_subcommand("build-extension",
                                   "Linear extension of a pair or quadruple");
  std::string build_file, build_module = "regular";
  build->add_option("file", build_file)->required();
  build->add_option("--module", build_module, "Module document, or \"regular\"");
  build->callback([&] {
    const Budget budget = g.make();
    const json doc = read_document(build_file);
    const std::string kind = schema::kind_of(doc);
    if (kind == "alexpair") {
      const AlexanderPair p = schema::pair_from_json(doc);
      ValidityReport rep = check_base(p.mcq(), p.ring());
      if (rep.valid()) rep.merge(check_pair(p));
      if (!rep.valid()) return void(code = emit_report(kind, rep));
      const FiniteModule m = module_arg(build_module, p.ring(), budget);
      const Mcq ext = build_pair_extension(verify_pair(p), m, budget);
      emit(schema::extension_json(ext, p.mcq(),
                                  extension_projection(p.mcq().order(), m.order())));
    } else if (kind == "quadruple") {
      const Quadruple q = schema::quadruple_from_json(doc);
      ValidityReport rep = check_base(q.mcq(), q.ring());
      if (rep.valid()) rep.merge(check_quadruple(q));
      if (!rep.valid()) return void(code = emit_report(kind, rep));
      const FiniteModule m = module_arg(build_module, q.ring(), budget);
      const Mcq ext = build_quadruple_extension(verify_quadruple(q), m, budget);
      emit(schema::extension_json(ext, q.mcq(),
                                  extension_projection(q.mcq().order(), m.order())));
    } else {
      throw StructuralError("build-extension needs an alexpair or quadruple, got " + kind);
    }
  });

  auto* red = app.add_subcommand("reduce", "Reduce a quadruple to an Alexander pair");
  std::string reduce_file;
  red->add_option("file", reduce_file)->required();
  red->callback([&] {
    const Quadruple q = schema::quadruple_from_json(read_document(reduce_file));
    ValidityReport rep = check_base(q.mcq(), q.ring());
    if (rep.valid()) rep.merge(check_quadruple(q));
    if (!rep.valid()) return void(code = emit_report("quadruple", rep));
    const Quadruple v = verify_quadruple(q);
    emit(schema::reduction_json(v, reduce(v)));
  });

  auto* census = app.add_subcommand("census", "Brute-force census of pairs or quadruples");
  std::string census_target, census_mcq, census_ring;
  CensusOptions copt;
  bool records = false, summary_only = false, no_timing = false;
  census->add_option("target", census_target, "pairs or quadruples")
      ->required()
      ->check(CLI::IsMember({"pairs", "quadruples"}));
  census->add_option("--mcq", census_mcq, "MCQ document, cyclic:N or trivial:N")->required();
  census->add_option("--ring", census_ring, "Ring document or zn:N")->required();
  census->add_option("--sample", copt.sample_size, "Sample size when the space is too big");
  census->add_option("--seed", copt.seed, "Sampling seed");
  census->add_flag("--records", records, "Sampled mode: print one JSON line per sample first");
  census->add_flag("--summary-only", summary_only,
                   "Exhaustive mode: skip the per-assignment JSON lines");
  census->add_flag("--verify-reduction", copt.verify_reduction,
                   "Audit the reduction of every valid quadruple");
  census->add_flag("--no-timing", no_timing, "Omit elapsed_ms from the summary");
  census->callback([&] {
    copt.budget = g.make();
    copt.jobs = g.jobs;
    copt.keep_records = records || !summary_only;
    auto x = std::make_shared<const Mcq>(schema::mcq_from_json(read_ref(census_mcq)));
    auto r = std::make_shared<const FiniteRing>(schema::ring_from_json(read_ref(census_ring)));
    ValidityReport rep = check_base(*x, *r);
    if (!rep.valid()) return void(code = emit_report("census input", rep));
    const Census c = census_target == "pairs" ? enumerate_pairs(x, r, copt)
                                              : enumerate_quadruples(x, r, copt);
    const bool show = c.mode == CensusMode::exhaustive ? !summary_only : records;
    if (show)
      for (const auto& rec : c.records) emit(census_record_json(c, rec));
    emit(census_report(c, !no_timing));
    code = c.mismatches.empty() ? kValid : kAxiom;
  });

  auto* example = app.add_subcommand("example", "Built-in group ring Alexander pairs");
  std::string which, ex_ring = "zn:2", ex_group = "2", ex_family = "dihedral:3",
                     ex_hom = "identity";
  example->add_option("which", which, "2.5 (abelian group) or 2.6 (associated MCQ)")
      ->required()
      ->check(CLI::IsMember({"2.5", "2.6"}));
  example->add_option("--ring", ex_ring, "Coefficient ring zn:N");
  example->add_option("--group", ex_group, "2.5: cyclic factors k1,k2,...");
  example->add_option("--family", ex_family, "2.6: dihedral:N or a gfamily document");
  example->add_option("--hom", ex_hom, "2.6: identity, trivial or an id list");
  example->callback([&] {
    const Budget budget = g.make();
    const FiniteRing r = schema::ring_from_ref(ex_ring);
    if (which == "2.5") {
      emit(schema::to_json(example25_pair(r, parse_list(ex_group), budget)));
    } else {
      const GFamily fam = family_arg(ex_family, budget);
      emit(schema::to_json(example26_pair(fam, hom_arg(ex_hom, fam.group()), r, budget)));
    }
  });

  auto* iso = app.add_subcommand("iso", "Isomorphisms between two quandles or MCQs");
  std::string iso_a, iso_b;
  std::size_t iso_limit = 1;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();
  iso->add_option("--limit", iso_limit, "Stop after this many (0 = all)");
  iso->callback([&] {
    const json a = read_ref(iso_a), b = read_ref(iso_b);
    const std::string ka = a.is_string() ? "mcq" : schema::kind_of(a);
    const std::string kb = b.is_string() ? "mcq" : schema::kind_of(b);
    if (ka != kb || (ka != "quandle" && ka != "mcq")) {
      throw StructuralError("iso needs two quandles or two MCQs");
    }
    const std::size_t limit = iso_limit == 0 ? static_cast<std::size_t>(-1) : iso_limit;
    const auto found =
        ka == "quandle"
            ? find_quandle_isos(schema::quandle_from_json(a), schema::quandle_from_json(b), limit)
            : find_mcq_isos(schema::mcq_from_json(a), schema::mcq_from_json(b), limit);
    emit({{"kind", "isos"}, {"of", ka}, {"isomorphic", !found.empty()},
          {"count", found.size()}, {"isos", found}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: schema: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
